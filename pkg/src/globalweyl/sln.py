"""
sl_n in its Chevalley basis and the natural module V = Q^n.

Generators are small named tuples ``Gen(kind, lo, hi, sign)``:

* ``H(i)``            h_i = e_{i,i} - e_{i+1,i+1}
* ``X(i, j, +1)``     x_alpha = e_{i,j+1} for alpha = alpha_i + ... + alpha_j
* ``X(i, j, -1)``     x_{-alpha} = e_{j+1,i}

Everything runs on weight-index arithmetic; explicit matrices are only
built by ``matrix`` for validation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class Gen(NamedTuple):
    kind: str  # "H" or "X"
    lo: int
    hi: int
    sign: int  # 0 for H, +1/-1 for X

    def __repr__(self):
        if self.kind == "H":
            return f"h{self.lo}"
        s = "+" if self.sign > 0 else "-"
        if self.lo == self.hi:
            return f"x{s}{self.lo}"
        return f"x{s}({self.lo},{self.hi})"

    def encode(self) -> list:
        if self.kind == "H":
            return ["H", self.lo]
        return ["X", self.lo, self.hi, self.sign]

    @classmethod
    def decode(cls, data) -> "Gen":
        if data[0] == "H" and len(data) == 2:
            return H(data[1])
        if data[0] == "X" and len(data) == 4:
            return X(data[1], data[2], data[3])
        raise ValueError(f"bad generator encoding {data!r}")


def H(i: int) -> Gen:
    return Gen("H", i, i, 0)


def X(lo: int, hi: int, sign: int) -> Gen:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if lo > hi:
        raise ValueError("root needs lo <= hi")
    return Gen("X", lo, hi, sign)


def x_pos(i: int) -> Gen:
    return X(i, i, 1)


def x_neg(i: int) -> Gen:
    return X(i, i, -1)


def check_gen(z: Gen, n: int) -> None:
    if z.kind == "H":
        ok = 1 <= z.lo <= n - 1
    else:
        ok = 1 <= z.lo <= z.hi <= n - 1
    if not ok:
        raise ValueError(f"generator {z!r} is not in sl_{n}")


def positive_roots(n: int) -> list[tuple[int, int]]:
    """Pairs (i, j), 1 <= i <= j <= n-1, for alpha_i + ... + alpha_j."""
    if n < 2:
        raise ValueError("need n >= 2")
    return [(i, j) for i in range(1, n) for j in range(i, n)]


def cartan(n: int) -> list[Gen]:
    return [H(i) for i in range(1, n)]


def positive_gens(n: int) -> list[Gen]:
    return [X(i, j, 1) for i, j in positive_roots(n)]


def negative_gens(n: int) -> list[Gen]:
    return [X(i, j, -1) for i, j in positive_roots(n)]


def chevalley_basis(n: int) -> list[Gen]:
    """n^- , h, n^+ in that order; n^2 - 1 elements."""
    return negative_gens(n) + cartan(n) + positive_gens(n)


# -- matrix-unit calculus

def matrix_units(z: Gen) -> dict:
    """z as a combination {(row, col): coeff} of matrix units, 1-based."""
    if z.kind == "H":
        return {(z.lo, z.lo): 1, (z.lo + 1, z.lo + 1): -1}
    if z.sign > 0:
        return {(z.lo, z.hi + 1): 1}
    return {(z.hi + 1, z.lo): 1}


def matrix(z: Gen, n: int) -> list[list[int]]:
    out = [[0] * n for _ in range(n)]
    for (r, c), v in matrix_units(z).items():
        out[r - 1][c - 1] += v
    return out


def unit_to_gen(r: int, c: int) -> Gen:
    """Off-diagonal matrix unit e_{r,c} as a root vector."""
    if r < c:
        return X(r, c - 1, 1)
    if r > c:
        return X(c, r - 1, -1)
    raise ValueError("diagonal unit is not a root vector")


def from_matrix_units(units: dict) -> dict:
    """Re-express a traceless combination of matrix units in the Chevalley basis."""
    out: dict = {}
    diag: dict = {}
    for (r, c), v in units.items():
        if not v:
            continue
        if r == c:
            diag[r] = diag.get(r, 0) + v
        else:
            g = unit_to_gen(r, c)
            out[g] = out.get(g, 0) + v
    if diag:
        top = max(diag)
        if sum(diag.values()) != 0:
            raise ValueError("diagonal part is not traceless")
        # sum_a c_a e_aa = sum_i (c_1 + ... + c_i) h_i
        running = 0
        for i in range(1, top):
            running += diag.get(i, 0)
            if running:
                out[H(i)] = out.get(H(i), 0) + running
    return {g: Fraction(v) for g, v in sorted(out.items()) if v}


def bracket(z: Gen, w: Gen) -> dict:
    """[z, w] = zw - wz in the Chevalley basis, as {Gen: Fraction}."""
    zu, wu = matrix_units(z), matrix_units(w)
    acc: dict = {}
    for (a, b), x in zu.items():
        for (c, d), y in wu.items():
            if b == c:
                acc[(a, d)] = acc.get((a, d), 0) + x * y
            if d == a:
                acc[(c, b)] = acc.get((c, b), 0) - x * y
    return from_matrix_units(acc)


def act_natural(z: Gen, k: int) -> dict:
    """z . v_k as {weight index: coeff}."""
    if z.kind == "H":
        if k == z.lo:
            return {k: 1}
        if k == z.lo + 1:
            return {k: -1}
        return {}
    if z.sign > 0:
        return {z.lo: 1} if k == z.hi + 1 else {}
    return {z.hi + 1: 1} if k == z.lo else {}
