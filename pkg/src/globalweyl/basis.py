"""
The basis {q(phi_1..phi_n) w_{m omega_1}} of the global Weyl module, realized
inside S^m(V (x) A) by sending w_{m omega_1} to (v_1 (x) 1)^{(x) m}.

Provides the enumeration of index tuples, the image of each basis element,
the exact rank certificate and the sign/scale analysis of each image
against v(phi_1..phi_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import AlgebraSpec, format_rational
from .envelope import act, gen
from .linalg import RationalMatrix, rank
from .multiset import Multiset, format_literal
from .qconstruct import act_q_tuple
from .sln import H, cartan, positive_gens, x_neg
from .symtensor import (Tensor, enumerate_basis_tuples, highest_weight_vector,
                        is_symmetric, sym_dim, v_vector)

DEFAULT_GUARD = 400


class GuardError(ValueError):
    pass


class ProportionalityError(AssertionError):
    pass


def enumerate_tuples(n: int, spec: AlgebraSpec, m: int) -> list[tuple]:
    return enumerate_basis_tuples(n, spec.dim, m)


def tuple_literal(parts: Sequence[Multiset], spec: AlgebraSpec) -> str:
    return ";".join(format_literal(p, spec.labels) for p in parts)


def basis_image(parts: Sequence[Multiset], n: int, m: int, spec: AlgebraSpec) -> Tensor:
    """q(phi_1..phi_n) . (v_1 (x) 1)^{(x) m}."""
    if len(parts) != n:
        raise ValueError(f"tuple has {len(parts)} parts, expected n={n}")
    if sum(p.size for p in parts) != m:
        raise ValueError(f"tuple sizes do not sum to m={m}")
    start = highest_weight_vector(m, spec.unit_index)
    if m == 0:
        return start
    return act_q_tuple(parts, start, spec)


def column_slots(n: int, spec: AlgebraSpec) -> list[tuple]:
    return [(w, b) for w in range(1, n + 1) for b in range(spec.dim)]


def check_guard(n: int, m: int, spec: AlgebraSpec, guard: int | None):
    limit = DEFAULT_GUARD if guard is None else guard
    dim = sym_dim(n, spec.dim, m)
    if dim > limit:
        raise GuardError(f"sym_dim({n},{spec.dim},{m}) = {dim} exceeds guard {limit}")


def basis_matrix(n: int, m: int, spec: AlgebraSpec, guard: int | None = None,
                 images: Sequence[Tensor] | None = None) -> RationalMatrix:
    """One row per tuple (enumeration order), columns over all pure tensors."""
    check_guard(n, m, spec, guard)
    if images is None:
        images = [basis_image(p, n, m, spec) for p in enumerate_tuples(n, spec, m)]
    columns = list(product(column_slots(n, spec), repeat=m))
    return RationalMatrix([t.terms for t in images], columns)


def proportionality(image: Tensor, target: Tensor) -> Fraction | None:
    """lam with image == lam * target, or None if there is no such lam."""
    if not target:
        return None
    if set(image.terms) != set(target.terms):
        return None
    key = next(iter(target.terms))
    lam = image.terms[key] / target.terms[key]
    if all(image.terms[k] == lam * c for k, c in target.terms.items()):
        return lam
    return None


def weighted_exponent(parts: Sequence[Multiset]) -> int:
    """sum_j j |phi_j|; reported under the ``paper_exponent_match`` key."""
    return sum(j * p.size for j, p in enumerate(parts, start=1))


def capped_exponent(parts: Sequence[Multiset]) -> int:
    """sum_{j<n} j |phi_j| + (n-1) |phi_n|; the ``alt_exponent_match`` key."""
    n = len(parts)
    return sum(j * p.size for j, p in enumerate(parts[:-1], start=1)) + (n - 1) * parts[-1].size


@dataclass(frozen=True)
class SignRecord:
    parts: tuple
    ratio: Fraction
    weighted_sign: int
    capped_sign: int

    @property
    def observed(self) -> int:
        return 1 if self.ratio > 0 else -1

    @property
    def unit(self) -> bool:
        return abs(self.ratio) == 1

    @property
    def weighted_match(self) -> bool:
        return self.observed == self.weighted_sign

    @property
    def capped_match(self) -> bool:
        return self.observed == self.capped_sign

    def to_json(self, spec: AlgebraSpec) -> dict:
        return {
            "tuple": tuple_literal(self.parts, spec),
            "observed": self.observed,
            "ratio": format_rational(self.ratio),
            "paper_exponent_match": self.weighted_match,
            "alt_exponent_match": self.capped_match,
        }


def sign_record(parts: Sequence[Multiset], image: Tensor, strict: bool = True) -> SignRecord:
    lam = proportionality(image, v_vector(parts))
    if lam is None:
        raise ProportionalityError(f"image of {parts!r} is not a multiple of v")
    if strict and abs(lam) != 1:
        raise ProportionalityError(f"image of {parts!r} is {lam} * v, not +-v")
    return SignRecord(tuple(parts), lam,
                      (-1) ** weighted_exponent(parts), (-1) ** capped_exponent(parts))


def sign_analysis(n: int, m: int, spec: AlgebraSpec, strict: bool = True,
                  guard: int | None = None) -> list[SignRecord]:
    """Compare every basis image with v(phi_1..phi_n).

    With ``strict`` a ratio other than +-1 raises ProportionalityError;
    otherwise it is recorded.  A non-proportional image always raises.
    """
    check_guard(n, m, spec, guard)
    return [sign_record(p, basis_image(p, n, m, spec), strict)
            for p in enumerate_tuples(n, spec, m)]


def winning_formula(records: Sequence[SignRecord]) -> str | None:
    """"paper" (weighted) or "alternate" (capped), whichever fits every record."""
    if all(r.weighted_match for r in records):
        return "paper"
    if all(r.capped_match for r in records):
        return "alternate"
    return None


def highest_weight_check(n: int, m: int, spec: AlgebraSpec):
    """Defining relations of W_A(m omega_1) on (v_1 (x) 1)^{(x) m}.

    Returns ``(ok, counterexample)``; the counterexample is a dict naming the
    failed relation and its inputs.
    """
    hw = highest_weight_vector(m, spec.unit_index)
    for z in positive_gens(n):
        for b in range(spec.dim):
            out = act(gen(z, spec.basis(b)), hw, spec)
            if out:
                return False, {"relation": "annihilation", "gen": z.encode(), "basis_index": b}
    for h in cartan(n):
        eig = m if h.lo == 1 else 0
        out = act(gen(h, spec.unit()), hw, spec)
        if out != hw * eig:
            return False, {"relation": "weight", "gen": h.encode(), "expected": eig}
    for i in range(1, n):
        power = (m if i == 1 else 0) + 1
        t = hw
        lower = gen(x_neg(i), spec.unit())
        for _ in range(power):
            t = act(lower, t, spec)
        if t:
            return False, {"relation": "power", "i": i, "exponent": power}
    return True, None


def weight_check(parts: Sequence[Multiset], spec: AlgebraSpec) -> bool:
    """h_j (x) 1 acts on v(phi) by |phi_j| - |phi_{j+1}|."""
    v = v_vector(parts)
    for j in range(1, len(parts)):
        eig = parts[j - 1].size - parts[j].size
        if act(gen(H(j), spec.unit()), v, spec) != v * eig:
            return False
    return True


def certificate(n: int, m: int, spec: AlgebraSpec, guard: int | None = None) -> dict:
    """Rank certificate with sign report, byte-stable under json.dumps."""
    check_guard(n, m, spec, guard)
    tuples = enumerate_tuples(n, spec, m)
    images = [basis_image(p, n, m, spec) for p in tuples]
    mat = basis_matrix(n, m, spec, guard, images=images)
    records = []
    for p, img in zip(tuples, images):
        try:
            records.append(sign_record(p, img, strict=False).to_json(spec))
        except ProportionalityError:
            records.append({"tuple": tuple_literal(p, spec), "observed": 0, "ratio": None,
                            "paper_exponent_match": False, "alt_exponent_match": False})
    return {
        "n": n,
        "m": m,
        "algebra": spec.name or "custom",
        "tuples": [tuple_literal(p, spec) for p in tuples],
        "columns": {"slots": [list(s) for s in column_slots(n, spec)], "rank_m_product": m},
        "rank": rank(mat),
        "expected": sym_dim(n, spec.dim, m),
        "symmetric": all(is_symmetric(t) for t in images),
        "signs": records,
    }
