"""
Finite-dimensional commutative unital algebras over Q, given by a basis
and a table of structure constants.

Scalars are ``fractions.Fraction`` throughout.  The basis always contains
the unit as a distinguished element (``unit_index``) so that it can serve
as a multiset key.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .multiset import Multiset

Scalar = Fraction

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class AlgebraError(ValueError):
    pass


class AlgebraSchemaError(AlgebraError):
    pass


class CommutativityError(AlgebraError):
    def __init__(self, i, j):
        super().__init__(f"b{i}*b{j} != b{j}*b{i} (basis pair ({i},{j}))")
        self.indices = (i, j)


class AssociativityError(AlgebraError):
    def __init__(self, i, j, k):
        super().__init__(f"(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k}) (basis triple ({i},{j},{k}))")
        self.indices = (i, j, k)


class UnitLawError(AlgebraError):
    def __init__(self, unit, j):
        super().__init__(f"unit b{unit} times b{j} is not b{j} (basis pair ({unit},{j}))")
        self.indices = (unit, j)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with q > 0 and the fraction in lowest terms."""
    if not isinstance(text, str):
        raise AlgebraSchemaError(f"rational must be a string, got {text!r}")
    mo = _RATIONAL.match(text)
    if mo is None:
        raise AlgebraSchemaError(f"malformed rational {text!r}")
    p = int(mo.group(1))
    if mo.group(2) is None:
        return Fraction(p)
    q = int(mo.group(2))
    if q == 0:
        raise AlgebraSchemaError(f"zero denominator in {text!r}")
    value = Fraction(p, q)
    if value.denominator != q:
        raise AlgebraSchemaError(f"rational {text!r} is not in lowest terms")
    return value


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _sparse(vec: Mapping[int, Fraction]) -> tuple:
    return tuple(sorted((k, Fraction(v)) for k, v in vec.items() if v))


@dataclass(frozen=True)
class AlgebraSpec:
    """Basis labels, unit index and ``mul[i][j]`` = sparse coords of b_i*b_j."""

    labels: tuple
    unit_index: int
    mul: tuple
    name: str = field(default="", compare=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def label_map(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def basis_product(self, i: int, j: int) -> tuple:
        return self.mul[i][j]

    def basis(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, {i: Fraction(1)})

    def unit(self) -> "AlgebraElement":
        return self.basis(self.unit_index)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def element(self, coords: Mapping[int, object]) -> "AlgebraElement":
        return AlgebraElement(self, {k: Fraction(v) for k, v in coords.items()})


class AlgebraElement:
    """Element of A as sparse rational coordinates over the basis."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: AlgebraSpec, coords: Mapping[int, Fraction]):
        self.spec = spec
        self.coords = {k: v for k, v in coords.items() if v}
        for k in self.coords:
            if not 0 <= k < spec.dim:
                raise AlgebraError(f"basis index {k} out of range for dim {spec.dim}")

    def _check(self, other: "AlgebraElement"):
        if self.spec != other.spec:
            raise AlgebraError("algebra elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.coords)
        for k, v in other.coords.items():
            acc[k] = acc.get(k, 0) + v
        return AlgebraElement(self.spec, acc)

    def __neg__(self):
        return AlgebraElement(self.spec, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        c = Fraction(other)
        return AlgebraElement(self.spec, {k: c * v for k, v in self.coords.items()})

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and self.coords == other.coords

    def __bool__(self):
        return bool(self.coords)

    def __repr__(self):
        if not self.coords:
            return "0"
        return " + ".join(f"{v}*{self.spec.labels[k]}" for k, v in sorted(self.coords.items()))


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    spec = x.spec
    acc: dict = {}
    for i, a in x.coords.items():
        for j, b in y.coords.items():
            for k, c in spec.mul[i][j]:
                acc[k] = acc.get(k, 0) + a * b * c
    return AlgebraElement(spec, acc)


def pi(psi: Multiset, spec: AlgebraSpec) -> AlgebraElement:
    """Product of the basis elements of ``psi`` (with multiplicity); pi(empty) = 1."""
    out = spec.unit()
    for k in psi:
        if not 0 <= k < spec.dim:
            raise AlgebraError(f"basis index {k} out of range")
        out = alg_mul(out, spec.basis(k))
        if not out:
            break
    return out


def trunc_poly(N: int) -> AlgebraSpec:
    """Q[t]/(t^N) with basis 1, t, ..., t^(N-1)."""
    if N < 1:
        raise AlgebraError("truncation degree must be >= 1")
    labels = tuple("1" if e == 0 else ("t" if e == 1 else f"t^{e}") for e in range(N))
    mul = tuple(
        tuple(((i + j, Fraction(1)),) if i + j < N else () for j in range(N))
        for i in range(N))
    return AlgebraSpec(labels, 0, mul, name=f"trunc:{N}")


def validate(spec: AlgebraSpec) -> AlgebraSpec:
    """Total check of unit law, commutativity and associativity."""
    d = spec.dim
    u = spec.unit_index
    for j in range(d):
        if spec.mul[u][j] != ((j, Fraction(1)),):
            raise UnitLawError(u, j)
    for i in range(d):
        for j in range(i + 1, d):
            if spec.mul[i][j] != spec.mul[j][i]:
                raise CommutativityError(i, j)
    basis = [spec.basis(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            left_ij = alg_mul(basis[i], basis[j])
            for k in range(d):
                if alg_mul(left_ij, basis[k]) != alg_mul(basis[i], alg_mul(basis[j], basis[k])):
                    raise AssociativityError(i, j, k)
    return spec


def load_algebra(document, name: str = "") -> AlgebraSpec:
    """Build and validate an AlgebraSpec from a JSON document (str or parsed)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise AlgebraSchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise AlgebraSchemaError("algebra document must be an object")
    missing = {"basis", "unit_index", "mul"} - set(document)
    if missing:
        raise AlgebraSchemaError(f"missing keys: {sorted(missing)}")
    basis = document["basis"]
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise AlgebraSchemaError("basis must be a nonempty list of strings")
    if len(set(basis)) != len(basis):
        raise AlgebraSchemaError("basis labels must be distinct")
    d = len(basis)
    unit = document["unit_index"]
    if not isinstance(unit, int) or isinstance(unit, bool) or not 0 <= unit < d:
        raise AlgebraSchemaError("unit_index must be a valid basis index")
    table = document["mul"]
    if not isinstance(table, list) or len(table) != d:
        raise AlgebraSchemaError(f"mul must be a {d}x{d} table")
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != d:
            raise AlgebraSchemaError(f"mul[{i}] must have {d} entries")
        entries = []
        for j, cell in enumerate(row):
            if not isinstance(cell, list):
                raise AlgebraSchemaError(f"mul[{i}][{j}] must be a list")
            vec: dict = {}
            for pair in cell:
                if (not isinstance(pair, list) or len(pair) != 2
                        or not isinstance(pair[0], int) or isinstance(pair[0], bool)
                        or not 0 <= pair[0] < d):
                    raise AlgebraSchemaError(f"bad coordinate {pair!r} in mul[{i}][{j}]")
                if pair[0] in vec:
                    raise AlgebraSchemaError(f"repeated index {pair[0]} in mul[{i}][{j}]")
                vec[pair[0]] = parse_rational(pair[1])
            entries.append(_sparse(vec))
        rows.append(tuple(entries))
    spec = AlgebraSpec(tuple(basis), unit, tuple(rows), name=name)
    return validate(spec)


def dump_algebra(spec: AlgebraSpec) -> dict:
    return {
        "basis": list(spec.labels),
        "unit_index": spec.unit_index,
        "mul": [[[[k, format_rational(c)] for k, c in cell] for cell in row] for row in spec.mul],
    }


def algebra_from_literal(text: str) -> AlgebraSpec:
    """``trunc:N`` or ``file:PATH``."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise AlgebraError(f"bad algebra literal {text!r}")
    if kind == "trunc":
        try:
            N = int(arg)
        except ValueError:
            raise AlgebraError(f"bad truncation degree in {text!r}") from None
        return trunc_poly(N)
    if kind == "file":
        with open(arg) as fh:
            return load_algebra(fh.read(), name=text)
    raise AlgebraError(f"unknown algebra kind {kind!r}")
