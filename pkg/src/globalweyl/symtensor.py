"""
Sparse tensors in (V (x) A)^{(x) m} and the symmetric power S^m(V (x) A).

A slot is a pair ``(weight, coeff_index)`` standing for v_weight (x) b_coeff.
A pure tensor is a tuple of slots; a Tensor maps pure tensors to nonzero
Fractions.  Symmetrization uses the full S_m orbit sum with multiplicity
(no 1/m! normalization).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

from .multiset import Multiset, multisets_of_size


class Tensor:
    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[tuple, Fraction] | None = None):
        self.rank = rank
        clean = {}
        for key, c in (terms or {}).items():
            if len(key) != rank:
                raise ValueError(f"slot sequence {key!r} does not have rank {rank}")
            if c:
                clean[key] = Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "Tensor":
        # caller guarantees ranks match and no zero coefficients
        t = cls.__new__(cls)
        t.rank = rank
        t.terms = terms
        return t

    @classmethod
    def pure(cls, slots: Sequence[tuple], coeff=1) -> "Tensor":
        slots = tuple(tuple(s) for s in slots)
        return cls(len(slots), {slots: Fraction(coeff)})

    @classmethod
    def scalar(cls, c=1) -> "Tensor":
        return cls(0, {(): Fraction(c)})

    @classmethod
    def zero(cls, rank: int) -> "Tensor":
        return cls(rank, {})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __add__(self, other: "Tensor") -> "Tensor":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return Tensor._raw(self.rank, acc)

    def __neg__(self):
        return Tensor._raw(self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c) -> "Tensor":
        c = Fraction(c)
        if not c:
            return Tensor.zero(self.rank)
        return Tensor._raw(self.rank, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def tensor(self, other: "Tensor") -> "Tensor":
        """Outer product self (x) other."""
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                acc[k1 + k2] = c1 * c2
        return Tensor._raw(self.rank + other.rank, acc)

    def permute(self, perm: Sequence[int]) -> "Tensor":
        """Apply sigma: slot j of the result is slot perm[j] of self."""
        acc = {}
        for k, c in self.terms.items():
            acc[tuple(k[p] for p in perm)] = c
        return Tensor._raw(self.rank, acc)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return f"Tensor({self.rank}, 0)"
        parts = []
        for k, c in self.sorted_terms():
            slots = "(x)".join(f"v{w}.b{b}" for w, b in k) or "1"
            parts.append(f"{c}*{slots}")
        return " + ".join(parts)


def combine(tensors: Iterable[Tensor], rank: int) -> Tensor:
    acc: dict = {}
    for t in tensors:
        for k, c in t.terms.items():
            acc[k] = acc.get(k, 0) + c
    return Tensor._raw(rank, {k: c for k, c in acc.items() if c})


def highest_weight_vector(m: int, unit_index: int) -> Tensor:
    """(v_1 (x) 1)^{(x) m}."""
    return Tensor.pure([(1, unit_index)] * m)


def power_of_slot(slot: tuple, m: int) -> Tensor:
    return Tensor.pure([slot] * m)


def distinct_permutations(seq: Sequence) -> Iterator[tuple]:
    """Distinct rearrangements of ``seq`` in lexicographic order."""
    items = sorted(seq)
    n = len(items)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(items)
        # next lexicographic permutation
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def _stabilizer_order(seq: Sequence) -> int:
    return prod(factorial(c) for c in Counter(seq).values())


def symmetrize(t: Tensor) -> Tensor:
    """sum_{sigma in S_m} sigma(t), computed over distinct arrangements."""
    acc: dict = {}
    for key, c in t.terms.items():
        weight = c * _stabilizer_order(key)
        for arr in distinct_permutations(key):
            acc[arr] = acc.get(arr, 0) + weight
    return Tensor._raw(t.rank, {k: c for k, c in acc.items() if c})


def is_symmetric(t: Tensor) -> bool:
    for j in range(t.rank - 1):
        perm = list(range(t.rank))
        perm[j], perm[j + 1] = perm[j + 1], perm[j]
        if t.permute(perm) != t:
            return False
    return True


# -- basis tuples (phi_1, ..., phi_n)

BasisTuple = tuple  # tuple of Multiset, one per weight index


def tuple_size(parts: Sequence[Multiset]) -> int:
    return sum(p.size for p in parts)


def w_slots(parts: Sequence[Multiset]) -> tuple:
    """Slot sequence of w(phi_1, ..., phi_n): weight ascending, then basis index."""
    slots = []
    for weight, phi in enumerate(parts, start=1):
        for b in phi:
            slots.append((weight, b))
    return tuple(slots)


def w_vector(parts: Sequence[Multiset], m: int | None = None) -> Tensor:
    if m is not None and tuple_size(parts) != m:
        raise ValueError(f"tuple has size {tuple_size(parts)}, expected {m}")
    return Tensor.pure(w_slots(parts))


def v_vector(parts: Sequence[Multiset], m: int | None = None) -> Tensor:
    return symmetrize(w_vector(parts, m))


def monomial_vector(parts: Sequence[Multiset]) -> Tensor:
    """Sum over distinct arrangements of w, i.e. v / prod phi_j(b)!."""
    key = w_slots(parts)
    return Tensor._raw(len(key), {arr: Fraction(1) for arr in distinct_permutations(key)})


def sym_dim(n: int, d: int, m: int) -> int:
    return comb(n * d + m - 1, m)


def enumerate_basis_tuples(n: int, d: int, m: int) -> list[tuple]:
    """All (phi_1..phi_n) over basis indices 0..d-1 with total size m.

    Sorted lexicographically on the parts, each part compared by its
    sorted (index, multiplicity) pairs.
    """
    keys = list(range(d))

    def rec(j, remaining):
        if j == n - 1:
            for last in multisets_of_size(keys, remaining):
                yield (last,)
            return
        for s in range(remaining + 1):
            for head in multisets_of_size(keys, s):
                for tail in rec(j + 1, remaining - s):
                    yield (head,) + tail

    out = list(rec(0, m))
    out.sort(key=lambda parts: tuple(p.items() for p in parts))
    return out


def standard_basis(n: int, d: int, k: int) -> list[Tensor]:
    """Every pure tensor of rank k, in canonical slot order."""
    slots = [(w, b) for w in range(1, n + 1) for b in range(d)]
    return [Tensor.pure(seq) for seq in product(slots, repeat=k)]


def tensor_to_json(t: Tensor) -> dict:
    return {"rank": t.rank, "terms": [
        {"coeff": str(c), "slots": [[w, b] for w, b in key]} for key, c in t.sorted_terms()]}


def tensor_from_json(data: dict) -> Tensor:
    rank = data["rank"]
    terms = {}
    for term in data["terms"]:
        key = tuple((int(w), int(b)) for w, b in term["slots"])
        terms[key] = terms.get(key, 0) + Fraction(term["coeff"])
    return Tensor(rank, terms)
