"""
Finitely supported multisets over an ordered key domain.

A multiset is stored as a sorted tuple of ``(key, multiplicity)`` pairs
with no zero multiplicities, so equality, hashing and ordering are all
structural.  Enumerations (submultisets, compositions, multisets of a
given size) come out in a fixed lexicographic order, which downstream
code relies on for stable row/column orders.
"""

from __future__ import annotations

from functools import reduce
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator, Mapping


class MultisetError(ValueError):
    pass


class Multiset:
    """Immutable multiplicity function with finite support."""

    __slots__ = ("_items", "_size", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        if isinstance(entries, Mapping):
            pairs = entries.items()
        else:
            pairs = entries
        acc: dict = {}
        for key, mult in pairs:
            if not isinstance(mult, int) or mult < 0:
                raise MultisetError(f"bad multiplicity {mult!r} for key {key!r}")
            if mult:
                acc[key] = acc.get(key, 0) + mult
        self._items = tuple(sorted(acc.items()))
        self._size = sum(acc.values())
        self._hash = hash(self._items)

    @classmethod
    def from_keys(cls, keys: Iterable) -> "Multiset":
        """Multiset counting each occurrence in ``keys``."""
        acc: dict = {}
        for k in keys:
            acc[k] = acc.get(k, 0) + 1
        return cls(acc)

    # -- basic accessors

    def items(self) -> tuple:
        return self._items

    def support(self) -> tuple:
        return tuple(k for k, _ in self._items)

    def __getitem__(self, key) -> int:
        for k, m in self._items:
            if k == key:
                return m
        return 0

    def __len__(self) -> int:
        return self._size

    @property
    def size(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return bool(self._items)

    def __iter__(self) -> Iterator:
        """Iterate over keys with repetition, in key order."""
        for k, m in self._items:
            for _ in range(m):
                yield k

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Multiset") -> bool:
        return self._items < other._items

    def __repr__(self) -> str:
        if not self._items:
            return "Multiset()"
        body = ", ".join(f"{k!r}: {m}" for k, m in self._items)
        return "Multiset({" + body + "})"

    # -- monoid structure

    def __add__(self, other: "Multiset") -> "Multiset":
        acc = dict(self._items)
        for k, m in other._items:
            acc[k] = acc.get(k, 0) + m
        return Multiset(acc)

    def __sub__(self, other: "Multiset") -> "Multiset":
        return subtract(self, other)

    def __mul__(self, c: int) -> "Multiset":
        if not isinstance(c, int) or c < 0:
            raise MultisetError(f"can only scale by a nonnegative int, got {c!r}")
        return Multiset({k: c * m for k, m in self._items})

    __rmul__ = __mul__


EMPTY = Multiset()


def size(chi: Multiset) -> int:
    return chi.size


def characteristic(s) -> Multiset:
    return Multiset({s: 1})


def is_subset(psi: Multiset, chi: Multiset) -> bool:
    return all(m <= chi[k] for k, m in psi.items())


def subtract(chi: Multiset, psi: Multiset) -> Multiset:
    if not is_subset(psi, chi):
        raise MultisetError(f"{psi!r} is not contained in {chi!r}")
    acc = dict(chi.items())
    for k, m in psi.items():
        acc[k] -= m
    return Multiset(acc)


def msum(parts: Iterable[Multiset]) -> Multiset:
    return reduce(lambda a, b: a + b, parts, EMPTY)


def multinomial(psi: Multiset) -> int:
    """|psi|! / prod psi(s)!"""
    return factorial(psi.size) // prod(factorial(m) for _, m in psi.items())


def factorial_weight(psi: Multiset) -> int:
    """prod psi(s)!, the stabilizer order of an arrangement of psi."""
    return prod(factorial(m) for _, m in psi.items())


def submultisets(chi: Multiset) -> list[Multiset]:
    keys = chi.support()
    ranges = [range(m + 1) for _, m in chi.items()]
    return [Multiset(zip(keys, ms)) for ms in product(*ranges)]


def weak_compositions(total: int, k: int) -> list[tuple[int, ...]]:
    """All k-tuples of nonnegative ints summing to ``total``, lexicographic."""
    if k < 1:
        raise MultisetError("k must be positive")
    if k == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in weak_compositions(total - first, k - 1):
            out.append((first,) + rest)
    return out


def compositions(chi: Multiset, k: int) -> list[tuple[Multiset, ...]]:
    """Ordered k-tuples of submultisets of ``chi`` summing to ``chi``.

    Length is prod_s C(chi(s)+k-1, k-1).
    """
    if k < 1:
        raise MultisetError("k must be positive")
    keys = chi.support()
    per_key = [weak_compositions(m, k) for _, m in chi.items()]
    out = []
    for choice in product(*per_key):
        out.append(tuple(
            Multiset({key: parts[j] for key, parts in zip(keys, choice)})
            for j in range(k)))
    return out


def count_compositions(chi: Multiset, k: int) -> int:
    return prod(comb(m + k - 1, k - 1) for _, m in chi.items())


def multisets_of_size(keys: Iterable, s: int) -> list[Multiset]:
    """All multisets of size ``s`` supported on ``keys``."""
    keys = sorted(keys)
    if not keys:
        return [EMPTY] if s == 0 else []
    return [Multiset(zip(keys, ms)) for ms in weak_compositions(s, len(keys))]


def multisets_up_to(keys: Iterable, bound: int) -> list[Multiset]:
    keys = list(keys)
    return [psi for s in range(bound + 1) for psi in multisets_of_size(keys, s)]


# -- CLI literal syntax: "label:mult,label:mult", empty is "-"

def parse_literal(text: str, labels: Mapping[str, object] | None = None) -> Multiset:
    """Parse ``1:2,t:1`` into a Multiset.

    With ``labels`` given, each label is mapped through it (typically
    label -> basis index); unknown labels raise MultisetError.
    """
    text = text.strip()
    if text == "-":
        return EMPTY
    if not text:
        raise MultisetError("empty multiset literal (use '-')")
    acc: dict = {}
    for chunk in text.split(","):
        label, sep, mult = chunk.strip().rpartition(":")
        if not sep or not label:
            raise MultisetError(f"bad multiset entry {chunk!r}, expected label:mult")
        try:
            m = int(mult)
        except ValueError:
            raise MultisetError(f"bad multiplicity in {chunk!r}") from None
        if m < 0:
            raise MultisetError(f"negative multiplicity in {chunk!r}")
        if labels is not None:
            if label not in labels:
                raise MultisetError(f"unknown label {label!r}")
            key = labels[label]
        else:
            key = label
        acc[key] = acc.get(key, 0) + m
    return Multiset(acc)


def format_literal(chi: Multiset, names=None) -> str:
    if not chi:
        return "-"
    name = (lambda k: str(k)) if names is None else (lambda k: names[k])
    return ",".join(f"{name(k)}:{m}" for k, m in chi.items())


def parse_tuple(text: str, labels: Mapping[str, object] | None = None) -> tuple:
    """``;``-separated multiset literals, e.g. ``1:1;-;t:2``."""
    return tuple(parse_literal(chunk, labels) for chunk in text.split(";"))
