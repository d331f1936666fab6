"""
Exact rank of sparse rational matrices by fraction-free elimination.

Rows are dicts ``{column: value}``.  Each row is scaled to integers, then a
Bareiss-style sweep runs over the columns in order: every update
``(p * row - a * pivot_row) / prev`` is an exact integer division (the
entries are minors of the original matrix), which is asserted.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence


class RationalMatrix:
    """Sparse rows over a fixed, ordered list of column labels."""

    def __init__(self, rows: Sequence[Mapping], columns: Sequence | None = None):
        rows = [{k: Fraction(v) for k, v in r.items() if v} for r in rows]
        if columns is None:
            columns = sorted({k for r in rows for k in r})
        self.columns = list(columns)
        colset = set(self.columns)
        for r in rows:
            extra = set(r) - colset
            if extra:
                raise ValueError(f"row uses unknown columns {sorted(extra)[:3]}")
        self.rows = rows

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> "RationalMatrix":
        width = len(dense[0]) if dense else 0
        rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
        return cls(rows, list(range(width)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def dense(self) -> list[list[Fraction]]:
        return [[r.get(c, Fraction(0)) for c in self.columns] for r in self.rows]


def _integer_row(row: Mapping) -> dict:
    den = lcm(*(Fraction(v).denominator for v in row.values())) if row else 1
    return {k: int(Fraction(v) * den) for k, v in row.items() if v}


def rank(mat: RationalMatrix | Sequence[Sequence]) -> int:
    if not isinstance(mat, RationalMatrix):
        mat = RationalMatrix.from_dense(mat)
    order = {c: i for i, c in enumerate(mat.columns)}
    rows = [{order[k]: v for k, v in _integer_row(r).items()} for r in mat.rows]
    rows = [r for r in rows if r]
    prev = 1
    r = 0
    ncols = len(mat.columns)
    active = rows
    for col in range(ncols):
        if not active:
            break
        pivot_at = None
        for idx, row in enumerate(active):
            if row.get(col):
                pivot_at = idx
                break
        if pivot_at is None:
            continue
        pivot = active.pop(pivot_at)
        p = pivot[col]
        rest = []
        for row in active:
            a = row.get(col, 0)
            new = {}
            if a:
                keys = set(row) | set(pivot)
                for k in keys:
                    if k <= col:
                        continue
                    num = p * row.get(k, 0) - a * pivot.get(k, 0)
                    if num:
                        q, rem = divmod(num, prev)
                        assert rem == 0, "non-exact Bareiss division"
                        new[k] = q
            else:
                for k, v in row.items():
                    q, rem = divmod(p * v, prev)
                    assert rem == 0, "non-exact Bareiss division"
                    new[k] = q
            if new:
                rest.append(new)
        active = rest
        prev = p
        r += 1
    return r

