"""Parameter sweeps behind the scripts in ``scripts/``.

Each sweep takes a frozen dataclass config and returns plain rows (dicts)
so the scripts only handle argument parsing and printing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import basis as wb
from .algebra import format_rational, trunc_poly
from .linalg import rank
from .multiset import factorial_weight
from .symtensor import sym_dim
from .verify import run_suite


@dataclass(frozen=True)
class DeskScaleConfig:
    ns: tuple = (2, 3, 4)
    trunc_degrees: tuple = (1, 2, 3)
    ms: tuple = (0, 1, 2, 3)
    guard: int = wb.DEFAULT_GUARD

    def cells(self):
        for n in self.ns:
            for N in self.trunc_degrees:
                for m in self.ms:
                    if sym_dim(n, N, m) <= self.guard:
                        yield n, N, m


def run_desk_scale(cfg: DeskScaleConfig) -> list[dict]:
    """Rank of the basis matrix for every cell within the guard."""
    rows = []
    for n, N, m in cfg.cells():
        t0 = time.perf_counter()
        r = rank(wb.basis_matrix(n, m, trunc_poly(N), cfg.guard))
        rows.append({"n": n, "N": N, "m": m, "rank": r, "expected": sym_dim(n, N, m),
                     "seconds": round(time.perf_counter() - t0, 4)})
    return rows


@dataclass(frozen=True)
class SignReportConfig:
    n: int = 3
    m: int = 2
    trunc_degree: int = 2
    guard: int = wb.DEFAULT_GUARD


def run_sign_report(cfg: SignReportConfig) -> dict:
    """Ratio of each basis image to its v-vector, and which sign rule fits.

    ``scaled_ratio`` is the ratio times prod phi_j(b)!, which is +-1 on
    every tuple seen so far.
    """
    spec = trunc_poly(cfg.trunc_degree)
    records = wb.sign_analysis(cfg.n, cfg.m, spec, strict=False, guard=cfg.guard)
    rows = []
    for rec in records:
        weight = 1
        for p in rec.parts:
            weight *= factorial_weight(p)
        rows.append({**rec.to_json(spec),
                     "scaled_ratio": format_rational(rec.ratio * weight)})
    return {
        "n": cfg.n, "m": cfg.m, "algebra": spec.name,
        "rows": rows,
        "unit_ratios": sum(r.unit for r in records),
        "total": len(records),
        "weighted_rule_matches": sum(r.weighted_match for r in records),
        "capped_rule_matches": sum(r.capped_match for r in records),
        "winner": wb.winning_formula(records),
    }


@dataclass(frozen=True)
class LemmaSweepConfig:
    ns: tuple = (2, 3)
    trunc_degree: int = 2
    suites: tuple = ("action_zero", "qivi", "delta")
    bounds: dict = field(default_factory=lambda: {"action_zero": 4, "qivi": 3, "delta": 3})


def run_lemma_sweep(cfg: LemmaSweepConfig) -> list[dict]:
    spec = trunc_poly(cfg.trunc_degree)
    rows = []
    for suite in cfg.suites:
        for n in cfg.ns:
            for rep in run_suite(suite, n, 1, spec, bound=cfg.bounds.get(suite, 3)):
                ratios = sorted({(c.counterexample or {}).get("ratio") or "" for c in rep.failures()} - {""})
                rows.append({"suite": rep.suite, "n": n, "cases": len(rep.cases),
                             "failures": len(rep.failures()), "ratios": ratios,
                             "ms": round(rep.duration_ms, 1)})
    return rows
