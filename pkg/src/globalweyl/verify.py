"""
Verification suites for the identities behind the basis construction.

Every identity is checked on the module (V (x) A)^{(x) k}, never as formal
word equality, except the coproduct factorization which is formal in
U^{(x) k} by construction.  Each case carries a key and, on failure, a
payload with the full inputs; ``run_case`` replays a payload.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import basis as wb
from .algebra import AlgebraSpec, algebra_from_literal, format_rational
from .envelope import (UElement, act, act_componentwise, coproduct, split_last,
                       tensor_product)
from .multiset import (EMPTY, Multiset, compositions, format_literal, multisets_up_to,
                       parse_literal, parse_tuple)
from .qconstruct import q_single
from .sln import H, x_neg, x_pos
from .symtensor import Tensor, standard_basis, sym_dim, tensor_to_json, v_vector

DEFAULT_BOUND = 4
DEFAULT_DELTA_BOUND = 3


@dataclass
class Case:
    key: str
    passed: bool
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {"key": self.key, "pass": self.passed, "counterexample": self.counterexample}


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: list = field(default_factory=list)
    duration_ms: float | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "pass": self.passed,
            "cases": [c.to_json() for c in sorted(self.cases, key=lambda c: c.key)],
            "duration_ms": round(self.duration_ms, 3) if timing and self.duration_ms is not None else None,
        }
        out.update(self.extra)
        return out


def _timed(fn: Callable[..., SuiteReport]):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.duration_ms = (time.perf_counter() - t0) * 1000
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _lit(chi: Multiset, spec: AlgebraSpec) -> str:
    return format_literal(chi, spec.labels)


def _alg_name(spec: AlgebraSpec) -> str:
    return spec.name or "custom"


def _pairs(spec: AlgebraSpec, lo: int, hi: int):
    keys = range(spec.dim)
    ms = multisets_up_to(keys, hi)
    for phi in ms:
        for chi in ms:
            if lo <= phi.size + chi.size <= hi:
                yield phi, chi


# -- single-case checks (shared by the suites and by replay)

def check_action_zero(n: int, i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec):
    out = act(q_single(i, phi, chi, spec, n=n), Tensor.pure([(i, spec.unit_index)]), spec)
    if out:
        return False, {"result": tensor_to_json(out)}
    return True, None


def qivi_target(n: int, i: int, phi: Multiset, chi: Multiset) -> Tensor:
    parts = [EMPTY] * n
    parts[i - 1] = chi
    parts[i] = phi
    k = phi.size + chi.size
    return v_vector(parts) * (-1) ** k


def check_qivi(n: int, i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec):
    k = phi.size + chi.size
    lhs = act(q_single(i, phi, chi, spec, n=n), Tensor.pure([(i, spec.unit_index)] * k), spec)
    rhs = qivi_target(n, i, phi, chi)
    if lhs == rhs:
        return True, None
    ratio = wb.proportionality(lhs, rhs)
    return False, {"lhs": tensor_to_json(lhs), "rhs": tensor_to_json(rhs),
                   "ratio": None if ratio is None else format_rational(ratio)}


def deltaqi_rhs(i: int, phi: Multiset, chi: Multiset, k: int, spec: AlgebraSpec, n: int):
    total = None
    for psi_parts in compositions(chi, k):
        for phi_parts in compositions(phi, k):
            factors = [q_single(i, a, b, spec, n=n) for a, b in zip(phi_parts, psi_parts)]
            tu = tensor_product(factors)
            total = tu if total is None else total + tu
    return total


def check_deltaqi(n: int, i: int, phi: Multiset, chi: Multiset, k: int, spec: AlgebraSpec):
    """Delta^{k-1}(q_i(phi, chi)) against the composition sum, on every basis tensor."""
    q = q_single(i, phi, chi, spec, n=n)
    lhs_op = coproduct(q, k)
    rhs_op = deltaqi_rhs(i, phi, chi, k, spec, n)
    for t in standard_basis(n, spec.dim, k):
        left = act_componentwise(lhs_op, t, spec)
        right = act_componentwise(rhs_op, t, spec)
        if left != right:
            return False, {"tensor": tensor_to_json(t), "lhs": tensor_to_json(left),
                           "rhs": tensor_to_json(right)}
    return True, None


def small_letters(n: int, spec: AlgebraSpec) -> list:
    """h_1, x_1, x_{-1} tensored with the first (at most two) basis elements."""
    gens = [H(1), x_pos(1), x_neg(1)]
    return [(g, b) for g in gens for b in range(min(spec.dim, 2))]


def check_factorization(word: tuple, k: int):
    u = UElement.word(word)
    lhs = coproduct(u, k + 1)
    rhs = split_last(coproduct(u, k))
    if lhs == rhs:
        return True, None
    return False, {"lhs_terms": len(lhs), "rhs_terms": len(rhs)}


# -- suites

@_timed
def verify_action_zero(n: int, spec: AlgebraSpec, bound: int = DEFAULT_BOUND) -> SuiteReport:
    """q_i(phi, chi)(v_i (x) 1) = 0 whenever |phi| + |chi| >= 2."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    rep = SuiteReport("action_zero", {"n": n, "algebra": _alg_name(spec), "bound": bound})
    for i in range(1, n):
        for phi, chi in _pairs(spec, 2, bound):
            ok, cx = check_action_zero(n, i, phi, chi, spec)
            key = f"i={i};phi={_lit(phi, spec)};chi={_lit(chi, spec)}"
            rep.cases.append(Case(key, ok, None if ok else {
                "suite": "action_zero", "n": n, "i": i, "phi": _lit(phi, spec),
                "chi": _lit(chi, spec), "algebra": _alg_name(spec), **cx}))
    return rep


@_timed
def verify_qivi(n: int, spec: AlgebraSpec, bound: int = DEFAULT_BOUND) -> SuiteReport:
    """q_i(phi, chi)(v_i (x) 1)^{(x) k} = (-1)^k v(0..chi..phi..0), exact equality."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rep = SuiteReport("qivi", {"n": n, "algebra": _alg_name(spec), "bound": bound})
    for i in range(1, n):
        for phi, chi in _pairs(spec, 0, bound):
            ok, cx = check_qivi(n, i, phi, chi, spec)
            k = phi.size + chi.size
            key = f"i={i};k={k};phi={_lit(phi, spec)};chi={_lit(chi, spec)}"
            rep.cases.append(Case(key, ok, None if ok else {
                "suite": "qivi", "n": n, "i": i, "phi": _lit(phi, spec),
                "chi": _lit(chi, spec), "algebra": _alg_name(spec), **cx}))
    return rep


@_timed
def verify_delta(n: int, spec: AlgebraSpec, kmax: int = 3, wordlen: int = 3,
                 bound: int = DEFAULT_DELTA_BOUND) -> SuiteReport:
    """Coproduct factorization (formal) and coproduct of q_i (as operators)."""
    if kmax < 2:
        raise ValueError("kmax must be >= 2")
    rep = SuiteReport("delta", {"n": n, "algebra": _alg_name(spec), "kmax": kmax,
                                "wordlen": wordlen, "bound": bound})
    letters = small_letters(n, spec)
    words = [w for L in range(wordlen + 1) for w in product(letters, repeat=L)]
    for k in range(1, kmax + 1):
        bad = None
        for w in words:
            ok, cx = check_factorization(w, k)
            if not ok:
                bad = {"suite": "factorization", "k": k, "word": [[g.encode(), b] for g, b in w], **cx}
                break
        rep.cases.append(Case(f"factorization;k={k};words={len(words)}", bad is None, bad))
    for k in range(2, kmax + 1):
        for i in range(1, n):
            for phi, chi in _pairs(spec, 0, bound):
                ok, cx = check_deltaqi(n, i, phi, chi, k, spec)
                key = f"deltaqi;k={k};i={i};phi={_lit(phi, spec)};chi={_lit(chi, spec)}"
                rep.cases.append(Case(key, ok, None if ok else {
                    "suite": "deltaqi", "n": n, "k": k, "i": i, "phi": _lit(phi, spec),
                    "chi": _lit(chi, spec), "algebra": _alg_name(spec), **cx}))
    return rep


@_timed
def verify_qonv_and_basis(n: int, m: int, spec: AlgebraSpec, guard: int | None = None) -> SuiteReport:
    """Images are +-v, symmetric, highest-weight relations hold, full rank."""
    wb.check_guard(n, m, spec, guard)
    rep = SuiteReport("basis", {"n": n, "m": m, "algebra": _alg_name(spec),
                                "guard": wb.DEFAULT_GUARD if guard is None else guard})
    tuples = wb.enumerate_tuples(n, spec, m)
    images = [wb.basis_image(p, n, m, spec) for p in tuples]
    records = []
    for p, img in zip(tuples, images):
        lit = wb.tuple_literal(p, spec)
        base = {"suite": "qonv", "n": n, "m": m, "tuple": lit, "algebra": _alg_name(spec)}
        try:
            rec = wb.sign_record(p, img, strict=False)
        except wb.ProportionalityError:
            rep.cases.append(Case(f"qonv;tuple={lit}", False,
                                  {**base, "image": tensor_to_json(img), "ratio": None}))
            rec = None
        if rec is not None:
            records.append(rec)
            rep.cases.append(Case(f"qonv;tuple={lit}", rec.unit,
                                  None if rec.unit else {**base, "ratio": format_rational(rec.ratio)}))
        sym = wb.is_symmetric(img)
        rep.cases.append(Case(f"symmetric;tuple={lit}", sym, None if sym else {**base, "suite": "symmetric"}))
        wok = wb.weight_check(p, spec)
        rep.cases.append(Case(f"weight;tuple={lit}", wok, None if wok else {**base, "suite": "weight"}))

    matching = [name for name, ok in (("paper", all(r.weighted_match for r in records)),
                                      ("alternate", all(r.capped_match for r in records))) if ok]
    rep.cases.append(Case("sign_formula", bool(matching) and len(records) == len(tuples),
                          None if matching else {"suite": "sign_formula", "n": n, "m": m,
                                                 "algebra": _alg_name(spec)}))
    ok, cx = wb.highest_weight_check(n, m, spec)
    rep.cases.append(Case("highest_weight", ok, None if ok else {
        "suite": "highest_weight", "n": n, "m": m, "algebra": _alg_name(spec), **cx}))

    r = wb.rank(wb.basis_matrix(n, m, spec, guard, images=images))
    expected = sym_dim(n, spec.dim, m)
    rep.cases.append(Case("rank", r == expected, None if r == expected else {
        "suite": "rank", "n": n, "m": m, "algebra": _alg_name(spec), "rank": r, "expected": expected}))
    rep.extra["certificate"] = {
        "n": n, "m": m, "algebra": _alg_name(spec),
        "tuples": [wb.tuple_literal(p, spec) for p in tuples],
        "columns": {"slots": [list(s) for s in wb.column_slots(n, spec)], "rank_m_product": m},
        "rank": r, "expected": expected,
        "signs": [rec.to_json(spec) for rec in records],
        "sign_formulas_matching": matching,
    }
    return rep


def run_suite(name: str, n: int, m: int, spec: AlgebraSpec, bound: int = DEFAULT_BOUND,
              guard: int | None = None) -> list[SuiteReport]:
    if name == "action_zero":
        return [verify_action_zero(n, spec, bound)]
    if name == "qivi":
        return [verify_qivi(n, spec, bound)]
    if name == "delta":
        return [verify_delta(n, spec, bound=min(bound, DEFAULT_DELTA_BOUND))]
    if name == "basis":
        return [verify_qonv_and_basis(n, m, spec, guard)]
    if name == "all":
        return [r for s in ("action_zero", "qivi", "delta", "basis")
                for r in run_suite(s, n, m, spec, bound, guard)]
    raise ValueError(f"unknown suite {name!r}")


SUITES = ("action_zero", "qivi", "delta", "basis", "all")


def run_case(payload: dict) -> bool:
    """Re-run the single check a failure payload describes; True if it passes."""
    spec = algebra_from_literal(payload["algebra"])
    labels = spec.label_map()
    suite = payload["suite"]
    if suite in ("action_zero", "qivi", "deltaqi"):
        phi = parse_literal(payload["phi"], labels)
        chi = parse_literal(payload["chi"], labels)
        n, i = payload["n"], payload["i"]
        if suite == "action_zero":
            return check_action_zero(n, i, phi, chi, spec)[0]
        if suite == "qivi":
            return check_qivi(n, i, phi, chi, spec)[0]
        return check_deltaqi(n, i, phi, chi, payload["k"], spec)[0]
    if suite in ("qonv", "symmetric", "weight"):
        parts = parse_tuple(payload["tuple"], labels)
        img = wb.basis_image(parts, payload["n"], payload["m"], spec)
        if suite == "symmetric":
            return wb.is_symmetric(img)
        if suite == "weight":
            return wb.weight_check(parts, spec)
        try:
            return wb.sign_record(parts, img, strict=False).unit
        except wb.ProportionalityError:
            return False
    if suite == "highest_weight":
        return wb.highest_weight_check(payload["n"], payload["m"], spec)[0]
    if suite in ("rank", "sign_formula"):
        rep = verify_qonv_and_basis(payload["n"], payload["m"], spec)
        return all(c.passed for c in rep.cases if c.key == suite)
    raise ValueError(f"cannot replay suite {suite!r}")
