"""One test per acceptance criterion, all exact (zero tolerance)."""

import random
import time
from functools import lru_cache
from math import comb

from globalweyl.algebra import trunc_poly
from globalweyl.basis import (ProportionalityError, basis_image, basis_matrix,
                              highest_weight_check, sign_record, weight_check, winning_formula)
from globalweyl.linalg import rank
from globalweyl.sln import H, bracket, x_neg, x_pos
from globalweyl.symtensor import Tensor, enumerate_basis_tuples, is_symmetric, sym_dim, symmetrize
from globalweyl.verify import verify_action_zero, verify_delta, verify_qivi
from oracles import rank_naive, symmetrize_naive

DESK = [(n, N, m) for n in (2, 3, 4) for N in (1, 2, 3) for m in range(4)
        if sym_dim(n, N, m) <= 400]


@lru_cache(maxsize=None)
def desk_images(n, N, m):
    spec = trunc_poly(N)
    tuples = enumerate_basis_tuples(n, N, m)
    return tuples, [basis_image(p, n, m, spec) for p in tuples]


def test_criterion_1_basis_rank_at_desk_scale(criterion):
    t0 = time.perf_counter()
    bad = []
    for n, N, m in DESK:
        _, images = desk_images(n, N, m)
        r = rank(basis_matrix(n, m, trunc_poly(N), images=images))
        if r != comb(n * N + m - 1, m):
            bad.append((n, N, m, r))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    criterion(1, ok, f"{len(DESK)} parameter sets, {len(bad)} rank deficits, {elapsed:.1f}s")
    assert ok, bad


def _lemma_suites(run):
    reps = [run(n) for n in (2, 3)]
    cases = sum(len(r.cases) for r in reps)
    failures = [c for r in reps for c in r.failures()]
    return reps, cases, failures


def test_criterion_2_action_produces_zero(criterion):
    _, cases, failures = _lemma_suites(lambda n: verify_action_zero(n, trunc_poly(2), bound=4))
    ok = not failures
    criterion(2, ok, f"n in {{2,3}}: {cases} cases, {len(failures)} nonzero actions")
    assert ok, [c.key for c in failures]


def test_criterion_3_qivi_exact(criterion):
    _, cases, failures = _lemma_suites(lambda n: verify_qivi(n, trunc_poly(2), bound=3))
    ratios = sorted({c.counterexample["ratio"] for c in failures})
    ok = not failures
    criterion(3, ok, f"n in {{2,3}}: {len(failures)} of {cases} cases unequal, "
                     f"lhs/rhs ratios {ratios}")
    assert ok, [c.key for c in failures][:10]


def test_criterion_4_coproduct_identities(criterion):
    _, cases, failures = _lemma_suites(
        lambda n: verify_delta(n, trunc_poly(2), kmax=3, wordlen=3, bound=3))
    ok = not failures
    criterion(4, ok, f"n in {{2,3}}: {cases} cases, {len(failures)} failures")
    assert ok, [c.key for c in failures]


def test_criterion_5_images_are_signed_v_vectors(criterion):
    records, non_unit, non_prop = [], [], []
    for n, N, m in DESK:
        tuples, images = desk_images(n, N, m)
        for p, img in zip(tuples, images):
            try:
                rec = sign_record(p, img, strict=False)
            except ProportionalityError:
                non_prop.append((n, N, m, p))
                continue
            records.append(rec)
            if not rec.unit:
                non_unit.append((n, N, m, p, rec.ratio))
    formula = winning_formula(records)
    total = len(records) + len(non_prop)
    ok = not non_unit and not non_prop and formula is not None
    criterion(5, ok, f"{total} tuples, {len(non_unit)} with |ratio| != 1, "
                     f"{len(non_prop)} not proportional, sign formula: {formula}")
    assert ok, non_unit[:5]


def test_criterion_6_highest_weight_relations(criterion):
    bad = []
    for n, N, m in DESK:
        ok, cx = highest_weight_check(n, m, trunc_poly(N))
        if not ok:
            bad.append((n, N, m, cx))
    criterion(6, not bad, f"{len(DESK)} parameter sets, {len(bad)} failures")
    assert not bad, bad


def test_criterion_7_structural_invariants(criterion):
    asym, wrong_weight, checked = [], [], 0
    for n, N, m in DESK:
        spec = trunc_poly(N)
        tuples, images = desk_images(n, N, m)
        for p, img in zip(tuples, images):
            checked += 1
            if not is_symmetric(img):
                asym.append((n, N, m, p))
            if not weight_check(p, spec):
                wrong_weight.append((n, N, m, p))
    triples = all(bracket(H(i), x_pos(i)) == {x_pos(i): 2}
                  and bracket(H(i), x_neg(i)) == {x_neg(i): -2}
                  and bracket(x_pos(i), x_neg(i)) == {H(i): 1}
                  for n in range(2, 6) for i in range(1, n))
    ok = not asym and not wrong_weight and triples
    criterion(7, ok, f"{checked} images: {len(asym)} asymmetric, {len(wrong_weight)} wrong weight; "
                     f"sl2 triples n<=5: {'ok' if triples else 'broken'}")
    assert ok


def test_criterion_8_oracle_cross_checks(criterion):
    rng = random.Random(20261014)
    slots = [(w, b) for w in (1, 2, 3) for b in (0, 1)]
    sym_cases = 0
    sym_bad = 0
    for m in range(5):
        for _ in range(30):
            terms = {tuple(rng.choice(slots[:rng.randint(1, 6)]) for _ in range(m)): rng.randint(-3, 3)
                     for _ in range(rng.randint(1, 3))}
            t = Tensor(m, terms)
            sym_cases += 1
            sym_bad += symmetrize(t) != symmetrize_naive(t)
    rank_bad = 0
    for _ in range(25):
        dense = [[rng.randint(-3, 3) for _ in range(10)] for _ in range(10)]
        rank_bad += rank(dense) != rank_naive(dense)
    ok = not sym_bad and not rank_bad
    criterion(8, ok, f"symmetrize {sym_cases - sym_bad}/{sym_cases} agree (m<=4); "
                     f"rank {25 - rank_bad}/25 agree on random 10x10")
    assert ok
