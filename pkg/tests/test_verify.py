import json

import pytest

from globalweyl.algebra import trunc_poly
from globalweyl.multiset import EMPTY, Multiset
from globalweyl.verify import (check_action_zero, check_deltaqi, check_factorization,
                               check_qivi, run_case, run_suite, verify_action_zero,
                               verify_delta, verify_qivi, verify_qonv_and_basis)
from globalweyl.sln import H

A1, A2 = trunc_poly(1), trunc_poly(2)
c1, ct = Multiset({0: 1}), Multiset({1: 1})


def test_action_zero_suite():
    rep = verify_action_zero(2, A2, bound=3)
    assert rep.passed and rep.exit_status == 0
    keys = [c.key for c in rep.cases]
    assert "i=1;phi=-;chi=1:1,t:1" in keys
    # |phi|+|chi| = 1 is outside the lemma
    assert "i=1;phi=-;chi=1:1" not in keys
    assert check_action_zero(2, 1, EMPTY, c1 + ct, A2) == (True, None)


def test_action_zero_rejects_small_bound():
    with pytest.raises(ValueError):
        verify_action_zero(2, A2, bound=1)


def test_qivi_single_cases():
    assert check_qivi(2, 1, EMPTY, c1, A2)[0]
    assert check_qivi(2, 1, c1, EMPTY, A2)[0]
    assert check_qivi(2, 1, EMPTY, c1 + ct, A2)[0]
    ok, cx = check_qivi(2, 1, EMPTY, c1 * 2, A2)
    assert not ok and cx["ratio"] == "1/2"


def test_qivi_suite_records_failures():
    rep = verify_qivi(2, A1, bound=2)
    assert not rep.passed
    bad = {c.key for c in rep.failures()}
    # exactly the cells where phi or chi repeats a key
    assert bad == {"i=1;k=2;phi=-;chi=1:2", "i=1;k=2;phi=1:2;chi=-"}


def test_delta_cases():
    assert check_factorization((), 3)[0]
    assert check_factorization(((H(1), 0),), 2)[0]
    assert check_deltaqi(2, 1, EMPTY, c1, 2, A2)[0]
    rep = verify_delta(2, A1, kmax=2, wordlen=2, bound=2)
    assert rep.passed


def test_basis_suite_small():
    rep = verify_qonv_and_basis(2, 1, A2)
    assert rep.passed
    cert = rep.extra["certificate"]
    assert cert["rank"] == cert["expected"] == 4
    assert cert["sign_formulas_matching"] == ["alternate"]


def test_basis_suite_with_repeated_slots_fails_on_scale():
    rep = verify_qonv_and_basis(3, 2, A1)
    failing = {c.key.split(";")[0] for c in rep.failures()}
    assert failing == {"qonv"}
    assert rep.extra["certificate"]["rank"] == 6


def test_report_schema_and_determinism():
    a = [r.to_json() for r in run_suite("all", 2, 1, A1, bound=2)]
    b = [r.to_json() for r in run_suite("all", 2, 1, A1, bound=2)]
    assert json.dumps(a) == json.dumps(b)
    for rep in a:
        assert set(rep) >= {"suite", "params", "cases", "duration_ms", "pass"}
        assert rep["duration_ms"] is None
        for case in rep["cases"]:
            assert set(case) == {"key", "pass", "counterexample"}
    timed = run_suite("basis", 2, 1, A1)[0].to_json(timing=True)
    assert timed["duration_ms"] >= 0


@pytest.mark.parametrize("suite,n,m,spec", [("qivi", 3, 1, A2), ("basis", 2, 3, A2),
                                            ("basis", 3, 2, A1)])
def test_failure_payloads_replay(suite, n, m, spec):
    reps = run_suite(suite, n, m, spec, bound=3)
    failures = [c for r in reps for c in r.failures()]
    assert failures
    for case in failures:
        payload = json.loads(json.dumps(case.counterexample))
        assert run_case(payload) is False


def test_replay_of_passing_case():
    payload = {"suite": "action_zero", "n": 2, "i": 1, "phi": "-", "chi": "1:1,t:1",
               "algebra": "trunc:2"}
    assert run_case(payload) is True


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 2, 1, A1)
    with pytest.raises(ValueError):
        run_case({"suite": "nope", "algebra": "trunc:1"})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_basis_suite_m0_is_trivial(n):
    rep = verify_qonv_and_basis(n, 0, A2)
    assert rep.passed and rep.extra["certificate"]["rank"] == 1


def test_n3_m2_trunc1_rank_example():
    rep = verify_qonv_and_basis(3, 2, A1)
    assert next(c for c in rep.cases if c.key == "rank").passed
