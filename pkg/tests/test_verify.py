import json
import sys
from functools import partial

import pytest

from cohzeta import qseries, zeta
from cohzeta.laurent import ONE, Q, T, PochFactor, QTFraction, monomial
from cohzeta.verify import (
    EXIT_CONJECTURE_FALSIFIED,
    EXIT_OK,
    EXIT_SKIPPED,
    EXIT_THEOREM_FAILURE,
    SUITES,
    Check,
    Report,
    _evaluate,
    _stabilize,
    check_identity,
    compare_lists,
    run_suite,
    stabilization_check,
)
from cohzeta.zeta import OrderFamily, closed_form_coh, coh_finitized

FAST_SUITES = [n for n in SUITES if not n.startswith("oracle-")]


def test_check_identity_examples():
    a = QTFraction(ONE, [PochFactor(T, 1, 1)])
    b = QTFraction(1 + T, [PochFactor(T**2, 1, 1)])
    assert check_identity(a, b)
    fam = OrderFamily("inert", 1)
    assert check_identity(coh_finitized(2), closed_form_coh(fam, 2).value)


def test_check_identity_witness():
    lhs = QTFraction(1 + Q * T)
    res = check_identity(lhs, QTFraction(1 + Q * T + 5 * Q**3 * T**2))
    assert not res.passed
    assert res.witness == (3, 2, -5)
    res = check_identity(QTFraction(ONE, [PochFactor(T, 1, 1)]), QTFraction(1 + T + T**2))
    assert not res and res.witness is not None


def test_compare_lists():
    assert compare_lists([1, 2], [1, 2, 0])
    assert compare_lists([1, 2], [1, 3]).witness == (1, 2, 3)


def test_stabilization_constant_family():
    fam = {n: QTFraction(1 + T) for n in range(5)}
    res = stabilization_check(fam)
    assert sorted(res) == [0, 1, 2, 3] and all(r.passed for r in res.values())


def test_stabilization_of_finitized_zeta():
    fam = {n: coh_finitized(n) for n in range(8)}
    res = stabilization_check(fam, lambda n: n, lambda n: n + 1)
    assert all(res[n].passed for n in range(7))


def test_exact_stabilization_does_not_hold():
    # the coefficients converge 1/q-adically, not by exact agreement
    fam = {n: coh_finitized(n) for n in range(4)}
    res = stabilization_check(fam)
    assert not res[1].passed


def test_stabilization_drift_fails_everywhere():
    assert _stabilize(4, False) == [1] * 5
    assert _stabilize(4, True) == [0] * 5


def test_stabilization_rejects_bad_denominator():
    fam = {0: QTFraction(ONE, [PochFactor(monomial(1, 0, 0), 1, 1)]), 1: QTFraction(ONE)}
    with pytest.raises(Exception):
        stabilization_check(fam)


def _report(*outcomes):
    checks = []
    for i, kind in enumerate(outcomes):
        lhs = partial(int, 1)
        rhs = partial(int, 1 if kind == "pass" else 2)
        status = "conjectural" if kind == "conj" else "theorem"
        checks.append(Check(f"c{i}", (("i", i),), lhs, rhs, status))
    return Report("t", "theorem", [_evaluate(c) for c in checks])


def _guard_fail():
    from cohzeta.oracle import GuardExceeded

    raise GuardExceeded(10, 5, 100)


def test_exit_codes():
    assert _report("pass", "pass").exit_code == EXIT_OK
    assert _report("pass", "fail").exit_code == EXIT_THEOREM_FAILURE
    assert _report("conj", "pass").exit_code == EXIT_CONJECTURE_FALSIFIED
    assert _report("conj", "fail").exit_code == EXIT_THEOREM_FAILURE
    skipped = _evaluate(Check("s", (), _guard_fail, partial(int, 0)))
    assert skipped.outcome == "SKIPPED" and "100" in skipped.witness
    assert Report("t", "theorem", [skipped]).exit_code == EXIT_SKIPPED


def test_falsified_conjecture_reported_as_such():
    rep = _report("conj")
    assert rep.points[0].outcome == "CONJECTURE-FALSIFIED"
    assert rep.totals["CONJECTURE-FALSIFIED"] == 1


def test_guard_skips_oracle_points():
    rep = run_suite("oracle-quot", {"guard": 10})
    assert rep.exit_code == EXIT_SKIPPED
    assert all(p.outcome == "SKIPPED" for p in rep.points)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_registry_tags():
    assert SUITES["conj-s0"].status == "conjectural"
    assert SUITES["conj-m1"].status == "conjectural"
    assert SUITES["split-s0"].status == "theorem"
    assert set(SUITES["oracle-all"].parts) == {n for n in SUITES if n.startswith("oracle-") and n != "oracle-all"}


@pytest.mark.parametrize("name", FAST_SUITES)
def test_fast_suites_pass(name):
    rep = run_suite(name)
    assert rep.exit_code == EXIT_OK, rep.to_text()
    assert rep.points


def test_split_s0_values_are_one():
    rep = run_suite("split-s0", {"m_max": 3, "n_max": 5})
    assert rep.passed and len(rep.points) == 18


def test_reports_identical_across_runs_and_workers():
    ranges = {"n_max": 3, "m_max": 2}
    for name in ("prop42", "conj-m1", "tlrn"):
        one = run_suite(name, ranges)
        again = run_suite(name, ranges)
        par = run_suite(name, ranges, workers=3)
        text = json.dumps(one.to_json(timing=False), sort_keys=True)
        assert text == json.dumps(again.to_json(timing=False), sort_keys=True)
        assert text == json.dumps(par.to_json(timing=False), sort_keys=True)
        assert one.to_text(timing=False) == par.to_text(timing=False)


def test_text_report_layout():
    rep = run_suite("br-minus-one", {"m_max": 1, "n_max": 1})
    lines = rep.to_text(timing=False).splitlines()
    assert lines[0] == "suite br-minus-one [theorem]"
    assert lines[-1].startswith("totals: PASS=")


SPEC_OPS = {
    qseries: ["g_skew", "hall_g", "ag_multisum", "br_multisum", "singlesum", "infinite_sum", "product_side"],
    zeta: [
        "saturation_zeta",
        "rtilde_zeta",
        "solomon_zeta",
        "nakayama_compose",
        "coh_finitized",
        "closed_form_coh",
        "nuhat_zero",
        "normalize_nuhat",
        "reflection_check",
        "inert_m1_count",
    ],
}


@pytest.mark.slow
def test_suites_cover_every_formula():
    targets = {mod.__name__ for mod in SPEC_OPS}
    seen: set[tuple[str, str]] = set()

    def profile(frame, event, arg):
        if event == "call":
            mod = frame.f_globals.get("__name__")
            if mod in targets:
                seen.add((mod, frame.f_code.co_name))

    ranges = {"m_max": 1, "n_max": 1, "order": 5, "q": (2,)}
    sys.setprofile(profile)
    try:
        for name in SUITES:
            if name != "oracle-all":
                run_suite(name, ranges)
    finally:
        sys.setprofile(None)
    missing = [(m.__name__, f) for m, fs in SPEC_OPS.items() for f in fs if (m.__name__, f) not in seen]
    assert not missing


@pytest.mark.slow
def test_oracle_suites_pass_at_default_ranges():
    rep = run_suite("oracle-all", workers=2)
    assert rep.exit_code == EXIT_OK, rep.to_text()
    assert {p.check for p in rep.points} >= {"hall-count", "saturation-zeta", "quot-coefficients"}
