from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tuza.certificates import (LEMMA7, WeightScheme, check_scheme, fuzz_lemma, generate_constraints,
                               optimize_scheme, scheme_monotone_in_k, table2_scheme, weight_of)
from tuza.constructions import tuza_instance
from tuza.hypergraph import Hypergraph, degree_profile
from tuza.lp import verify_optimal

from conftest import uniform_hypergraphs


def _lhs(k, name, scheme=LEMMA7):
    c = next(c for c in generate_constraints(k) if c.name == name)
    return c.lhs(scheme)


def test_weight_of_examples(single_edge7):
    assert weight_of(single_edge7, LEMMA7) == 7 * 11093 + 18400 == 96051
    assert weight_of(Hypergraph(0, (), 7), LEMMA7) == 0
    assert weight_of(tuza_instance(7), LEMMA7) == 14 * 18250 + 6 * 18400 == 365900


def test_weight_of_k_mismatch():
    with pytest.raises(ValueError):
        weight_of(tuza_instance(8), LEMMA7)


def _weight_by_vertices(h, s):
    # independent route: sum per-vertex weights then per-edge weights
    table = {1: s.w1, 2: s.w2, 3: s.w3}
    deg = degree_profile(h).degrees
    return sum((table.get(d, s.w4) for d in deg if d), Fraction(0)) + s.wm * h.m


@settings(max_examples=100, deadline=None)
@given(uniform_hypergraphs(k_range=(7, 7), n_max=14), st.fractions(min_value=0, max_value=10))
def test_weight_linear_in_scheme(h, alpha):
    assert weight_of(h, LEMMA7) == _weight_by_vertices(h, LEMMA7)
    scaled = LEMMA7.scaled(alpha)
    assert weight_of(h, scaled) == alpha * weight_of(h, LEMMA7)
    assert scaled.C == alpha * LEMMA7.C


def test_printed_case_values_k7():
    assert _lhs(7, "case-ii-single") == 96569
    assert _lhs(7, "case-ii-regular") == 192169
    assert _lhs(7, "case-iii-regular") == 192103
    assert _lhs(7, "case-iv-overlap") == 131442
    assert _lhs(7, "case-iv-linear") == 192108
    assert _lhs(7, "base-single-edge") == 96051
    # transcribed formula; the printed 96511 differs
    assert _lhs(7, "case-iii-single") == 98511


def test_constraint_system_shape():
    cons = generate_constraints(7)
    assert len(cons) == 9 + 3 + 2 + 1
    assert len({c.name for c in cons}) == len(cons)
    mult = {c.name: c.rhs_multiple for c in cons}
    assert mult["case-ii-regular"] == mult["case-iii-regular"] == mult["case-iv-linear"] == 2
    assert mult["case-i"] == mult["base-single-edge"] == 1


@pytest.mark.parametrize("k", [2, 5, 7, 12, 40])
def test_coefficients_match_written_forms(k):
    # evaluate at a generic point and compare with the case formulas written out
    s = WeightScheme.of((3, 11, 17, 29, 31), 1, k)
    w1, w2, w3, w4, wm = 3, 11, 17, 29, 31
    expected = {
        "case-i": w4 + 5 * wm,
        "case-ii-single": w4 + 4 * wm + (4 * (k - 1) - 1) * (w4 - w3) + (w3 - w2),
        "case-ii-regular": 2 * w4 + 8 * wm + (8 * (k - 1) - 1) * (w4 - w3) + (w3 - w2),
        "case-iii-single": w3 + 3 * wm + (3 * (k - 1) - 1) * (w3 - w2) + (w2 - w1),
        "case-iii-regular": 2 * w3 + 6 * wm + (6 * (k - 1) - 1) * (w3 - w2) + (w2 - w1),
        "case-iv-two-edges": (2 * k - 2) * w1 + w2 + 2 * wm,
        "case-iv-overlap": 2 * w2 + 2 * wm + 2 * (k - 2) * (w2 - w1),
        "case-iv-linear": 2 * w2 + 3 * wm + (3 * k - 4) * (w2 - w1),
        "base-single-edge": k * w1 + wm,
    }
    for name, value in expected.items():
        assert _lhs(k, name, s) == value


def test_check_lemma7():
    r = check_scheme(7, LEMMA7)
    assert r.verdict
    assert r.implied_bound == Fraction(18400, 96050)
    assert float(r.implied_bound) == pytest.approx(0.19156, abs=1e-5)
    assert r.check("base-single-edge").slack == 1
    assert r.discrepancies == ["case-iii-single: formula gives 98511, printed value is 96511"]


def test_check_zero_weights_fails_base():
    r = check_scheme(7, WeightScheme.of((0, 0, 0, 0, 0), 100, 7))
    assert not r.verdict
    assert "base-single-edge" in r.violated


def test_check_table2_k9():
    r = check_scheme(9, table2_scheme(9))
    assert r.verdict
    assert r.implied_bound == Fraction(166667, 1000000)


@pytest.mark.parametrize("k", range(7, 18))
def test_table2_rows_pass_exactly(k):
    r = check_scheme(k, table2_scheme(k))
    assert r.verdict, r.violated
    assert r.within_precision == []


def test_within_precision_reporting():
    # nudge the k=9 row just under the case-i requirement
    s = WeightScheme.of(("9.5976", "14.8298", "16.1586", "16.6666", "16.6666"), 100, 9,
                        precision=Fraction(1, 10000))
    r = check_scheme(9, s)
    assert r.violated == ["case-i", "case-ii-regular"]
    assert [note.split()[0] for note in r.within_precision] == r.violated


def test_optimize_k9_hits_one_sixth():
    opt = optimize_scheme(9, 100)
    assert opt.bound == Fraction(1, 6)
    assert "case-i" in opt.report.binding
    assert verify_optimal(opt.program, opt.outcome)


@pytest.mark.parametrize("k,printed", [(7, "0.1916"), (8, "0.1772")])
def test_optimize_not_worse_than_printed(k, printed):
    opt = optimize_scheme(k, 100)
    assert opt.report.verdict
    assert opt.bound <= Fraction(printed)


@pytest.mark.parametrize("k", range(7, 18))
def test_optimized_scheme_checks(k):
    opt = optimize_scheme(k)
    assert check_scheme(k, opt.scheme).verdict
    assert opt.scheme.invariant_violations() == []
    if k >= 9:
        assert opt.bound == Fraction(1, 6)


def test_optimum_lower_bound_from_case_i():
    # w4 + 5 wm >= C with both <= t forces t >= C/6, for every k
    for k in (2, 3, 5, 7, 20, 30):
        assert optimize_scheme(k).bound >= Fraction(1, 6)


def test_fuzz_examples(single_edge7):
    rep = fuzz_lemma(7, LEMMA7, trials=200, seed=1)
    assert rep.counterexamples == []
    assert 96050 * 1 <= weight_of(single_edge7, LEMMA7)
    assert 96050 * 3 == 288150 <= weight_of(tuza_instance(7), LEMMA7)


def test_fuzz_is_deterministic_and_worker_independent():
    a = fuzz_lemma(7, LEMMA7, trials=40, seed=5)
    b = fuzz_lemma(7, LEMMA7, trials=40, seed=5, workers=2)
    assert a.to_dict() == b.to_dict()


def test_fuzz_surfaces_counterexamples():
    # a scheme that fails the base case must be caught on single edges
    weak = WeightScheme.of((1, 1, 1, 1, 1), 100, 7, name="weak")
    rep = fuzz_lemma(7, weak, trials=20, seed=0)
    assert rep.counterexamples
    assert '"edges"' in rep.counterexamples[0]["instance"]


def test_monotone_table2_row9():
    rep = scheme_monotone_in_k(table2_scheme(9), 9, 17)
    assert rep.all_feasible and rep.implication_holds


def test_monotone_lemma7_to_8():
    rep = scheme_monotone_in_k(LEMMA7, 7, 8)
    assert rep.feasible == {7: True, 8: True}


def test_monotone_degenerate_equal_weights():
    s = WeightScheme.of((100,) * 5, 100, 2)
    rep = scheme_monotone_in_k(s, 2, 40)
    assert rep.all_feasible


def test_invariant_violations():
    assert LEMMA7.invariant_violations() == []
    bad = WeightScheme.of((5, 4, 6, 7, 7), 100, 7)
    assert "w1 <= w2" in bad.invariant_violations()
    convex = WeightScheme.of((1, 2, 3, 5, 5), 100, 7)
    assert "w4 - w3 <= w3 - w2" in convex.invariant_violations()


def test_report_renderings():
    r = check_scheme(7, LEMMA7)
    md = r.to_markdown()
    assert "| case-ii-single | 96569 | 96050 | 519 |" in md
    assert "discrepancy" in md
    assert r.to_dict()["verdict"] == "pass"
    assert "verdict: pass" in r.to_text()
