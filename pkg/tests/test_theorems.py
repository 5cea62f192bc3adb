import csv
import io
import json
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from bidx.families import FamilyId
from bidx.indices import IndexSpec
from bidx.theorems import (
    SEI_DIFFERENCES,
    Cell,
    Check,
    TheoremReport,
    binomial_general,
    bound_a_at_6,
    bound_b_at_5,
    chi_b1_minus_b2,
    chi_g4_minus_g5,
    chi_h4_minus_h5,
    compare_families,
    jensen_gap,
    series_expansion,
    series_term,
    sign_table_csv,
    term_ratio_bound_a,
    term_ratio_bound_b,
    verify_theorem,
)


@given(st.floats(-5, 5))
def test_binomial_empty_product(alpha):
    assert binomial_general(alpha, 0) == 1


def test_binomial_examples():
    assert binomial_general(2, 3) == 0
    assert binomial_general(1.5, 2) == 0.375
    with pytest.raises(ValueError):
        binomial_general(1.5, -1)


@given(st.floats(-4, 4), st.integers(0, 25))
def test_binomial_matches_mpmath(alpha, k):
    # gamma-based reference; high precision survives alpha within 1e-300 of an integer
    with mpmath.workdps(400):
        want = float(mpmath.binomial(mpmath.mpf(alpha), k))
    assert math.isclose(binomial_general(alpha, k), want, rel_tol=1e-12, abs_tol=1e-300)


def test_series_b_vanishes_for_integer_alpha():
    s = series_expansion("B", 2, 5, K=10, early_stop=False)
    assert all(t == 0 for t in s.terms) and s.value == 0
    assert len(s.terms) == 10


def test_series_b_alpha_one_and_a_half():
    s = series_expansion("B", 1.5, 5, K=60, early_stop=False)
    assert s.terms[:3] == [0.0, 0.0, 0.0]
    assert s.terms[3] < 0
    mags = [abs(t) for t in s.terms[3:]]
    assert all(a > b for a, b in zip(mags, mags[1:]) if b > 0)
    with mpmath.workdps(40):
        alpha, n = mpmath.mpf(1.5), 5
        for k in range(3, 30):
            want = mpmath.binomial(alpha, k) * mpmath.power(n, alpha - k) * (3 + 3 ** k - 3 * 2 ** k)
            assert math.isclose(s.terms[k], float(want), rel_tol=1e-12)


def test_series_a_alpha_three():
    s = series_expansion("A", 3, 6, K=60)
    assert s.leading_constant == 2 * (343 - 216) == 254
    assert s.terms[0] == s.terms[1] == 0
    assert s.value == 314 == chi_h4_minus_h5(3, 6)
    assert s.converged


def test_series_errors_and_convergence_flag():
    with pytest.raises(ValueError):
        series_expansion("B", 1.5, 4)
    with pytest.raises(ValueError):
        series_expansion("A", 1.5, 5)
    with pytest.raises(ValueError):
        series_expansion("B", 1.5, 5, K=4)
    with pytest.raises(ValueError):
        series_expansion("C", 1.5, 5)
    assert not series_expansion("B", 1.5, 5, K=5).converged
    assert series_expansion("B", 1.5, 5).converged


@pytest.mark.parametrize("alpha", [1.25, 1.5, 2.5, 3.7])
@pytest.mark.parametrize("n", range(5, 11))
def test_series_b_sums_to_difference(alpha, n):
    d = compare_families(IndexSpec.chi(alpha), FamilyId("G4", n), FamilyId("G5", n))
    assert abs(series_expansion("B", alpha, n).value - d) <= 1e-8 * max(1.0, abs(d))


@pytest.mark.parametrize("alpha", [1.25, 1.5, 2.5, 3.7])
@pytest.mark.parametrize("n", range(6, 11))
def test_series_a_sums_to_difference(alpha, n):
    d = compare_families(IndexSpec.chi(alpha), FamilyId("H4", n), FamilyId("H5", n))
    assert abs(series_expansion("A", alpha, n).value - d) <= 1e-8 * max(1.0, abs(d))


@given(st.floats(1.01, 3.99).filter(lambda a: not a.is_integer()), st.integers(5, 30))
def test_term_ratio(alpha, n):
    for m in range(3, 41):
        if m > alpha:
            assert abs(series_term("B", alpha, n, m)) > abs(series_term("B", alpha, n, m + 1))
    if n >= 6:
        for m in range(2, 41):
            if m > alpha:
                assert abs(series_term("A", alpha, n, m)) > abs(series_term("A", alpha, n, m + 1))


def test_positivity_bounds():
    assert all(bound_b_at_5(m) > 0 for m in range(3, 41))
    assert all(bound_a_at_6(m) > 0 for m in range(2, 41))
    assert all(term_ratio_bound_b(5, m) == bound_b_at_5(m) for m in range(3, 41))
    assert all(term_ratio_bound_a(6, m) == bound_a_at_6(m) for m in range(2, 41))


def test_compare_examples():
    assert compare_families(IndexSpec.chi(1), FamilyId("G4", 6), FamilyId("G5", 6)) == 0
    assert compare_families(IndexSpec.chi(3), FamilyId("G4", 6), FamilyId("G5", 6)) == 6
    assert math.isclose(compare_families(IndexSpec.sei(2), FamilyId("B1", 6), FamilyId("B2", 6)), 10,
                        rel_tol=1e-12)
    with pytest.raises(ValueError, match="share n"):
        compare_families(IndexSpec.chi(1), FamilyId("G4", 6), FamilyId("G5", 7))


@pytest.mark.parametrize("alpha", [1, 1.5, 2, 2.7, 3])
def test_displayed_differences(alpha):
    spec = IndexSpec.chi(alpha)
    for n in range(5, 40):
        f = lambda a, b: compare_families(spec, FamilyId(a, n), FamilyId(b, n))  # noqa: E731
        assert math.isclose(f("B1", "B2"), chi_b1_minus_b2(alpha, n), rel_tol=1e-12, abs_tol=1e-9)
        assert math.isclose(f("G4", "G5"), chi_g4_minus_g5(alpha, n), rel_tol=1e-12, abs_tol=1e-9)
        if n >= 6:
            assert math.isclose(f("H4", "H5"), chi_h4_minus_h5(alpha, n), rel_tol=1e-12, abs_tol=1e-9)


@pytest.mark.parametrize("alpha", [1, 1.5, 2, 3])
def test_h5_h8_at_five(alpha):
    d = compare_families(IndexSpec.chi(alpha), FamilyId("H5", 5), FamilyId("H8", 5))
    assert math.isclose(d, 8 ** alpha - 6 ** alpha, rel_tol=1e-12)


@pytest.mark.parametrize("a", [1.1, 1.5, 2, 3])
@pytest.mark.parametrize("pair", sorted(SEI_DIFFERENCES))
def test_sei_polynomials(a, pair):
    x, y = pair
    for n in range(7, 13):
        d = compare_families(IndexSpec.sei(a), FamilyId(x, n), FamilyId(y, n))
        assert math.isclose(d, SEI_DIFFERENCES[pair](a), rel_tol=1e-12)
        assert d > 0


@pytest.mark.parametrize("kind", ["CHI", "PL"])
def test_sign_table(kind):
    alphas = [1, 1.25, 1.5, 2, 2.5, 3]
    rows = list(csv.reader(io.StringIO(sign_table_csv(kind, alphas, range(5, 11)))))
    assert rows[0] == ["alpha"] + [f"n={n}" for n in range(5, 11)]
    signs = {float(r[0]): set(r[1:]) for r in rows[1:]}
    assert signs == {1.0: {"="}, 1.25: {"<"}, 1.5: {"<"}, 2.0: {"="}, 2.5: {">"}, 3.0: {">"}}


@given(st.floats(1, 6), st.integers(4, 50))
def test_jensen(alpha, n):
    assert jensen_gap(alpha, n) >= -1e-12 * (n + 2) ** alpha


def test_verify_thm2():
    rep = verify_theorem("THM2", (5, 7), [1, 1.5, 2, 3])
    assert rep.overall, rep.failures()
    assert [(p, n) for p, n in rep.parameter_grid][:3] == [(1.0, 5), (1.0, 6), (1.0, 7)]
    names = {ch.name for c in rep.cells for ch in c.checks}
    assert {"jensen", "b1_beats_b2", "g4_g5_sign", "h4_beats_h5", "oracle_maximizers_m=7"} <= names


def test_verify_thm4_notes_label():
    rep = verify_theorem("THM4", (5, 6), [1.5, 2.5])
    assert rep.overall, rep.failures()
    assert rep.notes


def test_verify_thm6():
    rep = verify_theorem("THM6", (5, 8), [1.5, 2])
    assert rep.overall, rep.failures()
    names = {ch.name for c in rep.cells for ch in c.checks}
    assert "g3_not_maximizer" in names and "g4_beats_g3" in names


def test_verify_dominating_conclusion():
    rep = verify_theorem("LEMMA2", (4, 8), [IndexSpec.chi(2)])
    assert rep.theorem_id == "LEMMA2_CONCLUSION"
    assert rep.overall
    assert sum(1 for c in rep.cells for ch in c.checks if ch.name.startswith("dominating")) == 5 + 5 + 5 + 5 + 4


def test_oracle_cells_skipped_beyond_bound():
    rep = verify_theorem("THM6", [11], [2], oracle_max_n=9)
    checks = rep.cells[0].checks
    assert any(ch.skipped for ch in checks)
    assert any(not ch.skipped and ch.name.startswith("g4_beats") for ch in checks)
    assert rep.overall


def test_report_failure_plumbing():
    bad = Check("h4_beats_h5", False, {"difference": -1.0})
    rep = TheoremReport("THM2", [(1.5, 6)], [Cell(6, 1.5, [bad])])
    assert not rep.overall
    assert rep.failures() == [(6, 1.5, bad)]
    d = json.loads(rep.to_json())
    assert d["overall"] is False and d["cells"][0]["checks"][0]["values"] == {"difference": -1.0}
    assert "FAIL" in rep.to_csv()


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem("THM9", (5, 6), [1])
    with pytest.raises(ValueError):
        verify_theorem("THM2", (3, 6), [1])
