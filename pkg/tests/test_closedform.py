import json
from fractions import Fraction as F
from math import prod

import pytest

from gridiv import closedform, core, recurrence
from gridiv.closedform import FittedFamily, fit_families, fit_family, verify_recursion_identity
from gridiv.errors import FittingError, InputError
from gridiv.polynomial import N, Polynomial, from_text, poly_shift

S2 = from_text("2*n - 1")
D2 = from_text("2*n^2 - n")
S3 = from_text("4/3*n^3 - 3*n^2 + 8/3*n - 1")
D3 = from_text("2/3*n^4 - 4/3*n^3 + 11/6*n^2 - 13/6*n + 1")
S4 = from_text("4/15*n^5 - 4/3*n^4 + 11/3*n^3 - 37/6*n^2 + 167/30*n - 2")
D4 = from_text("4/45*n^6 - 2/5*n^5 + 25/18*n^4 - 7/2*n^3 + 226/45*n^2 - 18/5*n + 1")

# Two degree-7/8 candidates for k=5, neither of them the counting polynomial:
# the first agrees with s_5 only on n = 1..7, the second is d_5(n + 1).
S5_SEVEN_POINT = from_text("25/1008*n^7 - 37/180*n^6 + 71/72*n^5 - 107/36*n^4 + 751/144*n^3 - 217/45*n^2 + 149/84*n")
D5_OFFSET = from_text("2/315*n^8 + 2/15*n^6 - 1/5*n^5 + 49/120*n^4 - 7/12*n^3 + 1139/2520*n^2 - 13/60*n")


def fam(k, d, s):
    return FittedFamily(k, d, s)


ZERO_FAM = fam(0, Polynomial(), Polynomial())
ONE_FAM = fam(1, Polynomial([1]), Polynomial())


@pytest.fixture(scope="module")
def families():
    return {f.k: f for f in fit_families(10)}


def test_k1_axioms(families):
    assert families[1].d_poly == Polynomial([1])
    assert families[1].s_poly.is_zero()


def test_k2_golden(families):
    assert families[2].d_poly == D2
    assert families[2].s_poly == S2


@pytest.mark.parametrize("k, d, s", [(3, D3, S3), (4, D4, S4)])
def test_k3_k4_match_known_closed_forms(families, k, d, s):
    assert families[k].d_poly == d
    assert families[k].s_poly == s


def test_k5_fitted_values_are_right(families):
    d, s = recurrence.tables(5, 20)
    for n in range(1, 21):
        assert families[5].d_poly(n) == d(5, n)
        assert families[5].s_poly(n) == s(5, n)
    assert families[5].d_poly.leading_coefficient == F(2, 315)
    assert families[5].s_poly.leading_coefficient == F(8, 315)


def test_seven_point_s5_candidate_is_one_point_short(families):
    """Agrees with s_5 on n = 1..7; the difference vanishes exactly on those nodes."""
    true_s5 = families[5].s_poly
    for n in range(1, 8):
        assert S5_SEVEN_POINT(n) == true_s5(n)
    assert S5_SEVEN_POINT(8) == 20642
    assert true_s5(8) == 20645 == recurrence.s_value(5, 8)
    nodes = prod((N - i for i in range(1, 8)), start=Polynomial([1]))
    assert S5_SEVEN_POINT - true_s5 == nodes * F(-1, 1680)


def test_offset_d5_candidate_is_shifted(families):
    assert D5_OFFSET == poly_shift(families[5].d_poly)
    assert D5_OFFSET(3) == 111 != core.brute_count((2, 3), 5) == 7


def test_k5_candidates_fail_recursion_identity():
    f3, f4 = fam(3, D3, S3), fam(4, D4, S4)
    check = verify_recursion_identity(f3, f4, fam(5, D5_OFFSET, S5_SEVEN_POINT))
    assert not check
    assert check.identity == "d"


@pytest.mark.parametrize("k", range(1, 11))
def test_degrees(families, k):
    d_deg, s_deg = closedform.expected_degrees(k)
    assert families[k].d_poly.degree == d_deg
    assert families[k].s_poly.degree == s_deg
    assert families[k].d_poly.leading_coefficient > 0
    assert all(families[k].verified.values())


def test_fitted_families_match_table_and_brute(families):
    d, s = recurrence.tables(10, 20)
    for k, f in families.items():
        for n in range(1, 21):
            assert f.d_poly(n) == d(k, n)
            assert f.s_poly(n) == s(k, n)
        for n in range(1, 6):
            if k <= 2 * n:
                assert f.s_poly(n) == core.separation_count(n, k)


def test_recursion_identity_with_known_k3():
    assert verify_recursion_identity(ONE_FAM, fam(2, D2, S2), fam(3, D3, S3))


def test_recursion_identity_detects_perturbation():
    broken = fam(3, D3 + 1, S3)
    check = verify_recursion_identity(ONE_FAM, fam(2, D2, S2), broken)
    assert not check
    assert check.identity == "base"
    # a constant shift of d cancels in shift(d) - d, so the identities alone pass
    assert verify_recursion_identity(ONE_FAM, fam(2, D2, S2), broken, base=False)
    # perturbing s breaks the d identity itself
    check = verify_recursion_identity(ONE_FAM, fam(2, D2, S2), fam(3, D3, S3 + 1), base=False)
    assert check.identity == "d" and check.power == 0


@pytest.mark.parametrize("k", range(3, 8))
def test_any_single_coefficient_perturbation_breaks_identity(families, k):
    f2, f1, f = families[k - 2], families[k - 1], families[k]
    for which in ("d", "s"):
        poly = f.d_poly if which == "d" else f.s_poly
        for i in range(len(poly.coeffs)):
            coeffs = list(poly.coeffs)
            coeffs[i] += F(1, 7)
            bumped = Polynomial(coeffs)
            g = fam(k, bumped, f.s_poly) if which == "d" else fam(k, f.d_poly, bumped)
            assert not verify_recursion_identity(f2, f1, g), (k, which, i)


def test_fit_family_examples():
    f2 = fit_family(2)
    assert (f2.d_poly, f2.s_poly) == (D2, S2)
    f4 = fit_family(4)
    assert f4.d_poly == D4


def test_fit_family_rejects_bad_k():
    with pytest.raises(InputError):
        fit_family(0)


@pytest.mark.parametrize("k", range(2, 11))
def test_one_point_short_fails_spot_check(k):
    with pytest.raises(FittingError) as info:
        fit_family(k, d_points=2 * k - 2)
    assert info.value.n is not None


def test_too_few_s_points_reported():
    with pytest.raises(FittingError, match="s_3"):
        fit_family(3, s_points=3)


def test_summation_check_examples():
    r3 = closedform.summation_check(3, 10)
    assert r3.ok
    d, _ = recurrence.tables(3, 4)
    assert sum(d(1, j) + 2 * d(2, j) for j in range(1, 4)) == 47 == recurrence.s_value(3, 4)
    assert closedform.summation_check(4, 10)
    r2 = closedform.summation_check(2, 6)
    assert (2, "s", 3, 2) in r2.mismatches
    # the shortfall is always the n = 1 base value
    assert all(table - total == 1 for _, _, table, total in r2.mismatches)


@pytest.mark.parametrize("k", range(3, 11))
def test_summation_holds_once_base_values_vanish(k):
    assert closedform.summation_check(k, 20).ok


@pytest.mark.parametrize("k", range(2, 9))
def test_faulhaber_summation_polynomials(families, k):
    f2 = families.get(k - 2, ZERO_FAM)
    s_sum, d_sum = closedform.summation_polynomials(f2, families[k - 1], families[k])
    d1, s1 = recurrence.d_value(k, 1), recurrence.s_value(k, 1)
    assert s_sum + s1 == families[k].s_poly
    assert d_sum + d1 == families[k].d_poly


def test_leading_coefficients():
    report = closedform.leading_coefficient_report(5)
    assert report == [(1, 1), (2, 2), (3, F(2, 3)), (4, F(4, 45)), (5, F(2, 315))]
    steps = dict(closedform.monotone_steps(report))
    assert steps[3] and steps[4] and steps[5]
    assert not steps[2]


def test_extend_families_examples():
    fams = {f.k: f for f in closedform.extend_families(7)}
    assert set(fams) == {6, 7}
    assert fams[6].d_poly.degree == 10
    assert fams[6].d_poly(6) == 4596
    assert fams[7].d_poly(10) == 2596968
    with pytest.raises(InputError):
        closedform.extend_families(5)


def test_family_report_formats(families):
    doc = json.loads(families[3].to_json())
    assert doc["k"] == 3
    assert doc["d"] == [[1, 1], [-13, 6], [11, 6], [-4, 3], [2, 3]]
    assert doc["degrees"] == {"d": 4, "s": 3}
    assert doc["leading_coefficient"] == [2, 3]
    assert all(doc["verified"].values())
    md = closedform.markdown_table([families[2], families[3]])
    assert md.splitlines()[0] == "| k | s_k(n) | d_k(n) |"
    assert "| 2 | 2*n - 1 | 2*n^2 - 1*n |" in md
