from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_fractions
from weightone.exactnum import ParamPoly, poly_eval
from weightone.qseries import (
    FracQSeries,
    SeriesError,
    delta,
    derive_fundamental_relation,
    dim_modular_forms,
    eisenstein,
    j_cube_root,
    j_invariant,
    series_inv,
    series_mul,
    series_nth_root,
    sigma,
    supercharacter_dimension,
    weight14_constraint,
)


def eta_product_delta(precision):
    """q * prod (1 - q^n)^24, expanded by repeated polynomial multiplication."""
    coeffs = [0] * precision
    coeffs[0] = 1
    for n in range(1, precision):
        for _ in range(24):
            # multiply by (1 - q^n) in place, high degree first
            for i in range(precision - 1, n - 1, -1):
                coeffs[i] -= coeffs[i - n]
    return [0] + coeffs[: precision - 1]


def series(coeffs, base=0):
    return FracQSeries.from_coeffs(coeffs, base)


def test_sigma_examples():
    assert sigma(1, 6) == 12
    assert sigma(13, 1) == 1
    assert sigma(3, 4) == 73


def test_sigma_brute_force():
    for ell in range(4):
        for n in range(1, 60):
            assert sigma(ell, n) == sum(d**ell for d in range(1, n + 1) if n % d == 0)


def test_inverse_of_one_minus_q():
    assert series_inv(series([1, -1, 0, 0, 0])).coeffs == (1, 1, 1, 1, 1)


def test_cube_root_example():
    root = series_nth_root(series([1, 3, 0, 0, 0]), 3)
    assert root.coeffs[:3] == (1, 1, -1)
    assert (root**3).coeffs == (1, 3, 0, 0, 0)


def test_exponents_add():
    prod = series_mul(series([1], Fraction(-1, 3)), series([1], Fraction(1, 3)))
    assert prod.base_exponent == 0 and prod.coeffs == (1,)


def test_precision_never_extends():
    a = series([1, 2, 3, 4, 5])
    b = series([1, 1, 1])
    assert (a * b).precision == 3
    assert (a + b).precision == 3
    assert series_inv(b).precision == 3


def test_series_errors():
    with pytest.raises(SeriesError):
        series_inv(series([0, 1, 2]))
    with pytest.raises(SeriesError):
        series_nth_root(series([2, 1]), 2)
    with pytest.raises(SeriesError):
        series([1], Fraction(1, 3)) + series([1])
    with pytest.raises(SeriesError):
        eisenstein(3)


def test_eisenstein_printed_values():
    assert eisenstein(2, 3).coeffs == (1, -24, -72)
    assert eisenstein(14, 3).coeffs == (1, -24, -196632)
    assert eisenstein(4, 2).coeffs == (1, 240)
    assert eisenstein(6, 2).coeffs == (1, -504)


def test_weight14_is_e4_squared_e6():
    e4, e6 = eisenstein(4, 20), eisenstein(6, 20)
    assert (e4 * e4 * e6).coeffs == eisenstein(14, 20).coeffs
    # weight 8 and 10 are one-dimensional too
    assert (e4 * e4).coeffs == eisenstein(8, 20).coeffs
    assert (e4 * e6).coeffs == eisenstein(10, 20).coeffs


def test_delta_low_coefficients():
    d = delta(5)
    assert d.coeffs == (0, 1, -24, 252, -1472)
    e4, e6 = eisenstein(4, 3), eisenstein(6, 3)
    diff = e4**3 - e6**2
    assert diff[0] == 0 and diff[1] == 1728


def test_delta_matches_eta_product():
    assert list(delta(20).coeffs) == eta_product_delta(20)


def test_j_and_cube_root():
    j = j_invariant(4)
    assert j.base_exponent == -1
    assert j.coeffs == (1, 744, 196884, 21493760)
    root = j_cube_root(10)
    assert root.base_exponent == Fraction(-1, 3)
    assert root[1] == 248
    assert (root**3).coeffs == j_invariant(10).coeffs
    sq = root**2
    assert sq.base_exponent == Fraction(-2, 3)
    assert sq[1] == 496


def test_dim_modular_forms_examples():
    assert dim_modular_forms(12) == 2
    assert dim_modular_forms(14) == 1
    assert dim_modular_forms(2) == 0
    assert dim_modular_forms(0) == 1
    with pytest.raises(SeriesError):
        dim_modular_forms(7)


@pytest.mark.parametrize("w", range(0, 101, 2))
def test_dim_modular_forms_two_routes(w):
    direct = sum(1 for a in range(w + 1) for b in range(w + 1) if 4 * a + 6 * b == w)
    closed = 1 + w // 12 - (1 if w % 12 == 2 else 0)
    assert dim_modular_forms(w) == direct == closed


def test_weight14_constraint():
    assert weight14_constraint().a1_over_a0 == -24


def test_fundamental_relation():
    rel = derive_fundamental_relation(20)
    s = ParamPoly.s()
    assert rel == (s - 24) / 12
    assert rel.coeffs == (Fraction(-2), Fraction(1, 12))
    assert poly_eval(rel, 24) == 0
    # E8^3: Killing multiplier 2*30 at level 1
    assert poly_eval(rel, 744) == 60


@pytest.mark.parametrize("precision", [3, 4, 10, 25])
def test_fundamental_relation_precision_independent(precision):
    assert derive_fundamental_relation(precision).pretty() == "(s - 24)/12"


def test_fundamental_relation_needs_precision():
    with pytest.raises(SeriesError):
        derive_fundamental_relation(2)


def test_supercharacter_dimension():
    assert supercharacter_dimension(8) == 248
    assert supercharacter_dimension(16) == 496
    with pytest.raises(SeriesError):
        supercharacter_dimension(24)


def test_str_and_json_roundtrip():
    e2 = eisenstein(2, 3)
    assert str(e2) == "q^(0) * (1 - 24*q - 72*q^2 + O(q^3))"
    assert str(j_cube_root(2)) == "q^(-1/3) * (1 + 248*q + O(q^2))"
    js = j_cube_root(5).to_json()
    assert js["base_exponent"] == "-1/3" and js["precision"] == 5
    assert FracQSeries.from_json(js) == j_cube_root(5)


coeff_lists = st.lists(small_fractions, min_size=5, max_size=5)


@settings(max_examples=50)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_series_ring_laws(a, b, c):
    f, g, h = series(a), series(b), series(c)
    assert ((f * g) * h).coeffs == (f * (g * h)).coeffs
    assert (f * (g + h)).coeffs == (f * g + f * h).coeffs
    assert (f * g).coeffs == (g * f).coeffs


@settings(max_examples=50)
@given(st.lists(small_fractions, min_size=4, max_size=4), st.integers(1, 4))
def test_root_of_power_is_identity(tail, n):
    f = series([1] + tail)
    assert series_nth_root(f**n, n).coeffs == f.coeffs


@settings(max_examples=50)
@given(st.lists(small_fractions, min_size=4, max_size=4), small_fractions.filter(lambda x: x != 0))
def test_inverse_roundtrip(tail, lead):
    f = series([lead] + tail)
    assert (f * series_inv(f)).coeffs == (1, 0, 0, 0, 0)


def test_parampoly_coefficients():
    s = ParamPoly.s()
    chi = FracQSeries(Fraction(-1), (ParamPoly.const(1), s))
    prod = chi * eisenstein(2, 2)
    assert prod[1] == s - 24
