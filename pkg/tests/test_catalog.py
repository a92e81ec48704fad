from fractions import Fraction

import pytest

from weightone.catalog import (
    AlgebraId,
    CatalogError,
    algebra_info,
    eligible_catalog,
    enumerate_catalog,
    family_cutoffs,
    is_eligible,
    killing_multiplier,
    min_sdim_over_hsq,
    sdim_over_hsq,
)


def info(name):
    return algebra_info(AlgebraId.parse(name))


def test_table_rows():
    e8 = info("E8")
    assert (e8.dim_even, e8.dim_odd, e8.sdim, e8.h_dual) == (248, 0, 248, 30)
    b02 = info("B(0,2)")
    assert (b02.dim_even, b02.dim_odd, b02.sdim, b02.h_dual) == (10, 4, 6, Fraction(5, 2))
    a1 = info("A1")
    assert (a1.dim_even, a1.sdim, a1.h_dual) == (3, 3, 2)
    assert [(info(x).sdim, info(x).h_dual) for x in ("E6", "E7", "F4", "G2")] == [(78, 12), (133, 18), (52, 9), (14, 4)]


@pytest.mark.parametrize(
    "name, dim, h",
    [("A5", 35, 6), ("B3", 21, 5), ("C4", 36, 5), ("D4", 28, 6), ("D16", 496, 30), ("D24", 1128, 46)],
)
def test_classical_formulas(name, dim, h):
    a = info(name)
    assert (a.sdim, a.h_dual) == (dim, h)


def test_names_roundtrip():
    for a in enumerate_catalog(400):
        assert AlgebraId.parse(a.name) == a.id
        assert AlgebraId.parse(a.name.lower()) == a.id
    assert str(AlgebraId("B0n", 3)) == "B(0,3)"
    assert AlgebraId.parse("b(0|3)") == AlgebraId("B0n", 3)
    with pytest.raises(CatalogError):
        AlgebraId.parse("Q7")


@pytest.mark.parametrize("name", ["B1", "C1", "C2", "D2", "D3"])
def test_out_of_range_rejected(name):
    with pytest.raises(CatalogError, match="n >="):
        info(name)


def test_rank_zero_rejected():
    with pytest.raises(CatalogError):
        AlgebraId("B0n", 0)


def test_enumerate_small():
    assert [a.name for a in enumerate_catalog(3)] == ["B(0,1)", "A1"]
    assert any(a.name == "D24" and a.h_dual == 46 for a in enumerate_catalog(1128))
    with pytest.raises(CatalogError):
        enumerate_catalog(0)


def test_enumerate_sorted_and_invariants():
    cat = enumerate_catalog(2000)
    keys = [(a.sdim, a.id.sort_key()) for a in cat]
    assert keys == sorted(keys)
    for a in cat:
        assert a.sdim == a.dim_even - a.dim_odd > 0
        assert a.h_dual > 0
        assert (2 * a.h_dual).denominator == 1
        assert (a.h_dual.denominator == 2) == (a.id.family == "B0n")
        assert (a.dim_odd == 0) == (a.id.family != "B0n")
        if a.id.family == "B0n":
            assert a.dim_odd == 2 * a.id.rank


def test_no_isomorphic_duplicates():
    # root data coincide only through the excluded low ranks; (dim, h_dual) is a
    # cheap proxy that already separates every remaining pair except B_n/C_n,
    # which differ in rank >= 3 by h_dual
    seen = {}
    for a in enumerate_catalog(2000):
        key = (a.dim_even, a.dim_odd, a.h_dual)
        assert key not in seen, (a.name, seen.get(key))
        seen[key] = a.name


def test_killing_multiplier():
    assert killing_multiplier(info("E8")) == 60
    assert killing_multiplier(info("B(0,1)")) == 3
    assert killing_multiplier(info("A1")) == 4


def test_sdim_over_hsq():
    assert sdim_over_hsq(info("B(0,1)")) == Fraction(4, 9)
    assert sdim_over_hsq(info("A1")) == Fraction(3, 4)
    assert sdim_over_hsq(info("E8")) == Fraction(62, 225)
    assert sdim_over_hsq(info("E7")) == Fraction(133, 324)


def test_true_minimum_is_e8():
    value, alg = min_sdim_over_hsq()
    assert (value, alg.name) == (Fraction(62, 225), "E8")
    assert value < Fraction(4, 9)


def test_eligibility_cutoffs():
    cut = family_cutoffs()
    assert cut["C"] == 13
    brute_c = max(n for n in range(3, 200) if n * (2 * n + 1) <= 24 * (n + 2))
    assert brute_c == 13
    assert cut == {"A": 24, "B": 23, "C": 13, "D": 24, "B0n": 13}
    assert all(is_eligible(a) for a in eligible_catalog())
    assert not is_eligible(info("D25"))
