from fractions import Fraction

from hypothesis import strategies as st

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def frac_list(min_size=1, max_size=6):
    return st.lists(small_fractions, min_size=min_size, max_size=max_size)


def as_fraction_tuple(xs):
    return tuple(Fraction(x) for x in xs)
