"""Exact rationals and univariate polynomials over them.

Rationals are :class:`fractions.Fraction`; ``rat`` is the canonical
constructor used throughout the package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def rat(n: int, d: int = 1) -> Fraction:
    if d == 0:
        raise ValueError(f"zero denominator in rat({n}, {d})")
    return Fraction(n, d)


def fmt_rational(x: Scalar) -> str:
    """Serialize as "p/q", or "p" when q == 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class ParamPoly:
    """Polynomial in the formal parameter ``s`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``s**i``; trailing zeros are trimmed so
    the zero polynomial has no coefficients.  Instances are immutable and mix
    freely with ``int`` and ``Fraction`` in ring operations.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    @classmethod
    def s(cls) -> "ParamPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "ParamPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    @staticmethod
    def _lift(other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return ParamPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return ParamPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return ParamPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("ParamPoly division by zero")
            return ParamPoly(c / other for c in self.coeffs)
        if isinstance(other, ParamPoly) and other.degree == 0:
            return self / other.coeffs[0]
        return NotImplemented

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"ParamPoly({[fmt_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return self.pretty()

    def pretty(self) -> str:
        """Human form with the rational content pulled out, e.g. ``(s - 24)/12``."""
        if len(self.coeffs) <= 1:
            return fmt_rational(self.coeffs[0]) if self.coeffs else "0"
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        ints = [i // g for i in ints]
        content = Fraction(g, den)
        terms = []
        for power in range(len(ints) - 1, -1, -1):
            c = ints[power]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if power == 0 else ("s" if power == 1 else f"s^{power}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        inner = " ".join(terms)
        if content == 1:
            return inner
        if len(terms) > 1:
            inner = f"({inner})"
        if content.numerator == -1:
            inner = f"-{inner}"
        elif content.numerator != 1:
            inner = f"{content.numerator}*{inner}"
        if content.denominator != 1:
            inner = f"{inner}/{content.denominator}"
        return inner


def poly_eval(p: ParamPoly, x: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # x/(e^x - 1) = 1 / D(x), D(x) = sum_{k>=0} x^k/(k+1)!; invert D term by term.
    d = [Fraction(1, factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(0)] * (n + 1)
    inv[0] = Fraction(1)
    for k in range(1, n + 1):
        inv[k] = -sum(d[j] * inv[k - j] for j in range(1, k + 1))
    return tuple(inv[k] * factorial(k) for k in range(n + 1))


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number from x/(e^x - 1), so B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    return _bernoulli_table(n)[n]
