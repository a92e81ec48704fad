"""Truncated q-expansions with a rational leading exponent.

Only normalized Eisenstein series are ever materialized, so every coefficient
is rational (or a :class:`ParamPoly` when a superdimension is left symbolic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import ParamPoly, bernoulli, fmt_rational

DEFAULT_PRECISION = 20


class SeriesError(ValueError):
    pass


def _fmt_coeff(c) -> str:
    return c.pretty() if isinstance(c, ParamPoly) else fmt_rational(c)


@dataclass(frozen=True)
class FracQSeries:
    """q^base_exponent * (coeffs[0] + coeffs[1] q + ... + O(q^precision))."""

    base_exponent: Fraction
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least one stored coefficient")
        object.__setattr__(self, "base_exponent", Fraction(self.base_exponent))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, base_exponent=0) -> "FracQSeries":
        return cls(Fraction(base_exponent), tuple(c if isinstance(c, ParamPoly) else Fraction(c) for c in coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def coeff_at(self, exponent) -> object:
        """Coefficient of q^exponent (absolute, not relative to the base)."""
        i = Fraction(exponent) - self.base_exponent
        if i.denominator != 1 or not 0 <= i < self.precision:
            raise SeriesError(f"q^{exponent} is not stored in this series")
        return self.coeffs[int(i)]

    def truncate(self, precision: int) -> "FracQSeries":
        if precision > self.precision:
            raise SeriesError("cannot extend precision by truncation")
        return FracQSeries(self.base_exponent, self.coeffs[:precision])

    def _align(self, other: "FracQSeries"):
        d = other.base_exponent - self.base_exponent
        if d.denominator != 1:
            raise SeriesError("cannot add series whose exponents differ by a non-integer")
        return int(d)

    def __add__(self, other):
        if not isinstance(other, FracQSeries):
            return self + FracQSeries(Fraction(0), (other,) + (0,) * (self.precision - 1))
        d = self._align(other)
        if d < 0:
            return other + self
        # other starts d steps above self
        prec = min(self.precision, other.precision + d)
        out = list(self.coeffs[:prec])
        for i, c in enumerate(other.coeffs):
            if i + d < prec:
                out[i + d] = out[i + d] + c
        return FracQSeries(self.base_exponent, out)

    __radd__ = __add__

    def __neg__(self):
        return FracQSeries(self.base_exponent, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FracQSeries):
            return FracQSeries(self.base_exponent, [c * other for c in self.coeffs])
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FracQSeries):
            return series_mul(self, series_inv(other))
        return FracQSeries(self.base_exponent, [c / other for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            return series_inv(self) ** (-n)
        out = FracQSeries(Fraction(0), (Fraction(1),) + (Fraction(0),) * (self.precision - 1))
        base = self
        while n:
            if n & 1:
                out = series_mul(out, base)
            base = series_mul(base, base)
            n >>= 1
        return out

    def strip_leading_zeros(self) -> "FracQSeries":
        """Move leading zero coefficients into the exponent (costs precision)."""
        k = 0
        while k < self.precision and self.coeffs[k] == 0:
            k += 1
        if k == self.precision:
            raise SeriesError("series is zero to its stored precision")
        return FracQSeries(self.base_exponent + k, self.coeffs[k:])

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if isinstance(c, ParamPoly) and len(c.coeffs) > 1:
                sign, body = "+", f"({c.pretty()})"
            else:
                value = c.coeffs[0] if isinstance(c, ParamPoly) else c
                sign, body = ("-" if value < 0 else "+"), fmt_rational(abs(value))
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
            parts.append((sign, body))
        parts.append(("+", f"O(q^{self.precision})"))
        sign, body = parts[0]
        inner = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            inner += f" {sign} {body}"
        return f"q^({fmt_rational(self.base_exponent)}) * ({inner})"

    def to_json(self) -> dict:
        return {
            "base_exponent": fmt_rational(self.base_exponent),
            "coeffs": [_fmt_coeff(c) for c in self.coeffs],
            "precision": self.precision,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FracQSeries":
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        if len(coeffs) != obj["precision"]:
            raise SeriesError("precision does not match coefficient count")
        return cls(Fraction(obj["base_exponent"]), coeffs)


def series_mul(f: FracQSeries, g: FracQSeries) -> FracQSeries:
    prec = min(f.precision, g.precision)
    out = []
    for n in range(prec):
        acc = 0
        for i in range(n + 1):
            acc = acc + f.coeffs[i] * g.coeffs[n - i]
        out.append(acc)
    return FracQSeries(f.base_exponent + g.base_exponent, out)


def _check_unit(c):
    if isinstance(c, ParamPoly):
        if c.degree != 0:
            raise SeriesError(f"leading coefficient {c} is not invertible")
        return c.coeffs[0]
    if c == 0:
        raise SeriesError("leading coefficient is zero; strip it into the exponent first")
    return c


def series_inv(f: FracQSeries) -> FracQSeries:
    a0 = _check_unit(f.coeffs[0])
    inv0 = 1 / Fraction(a0)
    out = [inv0]
    for n in range(1, f.precision):
        acc = 0
        for i in range(1, n + 1):
            acc = acc + f.coeffs[i] * out[n - i]
        out.append(-acc * inv0)
    return FracQSeries(-f.base_exponent, out)


def series_nth_root(f: FracQSeries, n: int) -> FracQSeries:
    """The unique n-th root with leading coefficient 1."""
    if n < 1:
        raise SeriesError("root order must be positive")
    if _check_unit(f.coeffs[0]) != 1:
        raise SeriesError("n-th root needs leading coefficient 1")
    # g^n = f with g0 = 1; compare q^k coefficients: n*g_k + (terms in g_1..g_{k-1}) = f_k
    g = [Fraction(1)]
    for k in range(1, f.precision):
        trial = FracQSeries(Fraction(0), g + [0]) ** n
        g.append((f.coeffs[k] - trial.coeffs[k]) / n)
    root = FracQSeries(f.base_exponent / n, g)
    check = root ** n
    if check.coeffs != tuple(f.coeffs):
        raise SeriesError("n-th root failed re-multiplication check")
    return root


def sigma(ell: int, n: int) -> int:
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**ell
            e = n // d
            if e != d:
                total += e**ell
        d += 1
    return total


def eisenstein(two_k: int, precision: int = DEFAULT_PRECISION) -> FracQSeries:
    """Normalized E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n."""
    if two_k < 2 or two_k % 2:
        raise SeriesError(f"weight must be even and >= 2, got {two_k}")
    c = -Fraction(2 * two_k) / bernoulli(two_k)
    coeffs = [Fraction(1)] + [c * sigma(two_k - 1, n) for n in range(1, precision)]
    return FracQSeries(Fraction(0), coeffs)


def delta(precision: int = DEFAULT_PRECISION) -> FracQSeries:
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    return (e4**3 - e6**2) / 1728


def j_invariant(precision: int = DEFAULT_PRECISION) -> FracQSeries:
    """j = E4^3 / Delta, returned as q^-1 * (1 + 744 q + ...) with `precision` terms."""
    d = delta(precision + 1).strip_leading_zeros()
    return eisenstein(4, precision) ** 3 / d


def j_cube_root(precision: int = DEFAULT_PRECISION) -> FracQSeries:
    return series_nth_root(j_invariant(precision), 3)


def dim_modular_forms(weight: int) -> int:
    """Dimension of level-one holomorphic modular forms of the given weight.

    Counts monomials E4^a E6^b with 4a + 6b = weight.
    """
    if weight < 0 or weight % 2:
        raise SeriesError(f"modular weight must be even and nonnegative, got {weight}")
    return sum(1 for b in range(weight // 6 + 1) if (weight - 6 * b) % 4 == 0)


@dataclass(frozen=True)
class Weight14Constraint:
    a1_over_a0: Fraction


def weight14_constraint(precision: int = DEFAULT_PRECISION) -> Weight14Constraint:
    if dim_modular_forms(14) != 1:
        raise SeriesError("weight-14 space is not one-dimensional")
    e14 = eisenstein(14, max(precision, 2))
    return Weight14Constraint(e14[1] / e14[0])


def _zhu_rhs_times_delta(killing, sdim, precision: int) -> FracQSeries:
    """Delta times (trace of u0 v0 minus <u,v>/12 * E2 * character), with <u,v> = 1.

    Only the first two coefficients are meaningful; the unknown higher terms of
    the trace and the character are truncated away.
    """
    d = delta(precision + 1).strip_leading_zeros()
    e2 = eisenstein(2, precision)
    # trace over V0 vanishes; over V1 it is the Killing form
    trace = FracQSeries(Fraction(-1), (ParamPoly(), ParamPoly.const(0) + killing))
    chi = FracQSeries(Fraction(-1), (ParamPoly.const(1), sdim))
    return d * trace - (d * e2 * chi) / 12


def derive_fundamental_relation(precision: int = DEFAULT_PRECISION) -> ParamPoly:
    """Killing form in units of <u,v>, as a polynomial in s = sdim(V1).

    The weight-14 form Delta * Z(u[-1]v) has a1 = -24 a0; equating it with the
    Delta-multiplied Zhu identity leaves one linear equation for the Killing form.
    """
    if precision < 3:
        raise SeriesError("precision must be at least 3")
    s = ParamPoly.s()
    ratio = weight14_constraint(precision).a1_over_a0
    # a1 - ratio*a0 is affine in the Killing value: evaluate at 0 and 1
    at0 = _zhu_rhs_times_delta(ParamPoly(), s, precision)
    at1 = _zhu_rhs_times_delta(ParamPoly.const(1), s, precision)
    if at0.base_exponent != 0:
        raise SeriesError("internal: expected an honest power series")
    c0 = at0[1] - ratio * at0[0]
    c1 = at1[1] - ratio * at1[0] - c0
    if at1[0] != at0[0] or c1 != ParamPoly.const(1):
        raise SeriesError("internal: inconsistent linear system for the Killing form")
    return -c0


def supercharacter_dimension(central_charge: int, precision: int = DEFAULT_PRECISION) -> int:
    """sdim(V1) forced by the character equal to (j^{1/3})^(c/8)."""
    if central_charge not in (8, 16):
        raise SeriesError(f"central charge must be 8 or 16, got {central_charge}")
    chi = j_cube_root(max(precision, 2)) ** (central_charge // 8)
    value = chi.coeff_at(1 - Fraction(central_charge, 24))
    assert value.denominator == 1
    return int(value)
