"""Simple Lie (super)algebras allowed as weight-one components.

Every entry is either purely even or of type B(0,n) = osp(1|2n).  Dimensions
and dual Coxeter numbers come from closed-form row formulas per family.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")
FAMILIES = CLASSICAL + EXCEPTIONAL + ("B0n",)
_FAMILY_ORDER = {f: i for i, f in enumerate(FAMILIES)}

# Smallest rank per ranked family; these ranges avoid the isomorphisms
# A1=B1=C1, B2=C2, D2=A1+A1, D3=A3.
CANONICAL_RANGES = {"A": 1, "B": 2, "C": 3, "D": 4, "B0n": 1}


class CatalogError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class AlgebraId:
    family: str
    rank: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CatalogError(f"unknown family {self.family!r}")
        if self.family in EXCEPTIONAL:
            if self.rank is not None:
                raise CatalogError(f"{self.family} takes no rank")
        elif not isinstance(self.rank, int) or self.rank < 1:
            raise CatalogError(f"family {self.family} needs a positive rank")

    def sort_key(self):
        return (_FAMILY_ORDER[self.family], self.rank or 0)

    def __lt__(self, other):
        if not isinstance(other, AlgebraId):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.family in EXCEPTIONAL:
            return self.family
        if self.family == "B0n":
            return f"B(0,{self.rank})"
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "AlgebraId":
        t = text.strip().upper().replace(" ", "")
        if t in EXCEPTIONAL:
            return cls(t)
        m = re.fullmatch(r"B\(0[,|](\d+)\)", t)
        if m:
            return cls("B0n", int(m.group(1)))
        m = re.fullmatch(r"([ABCD])(\d+)", t)
        if m:
            return cls(m.group(1), int(m.group(2)))
        raise CatalogError(f"cannot parse algebra name {text!r}")


@dataclass(frozen=True)
class SimpleAlgebra:
    id: AlgebraId
    dim_even: int
    dim_odd: int
    sdim: int
    h_dual: Fraction

    @property
    def name(self) -> str:
        return str(self.id)

    @property
    def is_super(self) -> bool:
        return self.id.family == "B0n"


_EXCEPTIONAL_ROWS = {
    "E6": (78, 12),
    "E7": (133, 18),
    "E8": (248, 30),
    "F4": (52, 9),
    "G2": (14, 4),
}


def _row(family: str, n: int | None) -> tuple[int, int, Fraction]:
    if family in _EXCEPTIONAL_ROWS:
        dim, h = _EXCEPTIONAL_ROWS[family]
        return dim, 0, Fraction(h)
    if family == "A":
        return n * (n + 2), 0, Fraction(n + 1)
    if family == "B":
        return n * (2 * n + 1), 0, Fraction(2 * n - 1)
    if family == "C":
        return n * (2 * n + 1), 0, Fraction(n + 1)
    if family == "D":
        return n * (2 * n - 1), 0, Fraction(2 * n - 2)
    # B(0,n): even part sp(2n), odd part the 2n-dim defining module
    return n * (2 * n + 1), 2 * n, Fraction(2 * n + 1, 2)


def algebra_info(id: AlgebraId, ranges: dict | None = None) -> SimpleAlgebra:
    ranges = CANONICAL_RANGES if ranges is None else ranges
    if id.family in ranges and id.rank < ranges[id.family]:
        lo = ranges[id.family]
        fam = "B(0,n)" if id.family == "B0n" else f"{id.family}n"
        raise CatalogError(f"{id} outside canonical range: {fam} requires n >= {lo}")
    even, odd, h = _row(id.family, id.rank)
    return SimpleAlgebra(id, even, odd, even - odd, h)


def is_eligible(a: SimpleAlgebra) -> bool:
    """Necessary condition for appearing in any central-charge-24 solution.

    From h/k <= h and sdim(component) <= total: sdim <= 24 * (h_dual + 1).
    """
    return a.sdim <= 24 * (a.h_dual + 1)


def _ranked_members(family: str, lo: int, max_sdim: int):
    n = lo
    while True:
        a = algebra_info(AlgebraId(family, n), {family: lo})
        # sdim is strictly increasing in n for every ranked family
        if a.sdim > max_sdim:
            return
        if a.sdim > 0:
            yield a
        n += 1


def enumerate_catalog(max_sdim: int, ranges: dict | None = None) -> list[SimpleAlgebra]:
    """All catalog members with 0 < sdim <= max_sdim, sorted by (sdim, id)."""
    if max_sdim < 1:
        raise CatalogError("max_sdim must be at least 1")
    ranges = CANONICAL_RANGES if ranges is None else ranges
    out = [algebra_info(AlgebraId(f)) for f in EXCEPTIONAL]
    out = [a for a in out if a.sdim <= max_sdim]
    for family in CLASSICAL + ("B0n",):
        out.extend(_ranked_members(family, ranges[family], max_sdim))
    out.sort(key=lambda a: (a.sdim, a.id.sort_key()))
    return out


def eligible_catalog(ranges: dict | None = None) -> list[SimpleAlgebra]:
    """The finite set of members passing :func:`is_eligible`."""
    # Largest eligible sdim is 24*(46+1) (D24); 2000 leaves generous headroom and
    # every family's eligibility fails for good well below it.
    return [a for a in enumerate_catalog(2000, ranges) if is_eligible(a)]


def family_cutoffs(ranges: dict | None = None) -> dict[str, int]:
    """Largest eligible rank for each ranked family."""
    out = {}
    for a in eligible_catalog(ranges):
        fam = a.id.family
        if a.id.rank is not None:
            out[fam] = max(out.get(fam, 0), a.id.rank)
    return out


def killing_multiplier(a: SimpleAlgebra) -> Fraction:
    """Killing form = 2 h_dual times the normalized invariant form."""
    return 2 * a.h_dual


def sdim_over_hsq(a: SimpleAlgebra) -> Fraction:
    return Fraction(a.sdim) / (a.h_dual * a.h_dual)


def min_sdim_over_hsq(algebras=None) -> tuple[Fraction, SimpleAlgebra]:
    algebras = eligible_catalog() if algebras is None else algebras
    best = min(algebras, key=lambda a: (sdim_over_hsq(a), a.id.sort_key()))
    return sdim_over_hsq(best), best
