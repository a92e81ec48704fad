"""Exhaustive search for weight-one structures.

For a fixed total superdimension S the level of every simple component is
forced by ``h_dual / level = (S + shift - 24) / 24``.  The search therefore
reduces to listing all multisets of eligible algebras whose superdimensions
sum to S.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .catalog import (
    CANONICAL_RANGES,
    SimpleAlgebra,
    eligible_catalog,
    enumerate_catalog,
    family_cutoffs,
    is_eligible,
)

log = logging.getLogger(__name__)

PAPER_H_DUAL_BOUND = 55
PAPER_SDIM_BOUND = 1344
# companion summands V(E8)+V(E8) and V(E8) lifting c=8 and c=16 to c=24
SHIFTS = {24: 0, 16: 248, 8: 496}


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class Component:
    algebra: SimpleAlgebra
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise CensusError(f"level must be positive, got {self.level}")

    def sort_key(self):
        return (self.algebra.id.sort_key(), self.level)

    def __str__(self):
        return f"{self.algebra.name}:{self.level}"


@dataclass(frozen=True)
class CensusSolution:
    components: tuple[Component, ...]
    total_sdim: int
    ratio: Fraction
    purely_even: bool

    @classmethod
    def build(cls, components, shift: int = 0) -> "CensusSolution":
        comps = tuple(sorted(components, key=Component.sort_key))
        total = sum(c.algebra.sdim for c in comps)
        return cls(
            comps,
            total,
            Fraction(total + shift - 24, 24),
            not any(c.algebra.is_super for c in comps),
        )

    def key(self):
        return (self.total_sdim, tuple(c.sort_key() for c in self.components))

    def label(self) -> str:
        return "+".join(str(c) for c in self.components)

    def algebra_label(self) -> str:
        return "+".join(c.algebra.name for c in self.components)


@dataclass
class CensusReport:
    central_charge: int
    shift: int
    solutions: list[CensusSolution]
    sdim_lo: int
    sdim_hi: int

    @property
    def count_total(self) -> int:
        return len(self.solutions)

    @property
    def count_purely_even(self) -> int:
        return sum(1 for s in self.solutions if s.purely_even)

    @property
    def count_super(self) -> int:
        return self.count_total - self.count_purely_even

    @property
    def count_bare_algebras(self) -> int:
        # levels are forced by the equation, so dropping them loses nothing
        return len({s.algebra_label() for s in self.solutions})

    @property
    def max_total_sdim(self) -> int:
        return max((s.total_sdim for s in self.solutions), default=0)

    def summary(self) -> str:
        return (
            f"c={self.central_charge} shift={self.shift}: "
            f"{self.count_total} solutions ({self.count_purely_even} purely even, "
            f"{self.count_super} super); max total sdim {self.max_total_sdim}"
        )


def ratio_for(total_sdim: int, shift: int = 0) -> Fraction:
    if total_sdim + shift <= 24:
        raise CensusError(
            f"no solutions below superdimension {25 - shift}: "
            f"ratio ({total_sdim}+{shift}-24)/24 is not positive"
        )
    return Fraction(total_sdim + shift - 24, 24)


def eligible_level(a: SimpleAlgebra, r: Fraction) -> int | None:
    if r <= 0:
        raise CensusError("ratio must be positive")
    k = a.h_dual / Fraction(r)
    if k.denominator == 1 and k > 0:
        return int(k)
    return None


def _multisets(items: list[tuple[SimpleAlgebra, int]], target: int):
    """Yield every multiset (as index lists) of items summing to target in sdim.

    Depth-first with non-increasing indices, so each multiset appears once.
    """
    sd = [a.sdim for a, _ in items]
    path: list[int] = []

    def rec(top: int, remaining: int):
        if remaining == 0:
            yield list(path)
            return
        for i in range(top, -1, -1):
            if sd[i] <= remaining:
                path.append(i)
                yield from rec(i, remaining - sd[i])
                path.pop()

    yield from rec(len(items) - 1, target)


def solutions_at(total: int, shift: int, algebras: list[SimpleAlgebra]) -> list[CensusSolution]:
    if total + shift <= 24 or total <= 0:
        return []
    r = ratio_for(total, shift)
    items = []
    for a in algebras:
        if a.sdim > total:
            continue
        k = eligible_level(a, r)
        if k is not None:
            items.append((a, k))
    out = []
    for idx in _multisets(items, total):
        comps = [Component(items[i][0], items[i][1]) for i in idx]
        out.append(CensusSolution.build(comps, shift))
    return out


def _shard_worker(args):
    totals, shift, ranges = args
    algebras = _universe(shift, ranges)
    out = []
    for s in totals:
        out.extend(solutions_at(s, shift, algebras))
    return out


def _universe(shift: int, ranges) -> list[SimpleAlgebra]:
    if shift == 0:
        return eligible_catalog(ranges)
    # shifted censuses only reach small totals; no c=24 eligibility cut applies
    return enumerate_catalog(PAPER_SDIM_BOUND, ranges)


def enumerate_solutions(
    shift: int = 0,
    sdim_lo: int = 25,
    sdim_hi: int = PAPER_SDIM_BOUND - 1,
    *,
    central_charge: int = 24,
    shards: int = 1,
    ranges: dict | None = None,
) -> CensusReport:
    if sdim_lo > sdim_hi:
        raise CensusError(f"empty range [{sdim_lo}, {sdim_hi}]")
    if shards < 1:
        raise CensusError("shards must be positive")
    lo = max(sdim_lo, 25 - shift, 1)
    totals = list(range(lo, sdim_hi + 1))
    if shards == 1:
        sols = _shard_worker((totals, shift, ranges))
    else:
        # round-robin keeps shard workloads roughly even
        jobs = [(totals[i::shards], shift, ranges) for i in range(shards)]
        with ProcessPoolExecutor(max_workers=shards) as pool:
            sols = [s for part in pool.map(_shard_worker, jobs) for s in part]
    sols.sort(key=CensusSolution.key)
    log.debug("enumerated %d solutions over S in [%d, %d]", len(sols), lo, sdim_hi)
    return CensusReport(central_charge, shift, sols, sdim_lo, sdim_hi)


def solve_weight_one(central_charge: int, series_precision: int = 20, *, shards: int = 1, sdim_hi: int | None = None) -> CensusReport:
    if central_charge not in SHIFTS:
        raise CensusError(f"central charge must be one of 8, 16, 24; got {central_charge}")
    shift = SHIFTS[central_charge]
    if central_charge == 24:
        hi = PAPER_SDIM_BOUND - 1 if sdim_hi is None else sdim_hi
        return enumerate_solutions(0, 25, hi, shards=shards)
    from .qseries import supercharacter_dimension

    s = supercharacter_dimension(central_charge, series_precision)
    if sdim_hi is not None and s > sdim_hi:
        return CensusReport(central_charge, shift, [], s, sdim_hi)
    return enumerate_solutions(shift, s, s, central_charge=central_charge, shards=shards)


@dataclass(frozen=True)
class Bounds:
    h_dual_bound: Fraction
    sdim_bound: int
    sharp_sdim_max: int
    sharp_maximizer: SimpleAlgebra
    family_cutoffs: dict


def derive_bounds(ranges: dict | None = None) -> Bounds:
    """Published bounds plus the sharp one from per-component eligibility.

    Each component satisfies sdim <= S <= 24 * (h_dual + 1), so the largest
    admissible total is the max of 24 * (h_dual + 1) over eligible members.
    """
    best = max(eligible_catalog(ranges), key=lambda a: (a.h_dual, a.id.sort_key()))
    sharp = 24 * (best.h_dual + 1)
    assert sharp.denominator == 1
    return Bounds(
        Fraction(PAPER_H_DUAL_BOUND),
        PAPER_SDIM_BOUND,
        int(sharp),
        best,
        family_cutoffs(ranges),
    )


def verify_solution(sol: CensusSolution, shift: int = 0) -> bool:
    """Recheck a solution from scratch; independent of the generator."""
    if not sol.components:
        return False
    total = 0
    for c in sol.components:
        total += c.algebra.dim_even - c.algebra.dim_odd
    if total != sol.total_sdim:
        return False
    numer = sol.total_sdim + shift - 24
    if numer <= 0:
        return False
    # h/k == numer/24  <=>  24 h == k numer, cross-multiplied to stay in integers
    for c in sol.components:
        h = c.algebra.h_dual
        if c.level < 1 or 24 * h.numerator != c.level * numer * h.denominator:
            return False
    if sol.ratio != Fraction(numer, 24):
        return False
    return sol.purely_even == all(c.algebra.id.family != "B0n" for c in sol.components)


# Alternative lowest-rank conventions reported when the canonical counts disagree
# with the published ones.
RANGE_CONVENTIONS = {
    "canonical": CANONICAL_RANGES,
    "B1+": {**CANONICAL_RANGES, "B": 1},
    "C1+": {**CANONICAL_RANGES, "C": 1},
    "C2+": {**CANONICAL_RANGES, "C": 2},
    "D3+": {**CANONICAL_RANGES, "D": 3},
    "D2+": {**CANONICAL_RANGES, "D": 2},
    "all-ranks": {"A": 1, "B": 1, "C": 1, "D": 2, "B0n": 1},
}


def range_convention_counts(sdim_hi: int = PAPER_SDIM_BOUND - 1) -> dict[str, tuple[int, int]]:
    out = {}
    for name, ranges in RANGE_CONVENTIONS.items():
        rep = enumerate_solutions(0, 25, sdim_hi, ranges=ranges)
        out[name] = (rep.count_total, rep.count_purely_even)
    return out


__all__ = [
    "Bounds",
    "CensusError",
    "CensusReport",
    "CensusSolution",
    "Component",
    "derive_bounds",
    "eligible_level",
    "enumerate_solutions",
    "is_eligible",
    "range_convention_counts",
    "ratio_for",
    "solve_weight_one",
    "verify_solution",
]
