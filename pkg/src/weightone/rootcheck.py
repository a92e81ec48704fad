"""Root data of sl(m|n) and osp(M|2n) in epsilon/delta coordinates.

Norms are always taken in the coordinate form (eps_i, eps_j) = delta_ij,
(delta_i, delta_j) = -delta_ij.  The Killing form is ``form_scale`` times it;
``form_scale`` may be negative or zero, so sign reports never fold it in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

ROOT_GUARD = 200


class RootDataError(ValueError):
    pass


class GuardRefusal(RuntimeError):
    pass


Vec = tuple[int, ...]


@dataclass(frozen=True)
class RootDatum:
    label: str
    basis_signature: tuple[int, ...]
    even_roots: tuple[Vec, ...]
    odd_roots: tuple[Vec, ...]
    form_scale: Fraction
    rank: int
    dim_even: int
    dim_odd: int

    def norm(self, v: Vec) -> int:
        return self.inner(v, v)

    def inner(self, u: Vec, v: Vec) -> int:
        return sum(s * a * b for s, a, b in zip(self.basis_signature, u, v))

    @property
    def killing_degenerate(self) -> bool:
        return self.form_scale == 0

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "signature": list(self.basis_signature),
            "even_roots": [list(r) for r in self.even_roots],
            "odd_roots": [list(r) for r in self.odd_roots],
            "form_scale": str(self.form_scale),
        }


def _unit(size: int, i: int, c: int = 1) -> list[int]:
    v = [0] * size
    v[i] = c
    return v


def _add(*vs) -> Vec:
    return tuple(sum(x) for x in zip(*vs))


def _sl(m: int, n: int) -> RootDatum:
    if m < 1 or n < 1 or (m, n) == (1, 1):
        raise RootDataError(f"sl({m}|{n}) needs m, n >= 1 and (m, n) != (1, 1)")
    size = m + n
    eps = [_unit(size, i) for i in range(m)]
    dlt = [_unit(size, m + j) for j in range(n)]
    neg = lambda v: tuple(-x for x in v)
    even = [_add(eps[i], neg(eps[j])) for i in range(m) for j in range(m) if i != j]
    even += [_add(dlt[i], neg(dlt[j])) for i in range(n) for j in range(n) if i != j]
    odd = []
    for i in range(m):
        for j in range(n):
            r = _add(eps[i], neg(dlt[j]))
            odd += [r, neg(r)]
    return RootDatum(
        f"sl({m}|{n})",
        (1,) * m + (-1,) * n,
        tuple(sorted(even)),
        tuple(sorted(odd)),
        Fraction(2 * (m - n)),
        m + n - 1,
        m * m + n * n - 1,
        2 * m * n,
    )


def _osp(big_m: int, two_n: int) -> RootDatum:
    if big_m < 1 or two_n < 0 or two_n % 2:
        raise RootDataError(f"osp({big_m}|{two_n}) needs M >= 1 and an even 2n >= 0")
    if big_m + two_n < 3 or (two_n == 0 and big_m < 3):
        raise RootDataError(f"osp({big_m}|{two_n}) is trivial or not simple")
    m, odd_m = divmod(big_m, 2)
    n = two_n // 2
    size = m + n
    eps = [_unit(size, i) for i in range(m)]
    dlt = [_unit(size, m + j) for j in range(n)]
    even: set[Vec] = set()
    odd: set[Vec] = set()
    signs = ((1, 1), (1, -1), (-1, 1), (-1, -1))
    for i, j in combinations(range(m), 2):
        for a, b in signs:
            even.add(_add([a * x for x in eps[i]], [b * x for x in eps[j]]))
    for i, j in combinations(range(n), 2):
        for a, b in signs:
            even.add(_add([a * x for x in dlt[i]], [b * x for x in dlt[j]]))
    for j in range(n):
        even.add(tuple(_unit(size, m + j, 2)))
        even.add(tuple(_unit(size, m + j, -2)))
    if odd_m:
        for i in range(m):
            even.add(tuple(_unit(size, i, 1)))
            even.add(tuple(_unit(size, i, -1)))
    for i in range(m):
        for j in range(n):
            for a, b in signs:
                odd.add(_add([a * x for x in eps[i]], [b * x for x in dlt[j]]))
    if odd_m:
        for j in range(n):
            odd.add(tuple(_unit(size, m + j, 1)))
            odd.add(tuple(_unit(size, m + j, -1)))
    return RootDatum(
        f"osp({big_m}|{two_n})",
        (1,) * m + (-1,) * n,
        tuple(sorted(even)),
        tuple(sorted(odd)),
        Fraction(2 * (big_m - two_n - 2)),
        m + n,
        big_m * (big_m - 1) // 2 + n * (2 * n + 1),
        big_m * two_n,
    )


def build_root_datum(family: str, p1: int, p2: int) -> RootDatum:
    """Root datum of sl(p1|p2) or osp(p1|p2); for osp, p2 is the even number 2n."""
    if family == "sl":
        return _sl(p1, p2)
    if family == "osp":
        return _osp(p1, p2)
    raise RootDataError(f"unknown family {family!r}; expected 'sl' or 'osp'")


@dataclass(frozen=True)
class NormSignReport:
    has_positive_even: bool
    has_negative_even: bool
    has_isotropic_odd: bool
    form_scale: Fraction

    def to_json(self) -> dict:
        return {
            "has_positive_even": self.has_positive_even,
            "has_negative_even": self.has_negative_even,
            "has_isotropic_odd": self.has_isotropic_odd,
            "form_scale": str(self.form_scale),
        }


def norm_sign_report(rd: RootDatum) -> NormSignReport:
    norms = [rd.norm(r) for r in rd.even_roots]
    return NormSignReport(
        any(x > 0 for x in norms),
        any(x < 0 for x in norms),
        any(rd.norm(r) == 0 for r in rd.odd_roots),
        rd.form_scale,
    )


def _rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def defect_bruteforce(rd: RootDatum) -> int:
    """Largest linearly independent, pairwise orthogonal set of isotropic roots."""
    total = len(rd.even_roots) + len(rd.odd_roots)
    if total > ROOT_GUARD:
        raise GuardRefusal(f"{rd.label} has {total} roots; exhaustive defect search is capped at {ROOT_GUARD}")
    iso = [r for r in rd.even_roots + rd.odd_roots if rd.norm(r) == 0]
    best = 0

    def extend(chosen: list[Vec], start: int):
        nonlocal best
        best = max(best, len(chosen))
        # cannot beat best even taking every remaining candidate
        if len(chosen) + len(iso) - start <= best:
            return
        for i in range(start, len(iso)):
            r = iso[i]
            if all(rd.inner(r, c) == 0 for c in chosen) and _rank(chosen + [r]) == len(chosen) + 1:
                chosen.append(r)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return best


def singular_vector_level(m: int, alpha_norm) -> Fraction:
    """Level at which f_{-1}^m |0> becomes singular: (m - 1) (alpha, alpha) / 2."""
    if m < 1:
        raise ValueError("m must be positive")
    return (m - 1) * Fraction(alpha_norm) / 2


def positivity_obstruction(rd: RootDatum) -> bool:
    """True when even roots of both signs exist, so no level k has k*(a,a) > 0 for all."""
    rep = norm_sign_report(rd)
    return rep.has_positive_even and rep.has_negative_even
