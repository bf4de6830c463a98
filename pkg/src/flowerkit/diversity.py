"""Exact diversity statistics and the stability distance."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import SetFamily, VertexSet, binom, fmt_rational, max_degree, mask_of
from .core.rational import as_rational
from .errors import BadParams, EmptyFamily, PreconditionViolated


@dataclass(frozen=True)
class DiversityReport:
    size: int
    max_degree: int
    argmax: int
    C: Fraction
    value: Fraction

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "max_degree": self.max_degree,
            "argmax": self.argmax,
            "C": fmt_rational(self.C),
            "value": fmt_rational(self.value),
        }


def diversity(F: SetFamily) -> int:
    return len(F) - max_degree(F)[0]


def diversity_report(F: SetFamily, C) -> DiversityReport:
    C = as_rational(C)
    if C < 0:
        raise BadParams(f"C must be nonnegative, got {C}")
    delta, x = max_degree(F)
    return DiversityReport(len(F), delta, x, C, len(F) - C * delta)


def weighted_diversity(F: SetFamily, C) -> Fraction:
    """|F| - C * Δ(F), exactly."""
    return diversity_report(F, C).value


class DensityMap:
    """A density on the edges of a family with every value in (0, 1]."""

    def __init__(self, family: SetFamily, values):
        vals = {}
        if isinstance(values, dict):
            items = values.items()
        else:
            items = zip(family.masks, values)
        for key, val in items:
            m = key.bits if isinstance(key, VertexSet) else key if isinstance(key, int) else mask_of(key)
            vals[m] = as_rational(val)
        if set(vals) != set(family.masks):
            raise BadParams("density must assign a value to exactly the edges of the family")
        for m, val in vals.items():
            if not 0 < val <= 1:
                raise BadParams(f"density value {val} outside (0, 1]")
        self.family = family
        self.values = vals

    @classmethod
    def ones(cls, family: SetFamily) -> DensityMap:
        return cls(family, {m: Fraction(1) for m in family.masks})


def rho_mass(D: DensityMap) -> Fraction:
    return sum(D.values.values(), Fraction(0))


def rho_degree(D: DensityMap, x: int) -> Fraction:
    bit = 1 << (x - 1)
    return sum((v for m, v in D.values.items() if m & bit), Fraction(0))


def rho_max_degree(D: DensityMap) -> tuple[Fraction, int | None]:
    """Maximum ρ-degree over spanned vertices, lowest index on ties."""
    best, arg = Fraction(0), None
    span = D.family.span
    for x in range(1, D.family.n + 1):
        if span >> (x - 1) & 1:
            d = rho_degree(D, x)
            if arg is None or d > best:
                best, arg = d, x
    return best, arg


def rho_diversity(D: DensityMap, C) -> Fraction:
    return rho_mass(D) - as_rational(C) * rho_max_degree(D)[0]


def kernel_bound_check(F: SetFamily, Fprime: SetFamily, C) -> bool:
    """Check d_C(F) <= |F \\ F'| for a subfamily F' with a vertex of degree >= |F'|/C."""
    C = as_rational(C)
    if not Fprime.issubfamily(F):
        raise PreconditionViolated("F' is not a subfamily of F")
    if len(Fprime) and (C <= 0 or C * max_degree(Fprime)[0] < len(Fprime)):
        raise PreconditionViolated("F' has no vertex of degree at least |F'|/C")
    return weighted_diversity(F, C) <= len(F) - len(Fprime)


def degree_ratio(F: SetFamily) -> Fraction:
    if not len(F):
        raise EmptyFamily("degree ratio undefined for the empty family")
    return Fraction(max_degree(F)[0], len(F))


def distance_to_two_out_of_three(F: SetFamily) -> tuple[VertexSet, int] | None:
    """Cheapest triple T with every edge meeting T twice, and the number of
    edges meeting T in exactly two vertices that are missing from F.

    Scans all C(n,3) triples, O(n^3 |F|).  Ties go to the first triple in
    lexicographic order.
    """
    if F.r < 3:
        raise PreconditionViolated("distance_to_two_out_of_three needs a uniform family with r >= 3")
    full = 3 * binom(F.n - 3, F.r - 2)
    best = None
    for t in combinations(range(1, F.n + 1), 3):
        tm = mask_of(t)
        twos = 0
        for m in F.masks:
            k = (m & tm).bit_count()
            if k < 2:
                break
            twos += k == 2
        else:
            missing = full - twos
            if best is None or missing < best[1]:
                best = (VertexSet(tm, F.n), missing)
    return best
