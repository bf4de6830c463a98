"""Flowers, flower bases and the counting bounds built on them.

A flower with threshold alpha and core Y is a subfamily S whose common
intersection is exactly Y and whose petals {E \\ Y : E in S} cannot be hit by
alpha vertices.  Petals are required to be nonempty, so an edge is never the
core of a flower made of itself.

Core detection does not search over subfamilies.  Let G = {E in F : Y ⊊ E}.
Y is a core iff ∩G = Y and tau(G(Y)) > alpha: any witness S lies inside G,
which forces ∩G ⊆ ∩S = Y ⊆ ∩G and tau(G(Y)) >= tau(S(Y)); conversely G is
itself a witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import SetFamily, VertexSet, binom, iter_bits, masks_intersecting, masks_sperner
from .core.transversal import min_transversal, tau_exceeds, tau_masks
from .errors import BadParams, ThresholdTooSmall


@dataclass(frozen=True)
class Flower:
    core: VertexSet
    members: SetFamily
    threshold: int

    def petals(self) -> list[int]:
        return [m & ~self.core.bits for m in self.members.masks]

    def is_valid(self) -> bool:
        if not self.members.masks:
            return False
        common = -1
        for m in self.members.masks:
            common &= m
        petals = self.petals()
        return (common == self.core.bits and all(petals)
                and tau_exceeds(petals, self.threshold))


@dataclass(frozen=True)
class BaseMember:
    set: VertexSet
    origin: str  # "edge" or "core"


@dataclass(frozen=True)
class FlowerBase:
    threshold: int
    members: tuple[BaseMember, ...]
    n: int = 0

    def as_family(self) -> SetFamily:
        return SetFamily(self.n, (b.set.bits for b in self.members))

    def masks(self) -> list[int]:
        return [b.set.bits for b in self.members]

    def layer(self, i: int) -> list[BaseMember]:
        return [b for b in self.members if len(b.set) == i]

    def to_json(self) -> dict:
        return {
            "alpha": self.threshold,
            "members": [{"set": b.set.to_list(), "origin": b.origin} for b in self.members],
        }


def _core_test(masks, y: int, alpha: int) -> bool:
    common = -1
    petals = []
    for m in masks:
        if m & y == y and m != y:
            common &= m
            petals.append(m & ~y)
    if not petals or common != y:
        return False
    return tau_exceeds(petals, alpha)


def is_flower_core(F: SetFamily, Y, alpha: int) -> bool:
    y = Y.bits if isinstance(Y, VertexSet) else VertexSet.of(F.n, Y).bits
    if not y:
        raise BadParams("flower cores in a base are nonempty")
    return _core_test(F.masks, y, alpha)


def _proper_subsets(m: int):
    # nonempty proper subsets of m
    sub = (m - 1) & m
    while sub:
        yield sub
        sub = (sub - 1) & m


def _candidate_cores(masks) -> list[int]:
    seen = set()
    for m in masks:
        seen.update(_proper_subsets(m))
    return sorted(seen)


def _flower_from(F: SetFamily, y: int, alpha: int) -> Flower:
    members = [m for m in F.masks if m & y == y and m != y]
    return Flower(VertexSet(y, F.n), SetFamily(F.n, members), alpha)


def _constructive(masks: list[int], alpha: int):
    """Follow the pigeonhole recursion; returns (core mask, member masks) or None."""
    if not masks or 0 in masks:
        return None
    t = min_transversal(masks)
    if t.bit_count() > alpha:
        common = -1
        for m in masks:
            common &= m
        return common, masks
    # vertex of the minimum transversal with the most edges
    x = max(iter_bits(t), key=lambda b: (sum(m >> b & 1 for m in masks), -b))
    bit = 1 << x
    sub = _constructive([m & ~bit for m in masks if m & bit], alpha)
    if sub is None:
        return None
    core, members = sub
    return core | bit, [m | bit for m in members]


def find_flower(F: SetFamily, alpha: int) -> Flower | None:
    """Return a flower of threshold alpha, or None if F has none.

    When |F| > alpha^r the pigeonhole recursion always yields one; below that
    size every candidate core (the empty set and every proper subset of an
    edge) is tested directly.
    """
    if alpha < 1:
        raise BadParams("flower threshold must be at least 1")
    if F.r < 1:
        raise BadParams("find_flower needs a uniform family")
    hit = _constructive(list(F.masks), alpha)
    if hit is not None:
        core, members = hit
        fl = Flower(VertexSet(core, F.n), SetFamily(F.n, members), alpha)
        if fl.is_valid():
            return fl
    for y in [0, *_candidate_cores(F.masks)]:
        if _core_test(F.masks, y, alpha):
            return _flower_from(F, y, alpha)
    return None


def flower_cores(F: SetFamily, alpha: int) -> list[int]:
    """Masks of all nonempty flower cores of threshold alpha."""
    return [y for y in _candidate_cores(F.masks) if _core_test(F.masks, y, alpha)]


def _minimal(masks) -> list[int]:
    ms = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out: list[int] = []
    for m in ms:
        if not any(b & m == b for b in out):
            out.append(m)
    return out


def flower_base(F: SetFamily, alpha: int) -> FlowerBase:
    """Inclusion-minimal sets among the edges and the nonempty flower cores.

    Members are ordered by size, then bitmask.
    """
    if F.masks and alpha < tau_masks(F.masks):
        raise ThresholdTooSmall(f"alpha = {alpha} is below tau(F)")
    cores = set(flower_cores(F, alpha))
    members = tuple(BaseMember(VertexSet(m, F.n), "core" if m in cores else "edge")
                    for m in _minimal(cores | set(F.masks)))
    return FlowerBase(alpha, members, F.n)


def base_cardinality_bounds(F: SetFamily, base: FlowerBase, k: int) -> tuple[int, int]:
    """Right-hand sides of the two base counting bounds on |F|.

    ``bound3`` sums C(n-|B|, r-|B|) over base members; ``bound5`` counts the
    layers below k exactly and charges r^(r+1) * C(n-k, r-k) for the rest.
    """
    n, r = F.n, F.r
    if r < 1:
        raise BadParams("counting bounds need a uniform family")
    if not 1 <= k <= r:
        raise BadParams(f"k must lie in [1, r], got {k}")
    bound3 = sum(binom(n - len(b.set), r - len(b.set)) for b in base.members)
    r0 = r ** (r + 1)
    bound5 = sum(len(base.layer(i)) * binom(n - i, r - i) for i in range(1, k)) + r0 * binom(n - k, r - k)
    return bound3, bound5


@dataclass
class InheritanceReport:
    sperner: bool
    intersecting_transversal: bool
    tau_preserved: bool
    size_bound: bool
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.sperner and self.intersecting_transversal and self.tau_preserved and self.size_bound

    def to_json(self) -> dict:
        return {
            "sperner": self.sperner,
            "intersecting_transversal": self.intersecting_transversal,
            "tau_preserved": self.tau_preserved,
            "size_bound": self.size_bound,
            "passed": self.passed,
            **self.details,
        }


def inheritance_check(F: SetFamily, base: FlowerBase) -> InheritanceReport:
    """Check the four inherited properties of a base.

    They are guaranteed only for intersecting F and a base built with
    threshold at least r; outside that range the report simply records which
    clauses fail.
    """
    bm = base.masks()
    r, alpha = F.r, base.threshold
    tau_f = tau_masks(F.masks)
    tau_b = tau_masks(bm)
    bound = r * alpha ** r
    return InheritanceReport(
        sperner=masks_sperner(bm),
        intersecting_transversal=masks_intersecting(bm) and all(
            all(b & m for m in F.masks) for b in bm),
        tau_preserved=tau_b == tau_f,
        size_bound=len(bm) <= bound,
        details={"tau_family": tau_f, "tau_base": tau_b, "base_size": len(bm), "size_limit": bound},
    )
