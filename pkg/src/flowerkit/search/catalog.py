"""Isomorphism classes of the intersecting triple systems on [7] with tau = 3."""
from __future__ import annotations

from functools import lru_cache

from ..core import SetFamily, canonical_masks
from .cliques import enumerate_maximal_intersecting
from .folklore import tau_is_three

SPAN7 = (1 << 7) - 1


def _maximal_representatives() -> list[tuple[int, ...]]:
    reps = set()
    for F in enumerate_maximal_intersecting(7, 3):
        if tau_is_three(F):
            reps.add(canonical_masks(7, F.masks))
    return sorted(reps)


@lru_cache(maxsize=1)
def _catalog() -> tuple[tuple[int, ...], ...]:
    # Every such family sits inside a maximal one with tau = 3, so the
    # subfamilies of the maximal representatives reach every class.
    found = set()
    for rep in _maximal_representatives():
        k = len(rep)
        for sel in range(1, 1 << k):
            sub = [rep[i] for i in range(k) if sel >> i & 1]
            span = 0
            for m in sub:
                span |= m
            if span != SPAN7:
                continue
            F = SetFamily(7, sub, 3)
            if tau_is_three(F):
                found.add(canonical_masks(7, F.masks))
    return tuple(sorted(found, key=lambda ms: (len(ms), ms)))


def catalog_tau3_families() -> list[SetFamily]:
    """One canonical representative per class, ordered by size then edges."""
    return [SetFamily(7, ms, 3) for ms in _catalog()]
