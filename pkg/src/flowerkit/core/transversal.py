"""Exact minimum transversals (hitting sets) by branch and bound."""
from __future__ import annotations

from ..errors import EmptyEdge
from .family import SetFamily
from .vertexset import VertexSet, iter_bits


def _disjoint_packing(masks) -> int:
    """Size of a greedy packing of pairwise disjoint edges; a lower bound on tau."""
    used = 0
    count = 0
    for m in sorted(masks, key=int.bit_count):
        if not m & used:
            used |= m
            count += 1
    return count


def _greedy(masks) -> int:
    chosen = 0
    left = list(masks)
    while left:
        counts: dict[int, int] = {}
        for m in left:
            for b in iter_bits(m):
                counts[b] = counts.get(b, 0) + 1
        b = max(sorted(counts), key=counts.__getitem__)
        chosen |= 1 << b
        left = [m for m in left if not m >> b & 1]
    return chosen


def min_transversal(masks, cap: int | None = None) -> int | None:
    """Return a minimum transversal mask of size < ``cap``, or None if none exists.

    With ``cap=None`` a minimum transversal is always returned.
    """
    masks = list(set(masks))
    if 0 in masks:
        raise EmptyEdge("family contains the empty edge; no transversal exists")
    if not masks:
        return 0 if cap is None or cap > 0 else None
    greedy = _greedy(masks)
    best_size = greedy.bit_count()
    best = greedy
    if cap is not None and cap <= best_size:
        best_size, best = cap, None

    def rec(left, chosen, k):
        nonlocal best, best_size
        if not left:
            best, best_size = chosen, k
            return
        if k + _disjoint_packing(left) >= best_size:
            return
        e = min(left, key=int.bit_count)
        # try high-degree vertices of the branching edge first
        order = sorted(iter_bits(e), key=lambda b: -sum(m >> b & 1 for m in left))
        for b in order:
            rec([m for m in left if not m >> b & 1], chosen | 1 << b, k + 1)
            if best_size <= k + 1:
                return

    rec(masks, 0, 0)
    return best


def tau_masks(masks) -> int:
    return min_transversal(masks).bit_count()


def tau_exceeds(masks, alpha: int) -> bool:
    """True iff every transversal has more than ``alpha`` vertices."""
    return min_transversal(masks, cap=alpha + 1) is None


def tau(F: SetFamily) -> int:
    return tau_masks(F.masks)


def tau_witness(F: SetFamily) -> VertexSet:
    return VertexSet(min_transversal(F.masks), F.n)
