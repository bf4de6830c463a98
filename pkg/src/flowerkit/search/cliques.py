"""Maximal intersecting families as maximal cliques of the intersection graph."""
from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from ..core import SetFamily, binom, iter_bits, mask_of
from ..errors import BadParams, TooLarge

CLIQUE_LIMIT = 64


def colex_masks(n: int, r: int) -> list[int]:
    """All r-subsets of [n] as bitmasks, in colex (= increasing integer) order."""
    return sorted(mask_of(c) for c in combinations(range(1, n + 1), r))


def intersection_graph(cands: list[int]) -> list[int]:
    """adj[i] has bit j set iff candidates i != j share a vertex."""
    adj = []
    for i, a in enumerate(cands):
        row = 0
        for j, b in enumerate(cands):
            if j != i and a & b:
                row |= 1 << j
        adj.append(row)
    return adj


def _bron_kerbosch(adj, P: int, X: int, R: list[int]):
    if not P:
        if not X:
            yield list(R)
        return
    # pivot: the vertex of P | X with most neighbours in P, lowest index on ties
    best, u = -1, 0
    for v in iter_bits(P | X):
        k = (P & adj[v]).bit_count()
        if k > best:
            best, u = k, v
    for v in iter_bits(P & ~adj[u]):
        R.append(v)
        yield from _bron_kerbosch(adj, P & adj[v], X & adj[v], R)
        R.pop()
        P &= ~(1 << v)
        X |= 1 << v


def enumerate_maximal_intersecting(n: int, r: int, limit: int = CLIQUE_LIMIT) -> Iterator[SetFamily]:
    """Yield every maximal intersecting r-uniform family on [n] exactly once.

    Output order is fixed by the colex candidate order and the pivot rule.
    """
    if not 1 <= r <= n:
        raise BadParams(f"need 1 <= r <= n, got n={n} r={r}")
    if binom(n, r) > limit:
        raise TooLarge(f"C({n},{r}) = {binom(n, r)} candidate edges exceeds the limit {limit}")
    cands = colex_masks(n, r)
    adj = intersection_graph(cands)
    for clique in _bron_kerbosch(adj, (1 << len(cands)) - 1, 0, []):
        yield SetFamily(n, (cands[i] for i in clique), r)
