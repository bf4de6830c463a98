"""Labeled (v, k, lambda)-designs by backtracking on pair coverage."""
from __future__ import annotations

from itertools import combinations

from ..core import SetFamily, mask_of
from ..errors import BadParams, TooLarge

DESIGN_MAX_V = 9
DESIGN_MAX_K = 4


def enumerate_designs(v: int, k: int, lam: int) -> list[SetFamily]:
    """Every simple (v, k, lam)-design on [v], in lexicographic order of edge lists.

    Blocks are never repeated.  The search always serves the first pair whose
    coverage is short, and the blocks serving one pair are added in increasing
    order, so each design is produced exactly once.
    """
    if v > DESIGN_MAX_V or k > DESIGN_MAX_K:
        raise TooLarge(f"designs are enumerated for v <= {DESIGN_MAX_V}, k <= {DESIGN_MAX_K}")
    if not 2 <= k <= v or lam < 1:
        raise BadParams(f"need 2 <= k <= v and lambda >= 1, got v={v} k={k} lambda={lam}")
    pairs = list(combinations(range(v), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    blocks = [mask_of(c) for c in combinations(range(1, v + 1), k)]
    block_pairs = [[pair_index[p] for p in combinations([i for i in range(v) if b >> i & 1], 2)]
                   for b in blocks]
    by_pair = [[j for j, bp in enumerate(block_pairs) if i in bp] for i in range(len(pairs))]
    cover = [0] * len(pairs)
    chosen: list[int] = []
    out: list[SetFamily] = []

    def rec(last_pair: int, last_block: int) -> None:
        target = next((i for i, c in enumerate(cover) if c < lam), None)
        if target is None:
            out.append(SetFamily(v, (blocks[j] for j in chosen), k))
            return
        floor = last_block if target == last_pair else -1
        for j in by_pair[target]:
            if j <= floor or j in chosen:
                continue
            if any(cover[p] >= lam for p in block_pairs[j]):
                continue
            for p in block_pairs[j]:
                cover[p] += 1
            chosen.append(j)
            rec(target, j)
            chosen.pop()
            for p in block_pairs[j]:
                cover[p] -= 1

    rec(-1, -1)
    out.sort(key=lambda F: F.masks)
    return out
