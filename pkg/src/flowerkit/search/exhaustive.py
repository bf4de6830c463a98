"""Exact maximum of |F| - C*Δ(F) over intersecting r-uniform families on [n].

Candidates are the r-sets in colex order.  Every search node is one
intersecting family S together with the set A of later candidates that meet
every edge of S; its children add one member of A.  Since Δ never drops when
edges are added, |S| + |A| - C*Δ(S) bounds every descendant.

With symmetry reduction on, a family with at least two edges is relabelled so
that two of its edges meeting in the largest pairwise intersection s are
[r] and {r-s+1, ..., 2r-s}; the search then runs once per s over families
containing both, with all pairwise intersections at most s.
"""
from __future__ import annotations

from fractions import Fraction

from ..core import SetFamily, as_rational, binom, mask_of
from ..errors import BadParams, TooLarge
from .cliques import colex_masks
from .result import SearchResult

EXHAUSTIVE_LIMIT = 60


class _Search:
    def __init__(self, n, cands, compat, p, q, prune):
        self.n = n
        self.cands = cands
        self.compat = compat
        self.p, self.q = p, q
        self.prune = prune
        self.best = 0  # scaled by q; the empty family
        self.best_masks: tuple[int, ...] = ()
        self.nodes = 0
        self.verts = [[v for v in range(n) if m >> v & 1] for m in cands]

    def run(self, chosen: list[int], avail: int) -> None:
        deg = [0] * self.n
        for m in chosen:
            for v in range(self.n):
                deg[v] += m >> v & 1
        self._node(list(chosen), avail, deg, max(deg, default=0))

    def _node(self, chosen, avail, deg, delta):
        self.nodes += 1
        p, q = self.p, self.q
        size = len(chosen)
        val = size * q - p * delta
        if val > self.best:
            self.best, self.best_masks = val, tuple(chosen)
        cands, compat, verts = self.cands, self.compat, self.verts
        prune = self.prune
        while avail:
            if prune and (size + avail.bit_count()) * q - p * delta <= self.best:
                return
            low = avail & -avail
            i = low.bit_length() - 1
            avail ^= low
            nd = delta
            for v in verts[i]:
                d = deg[v] + 1
                deg[v] = d
                if d > nd:
                    nd = d
            chosen.append(cands[i])
            self._node(chosen, avail & compat[i], deg, nd)
            chosen.pop()
            for v in verts[i]:
                deg[v] -= 1


def _compat(cands, s=None):
    out = []
    for a in cands:
        row = 0
        for j, b in enumerate(cands):
            k = (a & b).bit_count()
            if k and (s is None or k <= s):
                row |= 1 << j
        out.append(row)
    return out


def exhaustive_max_dC(n: int, r: int, C, limit: int = EXHAUSTIVE_LIMIT,
                      prune: bool = True, symmetry: bool = True) -> SearchResult:
    """Exact optimum, including the empty family (value 0).

    ``prune=False`` visits every intersecting family and ignores
    ``symmetry``; it is the reference the pruned search is tested against.
    """
    C = as_rational(C)
    if C < 0:
        raise BadParams(f"C must be nonnegative, got {C}")
    if not 1 <= r <= n:
        raise BadParams(f"need 1 <= r <= n, got n={n} r={r}")
    if binom(n, r) > limit:
        raise TooLarge(f"C({n},{r}) = {binom(n, r)} candidate edges exceeds the limit {limit}")
    cands = colex_masks(n, r)
    p, q = C.numerator, C.denominator
    params = {"n": n, "r": r, "C": str(C), "prune": prune, "symmetry": symmetry and prune}
    if not (prune and symmetry):
        st = _Search(n, cands, _compat(cands), p, q, prune)
        st.run([], (1 << len(cands)) - 1)
    else:
        st = _Search(n, cands, [], p, q, True)
        # families with at most one edge
        st.run([], 0)
        st.run([cands[0]], 0)
        first = mask_of(range(1, r + 1))
        for s in range(r - 1, 0, -1):
            if 2 * r - s > n:
                break
            second = mask_of(range(r - s + 1, 2 * r - s + 1))
            st.compat = _compat(cands, s)
            avail = 0
            for j, m in enumerate(cands):
                if m not in (first, second) and 0 < (m & first).bit_count() <= s \
                        and 0 < (m & second).bit_count() <= s:
                    avail |= 1 << j
            st.run([first, second], avail)
    witness = SetFamily(n, st.best_masks, r)
    return SearchResult(Fraction(st.best, q), witness, st.nodes, True, None, params)
