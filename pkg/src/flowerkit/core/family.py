"""Set families and the primitive operations on them."""
from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from functools import cached_property

from ..errors import BadParams
from .vertexset import MAX_N, VertexSet, full_mask, iter_bits, mask_of


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


class SetFamily:
    """An immutable family of subsets of [n].

    Edges are stored as int bitmasks in strictly increasing order, so two
    families with the same edges compare and serialize identically.
    ``r`` is the common edge size, or 0 when sizes are mixed (or the family
    is empty and no size was given).
    """

    def __init__(self, n: int, masks: Iterable[int] = (), r: int | None = None):
        if not 0 <= n <= MAX_N:
            raise BadParams(f"ground set size {n} outside [0, {MAX_N}]")
        ms = tuple(sorted(set(masks)))
        limit = full_mask(n)
        for m in ms:
            if m < 0 or m & ~limit:
                raise BadParams(f"edge {m:#x} not contained in [{n}]")
        sizes = {m.bit_count() for m in ms}
        if r is None:
            r = sizes.pop() if len(sizes) == 1 else 0
        elif r > 0 and sizes and sizes != {r}:
            raise BadParams(f"family declared {r}-uniform but has edge sizes {sorted(sizes)}")
        self.n = n
        self.r = r
        self.masks = ms

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]], r: int | None = None) -> SetFamily:
        masks = []
        for s in sets:
            s = list(s)
            for v in s:
                if not 1 <= v <= n:
                    raise BadParams(f"vertex {v} outside [1, {n}]")
            masks.append(mask_of(s))
        return cls(n, masks, r)

    @classmethod
    def of(cls, n: int, *sets: Iterable[int], r: int | None = None) -> SetFamily:
        return cls.from_sets(n, sets, r)

    @property
    def edges(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(m, self.n) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.edges)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, VertexSet):
            item = item.bits
        return item in self._mask_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, r={self.r}, edges={self.to_lists()})"

    @cached_property
    def _mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """``degrees[v - 1]`` is the number of edges containing vertex v."""
        deg = [0] * self.n
        for m in self.masks:
            for b in iter_bits(m):
                deg[b] += 1
        return tuple(deg)

    @cached_property
    def span(self) -> int:
        s = 0
        for m in self.masks:
            s |= m
        return s

    def to_lists(self) -> list[list[int]]:
        return [VertexSet(m, self.n).to_list() for m in self.masks]

    def with_masks(self, masks: Iterable[int]) -> SetFamily:
        return SetFamily(self.n, masks, self.r if self.r else None)

    def issubfamily(self, other: SetFamily) -> bool:
        return self._mask_set <= other._mask_set

    def minus(self, other: SetFamily) -> SetFamily:
        drop = other._mask_set
        return self.with_masks(m for m in self.masks if m not in drop)

    def union(self, other: SetFamily) -> SetFamily:
        if other.n != self.n:
            raise BadParams("families over different ground sets")
        return SetFamily(self.n, self.masks + other.masks)


def _as_mask(S: VertexSet | int | Iterable[int], n: int) -> int:
    if isinstance(S, VertexSet):
        return S.bits
    if isinstance(S, int):
        return S
    return VertexSet.of(n, S).bits


def masks_intersecting(masks: tuple[int, ...] | list[int]) -> bool:
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if not a & b:
                return False
    return True


def is_intersecting(F: SetFamily) -> bool:
    """Every two distinct edges share a vertex; vacuous below two edges."""
    return masks_intersecting(F.masks)


def link(F: SetFamily, S) -> SetFamily:
    s = _as_mask(S, F.n)
    r = F.r - s.bit_count() if F.r else None
    if r is not None and r <= 0:
        r = None
    return SetFamily(F.n, (m & ~s for m in F.masks if m & s == s), r)


def unlink(F: SetFamily, S) -> SetFamily:
    s = _as_mask(S, F.n)
    return SetFamily(F.n, (m for m in F.masks if not m & s), F.r or None)


def degree(F: SetFamily, x: int) -> int:
    if not 1 <= x <= F.n:
        raise BadParams(f"vertex {x} outside [1, {F.n}]")
    return F.degrees[x - 1]


def max_degree(F: SetFamily) -> tuple[int, int]:
    """Return ``(Δ, x)`` with x the lowest-index vertex of maximum degree."""
    if F.n == 0:
        return 0, 0
    deg = F.degrees
    best = max(deg)
    return best, deg.index(best) + 1


def is_transversal(T, F: SetFamily) -> bool:
    t = _as_mask(T, F.n)
    return all(m & t for m in F.masks)


def masks_sperner(masks) -> bool:
    for a in masks:
        for b in masks:
            if a != b and a & b == a:
                return False
    return True


def is_sperner(F: SetFamily) -> bool:
    return masks_sperner(F.masks)


def cross_intersecting(A: SetFamily, B: SetFamily) -> bool:
    if A.n != B.n:
        raise BadParams("families over different ground sets")
    return all(a & b for a in A.masks for b in B.masks)
