"""Bitmask vertex sets over a ground set [n] = {1, ..., n}.

Vertex ``v`` lives at bit ``v - 1``.  Hot loops throughout the package work on
the raw ``int`` masks; :class:`VertexSet` is the checked public wrapper.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ..errors import BadParams

MAX_N = 128


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    """Yield 0-based bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, order=True)
class VertexSet:
    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise BadParams(f"ground set size {self.n} outside [0, {MAX_N}]")
        if self.bits < 0 or self.bits >> self.n:
            raise BadParams(f"vertex set {self.bits:#x} not contained in [{self.n}]")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        vs = list(vertices)
        for v in vs:
            if not 1 <= v <= n:
                raise BadParams(f"vertex {v} outside [1, {n}]")
        return cls(mask_of(vs), n)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(vertices_of(self.bits))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 1 <= v <= self.n and bool(self.bits >> (v - 1) & 1)

    def _coerce(self, other: VertexSet) -> int:
        if other.n != self.n:
            raise BadParams("vertex sets over different ground sets")
        return other.bits

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & self._coerce(other), self.n)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | self._coerce(other), self.n)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~self._coerce(other), self.n)

    def isdisjoint(self, other: VertexSet) -> bool:
        return not self.bits & self._coerce(other)

    def issubset(self, other: VertexSet) -> bool:
        return not self.bits & ~self._coerce(other)

    def to_list(self) -> list[int]:
        return vertices_of(self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"
