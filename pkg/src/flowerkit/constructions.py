"""Generators for the named intersecting families.

Special vertices always take the lowest labels (the Fano plane on [7], the
triangle on [3], the projective plane on [p^2+p+1]) so generated families are
reproducible byte for byte.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .core import SetFamily, binom, mask_of
from .core.vertexset import MAX_N
from .errors import BadParams, NotPrime

FANO_LINES = ((1, 2, 4), (1, 3, 7), (1, 5, 6), (2, 3, 5), (2, 6, 7), (3, 4, 6), (4, 5, 7))


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise BadParams(f"n = {n} outside [1, {MAX_N}]")


def _lift(n: int, r: int, core: int, blocks) -> SetFamily:
    """All r-sets E of [n] with E ∩ [core] equal to one of ``blocks``."""
    outside = range(core + 1, n + 1)
    masks = []
    for b in blocks:
        bm = mask_of(b)
        k = r - len(b)
        if k < 0:
            continue
        for rest in combinations(outside, k):
            masks.append(bm | mask_of(rest))
    return SetFamily(n, masks, r)


def star(n: int, r: int, x: int = 1) -> SetFamily:
    _check_n(n)
    if not 1 <= r <= n or not 1 <= x <= n:
        raise BadParams(f"star needs 1 <= r <= n and 1 <= x <= n, got n={n} r={r} x={x}")
    others = [v for v in range(1, n + 1) if v != x]
    xm = 1 << (x - 1)
    return SetFamily(n, (xm | mask_of(c) for c in combinations(others, r - 1)), r)


def hilton_milner(n: int, r: int) -> SetFamily:
    """Edge Y = [2, r+1] plus every r-set through vertex 1 that meets Y."""
    _check_n(n)
    if r < 2 or n < 2 * r:
        raise BadParams(f"hilton_milner needs r >= 2 and n >= 2r, got n={n} r={r}")
    y = mask_of(range(2, r + 2))
    masks = [y]
    for c in combinations(range(2, n + 1), r - 1):
        m = 1 | mask_of(c)
        if m & y:
            masks.append(m)
    return SetFamily(n, masks, r)


def a_k(n: int, r: int) -> SetFamily:
    """Edges meeting [3] in exactly two vertices."""
    _check_n(n)
    if r < 2 or n < max(r, 3):
        raise BadParams(f"a_k needs r >= 2 and n >= max(r, 3), got n={n} r={r}")
    return _lift(n, r, 3, combinations((1, 2, 3), 2))


def a_k_plus(n: int, r: int) -> SetFamily:
    """Edges meeting [3] in at least two vertices (equals a_k when r = 2)."""
    _check_n(n)
    if r < 2 or n < max(r, 3):
        raise BadParams(f"a_k_plus needs r >= 2 and n >= max(r, 3), got n={n} r={r}")
    return _lift(n, r, 3, [*combinations((1, 2, 3), 2), (1, 2, 3)])


def fano() -> SetFamily:
    return SetFamily.from_sets(7, FANO_LINES, 3)


def fano_plus_four_blocks() -> list[tuple[int, ...]]:
    """The 28 four-subsets of [7] that meet every Fano line."""
    lines = {mask_of(l) for l in FANO_LINES}
    full = mask_of(range(1, 8))
    return [c for c in combinations(range(1, 8), 4) if full & ~mask_of(c) not in lines]


def fano_plus_blocks() -> SetFamily:
    return SetFamily.from_sets(7, [*FANO_LINES, *fano_plus_four_blocks()])


def a_f(n: int, r: int) -> SetFamily:
    """Edges whose trace on [7] is a Fano line."""
    _check_n(n)
    if r < 3 or n < max(r, 7):
        raise BadParams(f"a_f needs r >= 3 and n >= max(r, 7), got n={n} r={r}")
    return _lift(n, r, 7, FANO_LINES)


def a_f_plus(n: int, r: int) -> SetFamily:
    """Edges whose trace on [7] is a Fano line or a 4-set meeting every line."""
    _check_n(n)
    if r < 3 or n < max(r, 7):
        raise BadParams(f"a_f_plus needs r >= 3 and n >= max(r, 7), got n={n} r={r}")
    return _lift(n, r, 7, [*FANO_LINES, *fano_plus_four_blocks()])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _normalized_vectors(p: int) -> list[tuple[int, int, int]]:
    # one representative per 1-dimensional subspace: first nonzero coordinate is 1
    out = []
    for v in product(range(p), repeat=3):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            out.append(v)
    return out


def projective_plane(p: int) -> SetFamily:
    """PG(2, p) for prime p: points and lines are 1- and 2-dim subspaces of GF(p)^3."""
    if not is_prime(p):
        raise NotPrime(f"projective_plane supports prime orders only, got {p}")
    pts = _normalized_vectors(p)
    v = len(pts)
    if v > MAX_N:
        raise BadParams(f"PG(2,{p}) has {v} points, above the {MAX_N}-vertex cap")
    lines = []
    for a in pts:
        lines.append(mask_of(i + 1 for i, x in enumerate(pts)
                             if (a[0] * x[0] + a[1] * x[1] + a[2] * x[2]) % p == 0))
    return SetFamily(v, lines, p + 1)


def design_family(n: int, r: int, p: int) -> SetFamily:
    """Edges whose trace on [p^2+p+1] is a line of PG(2, p)."""
    _check_n(n)
    if not is_prime(p):
        raise NotPrime(f"design_family supports prime orders only, got {p}")
    v = p * p + p + 1
    if not p < r <= n or n < v:
        raise BadParams(f"design_family needs p < r <= n and n >= {v}, got n={n} r={r} p={p}")
    plane = projective_plane(p)
    return _lift(n, r, v, plane.to_lists())


def flower_sharpness(alpha: int, r: int) -> SetFamily:
    """Minimal transversals of r disjoint alpha-blocks: one vertex from each block."""
    if alpha < 1 or r < 1 or alpha * r > MAX_N:
        raise BadParams(f"flower_sharpness needs alpha, r >= 1 and alpha*r <= {MAX_N}")
    blocks = [range(j * alpha + 1, (j + 1) * alpha + 1) for j in range(r)]
    return SetFamily(alpha * r, (mask_of(c) for c in product(*blocks)), r)


def ekr_degree_family(n: int, r: int, u: int) -> SetFamily:
    """Edges through 1 meeting Y = [2, u+1], plus every edge containing Y."""
    _check_n(n)
    if not 3 <= u <= r or n < r + u + 1:
        raise BadParams(f"ekr_degree_family needs 3 <= u <= r and n >= r+u+1, got n={n} r={r} u={u}")
    y = mask_of(range(2, u + 2))
    masks = []
    for c in combinations(range(1, n + 1), r):
        m = mask_of(c)
        if (m & 1 and m & y) or m & y == y:
            masks.append(m)
    return SetFamily(n, masks, r)


# Closed forms for sizes of the generated families, kept separate from the
# generators so tests can compare the two routes.

def hilton_milner_size(n: int, r: int) -> int:
    return binom(n - 1, r - 1) - binom(n - r - 1, r - 1) + 1


def ekr_degree_family_size(n: int, r: int, u: int) -> int:
    return binom(n - 1, r - 1) - binom(n - u - 1, r - 1) + binom(n - u - 1, r - u)


def a_k_dC(n, r, C):
    return (3 - 2 * C) * binom(n - 3, r - 2)


def a_f_dC(n, r, C):
    return (7 - 3 * C) * binom(n - 7, r - 3)


def a_f_plus_dC(n, r, C):
    return (7 - 3 * C) * binom(n - 7, r - 3) + (28 - 16 * C) * binom(n - 7, r - 4)


def design_family_dC(n, r, p, C):
    v = p * p + p + 1
    return (v - C * (p + 1)) * binom(n - v, r - p - 1)


KINDS = {
    "star": (star, ("n", "r", "x")),
    "hilton_milner": (hilton_milner, ("n", "r")),
    "a_k": (a_k, ("n", "r")),
    "a_k_plus": (a_k_plus, ("n", "r")),
    "fano": (fano, ()),
    "fano_plus_blocks": (fano_plus_blocks, ()),
    "a_f": (a_f, ("n", "r")),
    "a_f_plus": (a_f_plus, ("n", "r")),
    "projective_plane": (projective_plane, ("p",)),
    "design_family": (design_family, ("n", "r", "p")),
    "flower_sharpness": (flower_sharpness, ("alpha", "r")),
    "ekr_degree_family": (ekr_degree_family, ("n", "r", "u")),
}


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict = field(default_factory=dict)

    def build(self) -> SetFamily:
        if self.kind not in KINDS:
            raise BadParams(f"unknown construction {self.kind!r}; choose from {sorted(KINDS)}")
        fn, names = KINDS[self.kind]
        required = [k for k in names if k != "x"]
        missing = [k for k in required if self.params.get(k) is None]
        if missing:
            raise BadParams(f"{self.kind} needs parameters {missing}")
        extra = [k for k, v in self.params.items() if v is not None and k not in names]
        if extra:
            raise BadParams(f"{self.kind} does not take parameters {extra}")
        kwargs = {k: self.params[k] for k in names if self.params.get(k) is not None}
        return fn(**kwargs)


def construct(kind: str, **params) -> SetFamily:
    return ConstructionSpec(kind, params).build()
