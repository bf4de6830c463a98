"""Canonical forms of small set families.

Colour refinement on vertices (a vertex is coloured by the multiset of
colour-multisets of its edges) followed by individualization of the first
non-singleton cell.  Every discrete leaf gives a relabelling; the canonical
form is the lexicographically smallest relabelled edge list.  Automorphisms
found at leaves prune the tree: a leaf equal to the first leaf abandons the
subtree back to where the path left the first path, and children on the first
path that are in the orbit of an explored child are skipped.
"""
from __future__ import annotations

from ..errors import GroundSetTooLarge
from .family import SetFamily
from .vertexset import iter_bits

CANON_MAX_N = 16


def _refine(n, edge_verts, incidence, colors):
    ncolors = len(set(colors))
    while True:
        esig = [tuple(sorted(colors[v] for v in ev)) for ev in edge_verts]
        vsig = [(colors[v], tuple(sorted(esig[i] for i in incidence[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(vsig)))}
        new = [rank[s] for s in vsig]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _individualize(colors, v):
    c = colors[v]
    return [2 * x + (1 if x == c and u != v else 0) for u, x in enumerate(colors)]


def _orbits(n, gens):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(a) for a in range(n)]


class _Canonizer:
    def __init__(self, n, masks):
        self.n = n
        self.masks = masks
        self.edge_verts = [list(iter_bits(m)) for m in masks]
        self.incidence = [[] for _ in range(n)]
        for i, ev in enumerate(self.edge_verts):
            for v in ev:
                self.incidence[v].append(i)
        self.first_cert = None
        self.first_labels = None
        self.best = None
        self.autos: list[list[int]] = []
        self.first_path: list[int] = []

    def cert(self, labels):
        out = []
        for ev in self.edge_verts:
            m = 0
            for v in ev:
                m |= 1 << labels[v]
            out.append(m)
        out.sort()
        return tuple(out)

    def visit(self, colors, depth, on_first, diverge):
        colors = _refine(self.n, self.edge_verts, self.incidence, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cert = self.cert(colors)
            if self.first_cert is None:
                self.first_cert, self.first_labels, self.best = cert, colors, cert
                return None
            if cert == self.first_cert:
                inv = [0] * self.n
                for v, lab in enumerate(colors):
                    inv[lab] = v
                self.autos.append([inv[self.first_labels[v]] for v in range(self.n)])
                return diverge
            if cert < self.best:
                self.best = cert
            return None

        explored: list[int] = []
        for idx, v in enumerate(target):
            child_first = on_first and idx == 0
            if on_first and idx > 0:
                prefix = self.first_path[:depth]
                fixing = [g for g in self.autos if all(g[p] == p for p in prefix)]
                if fixing:
                    orb = _orbits(self.n, fixing)
                    if any(orb[v] == orb[u] for u in explored):
                        continue
            if child_first:
                self.first_path.append(v)
            res = self.visit(_individualize(colors, v), depth + 1, child_first,
                             diverge if not on_first or child_first else depth)
            explored.append(v)
            if res is not None and res != depth:
                return res
        return None


def canonical_masks(n: int, masks) -> tuple[int, ...]:
    if n > CANON_MAX_N:
        raise GroundSetTooLarge(f"canonical forms limited to n <= {CANON_MAX_N}, got {n}")
    c = _Canonizer(n, list(masks))
    c.visit([0] * n, 0, True, 0)
    return c.best if c.best is not None else ()


def canonical_form(F: SetFamily) -> bytes:
    """Byte string invariant under vertex relabelling; equal iff isomorphic."""
    cert = canonical_masks(F.n, F.masks)
    out = bytearray([F.n, len(cert) >> 8 & 0xFF, len(cert) & 0xFF])
    for m in cert:
        out += m.to_bytes(2, "big")
    return bytes(out)


def family_from_form(form: bytes) -> SetFamily:
    """Inverse of canonical_form: the canonical representative itself."""
    n, k = form[0], int.from_bytes(form[1:3], "big")
    if len(form) != 3 + 2 * k:
        raise ValueError("truncated canonical form")
    return SetFamily(n, (int.from_bytes(form[3 + 2 * i:5 + 2 * i], "big") for i in range(k)))


def are_isomorphic(F: SetFamily, G: SetFamily) -> bool:
    if F.n != G.n or len(F) != len(G) or sorted(F.degrees) != sorted(G.degrees):
        return False
    return canonical_form(F) == canonical_form(G)
