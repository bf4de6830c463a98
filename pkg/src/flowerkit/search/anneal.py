"""Simulated annealing over intersecting r-uniform families.

A state is an intersecting family.  Each step proposes one of three moves:
add a random r-set (dropping the edges it misses), remove a random edge, or
swap an edge for a random r-set (again dropping the edges the newcomer
misses).  Moves are accepted by the Metropolis rule under a geometric
temperature schedule.  The score |F| - C*Δ(F) is tracked exactly; floats are
used only for the acceptance probability.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from ..core import SetFamily, as_rational, binom, is_intersecting, mask_of
from ..core.vertexset import MAX_N
from ..diversity import weighted_diversity
from ..errors import BadParams, FlowerkitError
from .. import constructions as cons
from .result import SearchResult

DEFAULT_STEPS = 20000
DEFAULT_T0 = Fraction(2)
DEFAULT_T1 = Fraction(1, 20)


def warm_starts(n: int, r: int) -> list[tuple[str, SetFamily]]:
    """Every named construction that lives on [n] with edge size r."""
    tries = [("star", lambda: cons.star(n, r)),
             ("hilton_milner", lambda: cons.hilton_milner(n, r)),
             ("a_k", lambda: cons.a_k(n, r)),
             ("a_k_plus", lambda: cons.a_k_plus(n, r)),
             ("a_f", lambda: cons.a_f(n, r)),
             ("a_f_plus", lambda: cons.a_f_plus(n, r))]
    for p in (2, 3, 5, 7):
        tries.append((f"design_family(p={p})", lambda p=p: cons.design_family(n, r, p)))
    for u in range(3, r + 1):
        tries.append((f"ekr_degree_family(u={u})", lambda u=u: cons.ekr_degree_family(n, r, u)))
    out = []
    for name, make in tries:
        try:
            F = make()
        except FlowerkitError:
            continue
        out.append((name, F))
    return out


class _State:
    def __init__(self, n, masks):
        self.n = n
        self.edges: list[int] = []
        self.pos: dict[int, int] = {}
        self.deg = [0] * n
        for m in masks:
            self.add(m)

    def add(self, m):
        self.pos[m] = len(self.edges)
        self.edges.append(m)
        for v in range(self.n):
            if m >> v & 1:
                self.deg[v] += 1

    def remove(self, m):
        i = self.pos.pop(m)
        last = self.edges.pop()
        if last != m:
            self.edges[i] = last
            self.pos[last] = i
        for v in range(self.n):
            if m >> v & 1:
                self.deg[v] -= 1

    def score(self, p, q):
        return len(self.edges) * q - p * max(self.deg, default=0)


def anneal_max_dC(n: int, r: int, C, steps: int = DEFAULT_STEPS, t0=DEFAULT_T0,
                  t1=DEFAULT_T1, seed: int = 0, warm_start: bool = True) -> SearchResult:
    """Best family seen during one annealing run; a certified lower bound only.

    Temperatures are exact rationals; they are turned into floats only for
    the cooling schedule.
    """
    C, t0, t1 = as_rational(C), as_rational(t0), as_rational(t1)
    if C < 0:
        raise BadParams(f"C must be nonnegative, got {C}")
    if not 1 <= r <= n <= MAX_N:
        raise BadParams(f"need 1 <= r <= n <= {MAX_N}, got n={n} r={r}")
    if steps < 0 or not t0 >= t1 > 0:
        raise BadParams("need steps >= 0 and t0 >= t1 > 0")
    if binom(n, r) > 10 ** 6:
        raise BadParams(f"C({n},{r}) candidate edges is too many to sample from")
    rng = random.Random(seed)
    cands = sorted(mask_of(c) for c in combinations(range(1, n + 1), r))
    p, q = C.numerator, C.denominator

    start_name, start = "empty", ()
    best = 0
    if warm_start:
        for name, F in warm_starts(n, r):
            val = len(F) * q - p * max(F.degrees, default=0)
            if val > best:
                best, start_name, start = val, name, F.masks
    best_masks = tuple(start)
    st = _State(n, start)
    cur = st.score(p, q)
    accepted = 0
    cool = float(t1 / t0) ** (1 / max(steps - 1, 1))
    temp = float(t0)
    for _ in range(steps):
        move = rng.randrange(3)
        if move == 1 and not st.edges:
            move = 0
        removed: list[int] = []
        added = None
        if move in (1, 2) and st.edges:
            out = st.edges[rng.randrange(len(st.edges))]
            st.remove(out)
            removed.append(out)
        if move in (0, 2):
            new = cands[rng.randrange(len(cands))]
            if new in st.pos or new in removed:
                new = None
            if new is not None:
                for m in [m for m in st.edges if not m & new]:
                    st.remove(m)
                    removed.append(m)
                st.add(new)
                added = new
        val = st.score(p, q)
        delta = Fraction(val - cur, q)
        if delta >= 0 or rng.random() < math.exp(float(delta) / temp):
            cur = val
            accepted += 1
            if cur > best:
                best, best_masks = cur, tuple(st.edges)
        else:
            if added is not None:
                st.remove(added)
            for m in removed:
                st.add(m)
        temp *= cool
    witness = SetFamily(n, best_masks, r)
    value = Fraction(best, q)
    if not is_intersecting(witness) or weighted_diversity(witness, C) != value:
        raise AssertionError("annealing witness failed re-verification")
    params = {"n": n, "r": r, "C": str(C), "steps": steps, "t0": str(t0), "t1": str(t1),
              "warm_start": warm_start, "start": start_name, "accepted": accepted}
    return SearchResult(value, witness, steps, False, seed, params)
