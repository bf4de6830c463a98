"""Grid checks shared by the CLI verifiers and the acceptance suite.

Each check returns a plain dict report with a boolean ``passed`` and lists of
the offending cases, so failures can be inspected rather than just counted.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import constructions as cons
from .core import SetFamily, binom
from .core.rational import as_rational, fmt_rational
from .diversity import degree_ratio, distance_to_two_out_of_three, diversity, weighted_diversity

# twenty weights spread over [0, 4], including the breakpoints 3/2, 7/3, 13/4
C_GRID = tuple(Fraction(x) for x in (
    "0", "1/3", "1/2", "2/3", "1", "5/4", "4/3", "7/5", "3/2", "8/5",
    "5/3", "7/4", "2", "9/4", "7/3", "12/5", "5/2", "3", "13/4", "4"))

GRID_RS = (3, 4, 5)
GRID_N_MAX = 20


def grid(rs=GRID_RS, n_max=GRID_N_MAX):
    for r in rs:
        for n in range(2 * r + 1, n_max + 1):
            yield n, r


def _closed_form_cases(n, r):
    yield "a_k", lambda: cons.a_k(n, r), lambda C: cons.a_k_dC(n, r, C), range(1, 4)
    yield "a_f", lambda: cons.a_f(n, r), lambda C: cons.a_f_dC(n, r, C), range(1, 8)
    yield "a_f_plus", lambda: cons.a_f_plus(n, r), lambda C: cons.a_f_plus_dC(n, r, C), range(1, 8)
    if r > 3 and n >= 13:
        yield ("design_family", lambda: cons.design_family(n, r, 3),
               lambda C: cons.design_family_dC(n, r, 3, C), range(1, 14))


def check_closed_forms(rs=GRID_RS, n_max=GRID_N_MAX, Cs=C_GRID) -> dict:
    """Compare enumerated d_C with the closed forms, exactly.

    Every closed form charges C times the degree of a special vertex.  Each
    mismatch records whether some vertex outside the special set has a larger
    degree, which is the only way the two can differ.
    """
    Cs = [as_rational(C) for C in Cs]
    cases = mismatches = 0
    bad = []
    for n, r in grid(rs, n_max):
        for kind, make, formula, special in _closed_form_cases(n, r):
            F = make()
            degs = F.degrees
            point = max(degs[v - 1] for v in special)
            outside = max((d for v, d in enumerate(degs, 1) if v not in special), default=0)
            for C in Cs:
                cases += 1
                got, want = weighted_diversity(F, C), formula(C)
                if got != want:
                    mismatches += 1
                    bad.append({"kind": kind, "n": n, "r": r, "C": fmt_rational(C),
                                "enumerated": fmt_rational(got), "formula": fmt_rational(want),
                                "special_degree": point, "outside_degree": outside,
                                "explained": outside > point})
    return {
        "cases": cases,
        "mismatches": mismatches,
        "unexplained": sum(1 for b in bad if not b["explained"]),
        "failures": bad,
        "passed": mismatches == 0,
    }


def check_stability(n=12, r=4, u=3, samples=200, seed=0) -> dict:
    """EKR-degree family size and diversity, then the 3t distance bound on
    random subfamilies of the full two-out-of-three family."""
    E = cons.ekr_degree_family(n, r, u)
    ekr = {
        "size": len(E), "expected_size": cons.ekr_degree_family_size(n, r, u),
        "diversity": diversity(E), "expected_diversity": binom(n - u - 1, r - u),
    }
    ekr_ok = ekr["size"] == ekr["expected_size"] and ekr["diversity"] == ekr["expected_diversity"]
    A = cons.a_k_plus(n, r)
    top = binom(n - 3, r - 2)
    rng = random.Random(seed)
    edges = list(A.masks)
    violations = []
    ts = []
    for i in range(samples):
        k = rng.randrange(len(edges))
        keep = sorted(rng.sample(edges, len(edges) - k))
        F = SetFamily(n, keep, r)
        t = top - diversity(F)
        found = distance_to_two_out_of_three(F)
        dist = None if found is None else found[1]
        ts.append(t)
        if dist is None or dist > 3 * t:
            violations.append({"sample": i, "size": len(F), "t": t, "distance": dist})
    return {
        "ekr_degree_family": {**ekr, "passed": ekr_ok},
        "samples": samples, "seed": seed, "t_min": min(ts), "t_max": max(ts),
        "violations": violations,
        "passed": ekr_ok and not violations,
    }


def _suite(n, r):
    from .search.anneal import warm_starts
    return warm_starts(n, r)


def check_ratio_implication(eps_list=(Fraction(1, 10), Fraction(1, 100)), rs=GRID_RS,
                            n_max=GRID_N_MAX) -> dict:
    """For C = 7/3 - eps and every suite family F with |F| > C(n-3, r-3):

    ``literal``: d_C(F) >= d_C(a_f) must force Δ/|F| >= (3C-6)/C.
    ``bounded``: d_C(F) <= (7-3C) C(n-3, r-3) must force the same ratio.
    """
    literal, bounded = [], []
    checked = 0
    for eps in eps_list:
        eps = as_rational(eps)
        C = Fraction(7, 3) - eps
        floor = (3 * C - 6) / C
        for n, r in grid(rs, n_max):
            ref = weighted_diversity(cons.a_f(n, r), C)
            small = binom(n - 3, r - 3)
            for name, F in _suite(n, r):
                if len(F) <= small:
                    continue
                checked += 1
                dC, ratio = weighted_diversity(F, C), degree_ratio(F)
                row = {"family": name, "n": n, "r": r, "eps": fmt_rational(eps),
                       "d_C": fmt_rational(dC), "ratio": fmt_rational(ratio),
                       "floor": fmt_rational(floor)}
                if dC >= ref and ratio < floor:
                    literal.append(row)
                if dC <= (7 - 3 * C) * small and ratio < floor:
                    bounded.append(row)
    return {
        "checked": checked,
        "literal_violations": literal,
        "bounded_violations": bounded,
        "passed": not literal,
    }
