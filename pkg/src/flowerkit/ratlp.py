"""Exact rational linear programming at desk scale.

``simplex_max`` runs a two-phase dense-tableau simplex over ``Fraction`` with
Bland's rule, so it always terminates.  Every optimal outcome carries a dual
certificate: row multipliers y whose Lagrangian bound

    b.y + sum_j max(d_j * lower_j, d_j * upper_j),   d = c - A^T y

equals the primal value.  ``check_certificate`` verifies that independently
of the solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import SetFamily, fmt_rational, is_intersecting, tau
from .core.canon import are_isomorphic
from .core.rational import as_rational, parse_rational
from .errors import BadParams, DimensionMismatch, ParseError, PreconditionViolated

LE, GE, EQ = "<=", ">=", "="
MAX_SIZE = 200
ZERO = Fraction(0)


@dataclass
class LinearProgram:
    """Maximize ``objective . x`` subject to rows and per-variable bounds.

    Bounds default to ``(0, None)``; ``None`` means unbounded on that side.
    """

    num_vars: int
    objective: list
    rows: list = field(default_factory=list)
    bounds: list | None = None

    def __post_init__(self):
        self.objective = [as_rational(c) for c in self.objective]
        if len(self.objective) != self.num_vars:
            raise DimensionMismatch(f"objective has {len(self.objective)} entries, expected {self.num_vars}")
        rows = []
        for coeffs, rel, rhs in self.rows:
            if len(coeffs) != self.num_vars:
                raise DimensionMismatch(f"row has {len(coeffs)} coefficients, expected {self.num_vars}")
            if rel not in (LE, GE, EQ):
                raise BadParams(f"unknown relation {rel!r}")
            rows.append(([as_rational(c) for c in coeffs], rel, as_rational(rhs)))
        self.rows = rows
        if self.bounds is None:
            self.bounds = [(ZERO, None)] * self.num_vars
        if len(self.bounds) != self.num_vars:
            raise DimensionMismatch(f"{len(self.bounds)} bounds for {self.num_vars} variables")
        self.bounds = [(None if lo is None else as_rational(lo), None if hi is None else as_rational(hi))
                       for lo, hi in self.bounds]

    def add_row(self, coeffs, rel, rhs) -> None:
        if rel not in (LE, GE, EQ):
            raise BadParams(f"unknown relation {rel!r}")
        if len(coeffs) != self.num_vars:
            raise DimensionMismatch(f"row has {len(coeffs)} coefficients, expected {self.num_vars}")
        self.rows.append(([as_rational(c) for c in coeffs], rel, as_rational(rhs)))

    def is_feasible(self, x) -> bool:
        for (lo, hi), v in zip(self.bounds, x):
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                return False
        for coeffs, rel, rhs in self.rows:
            lhs = sum((a * v for a, v in zip(coeffs, x)), ZERO)
            if (rel == LE and lhs > rhs) or (rel == GE and lhs < rhs) or (rel == EQ and lhs != rhs):
                return False
        return True

    def value(self, x) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), ZERO)


@dataclass
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    solution: list | None = None
    duals: list | None = None
    pivots: int = 0

    def to_json(self) -> dict:
        out = {"status": self.status, "pivots": self.pivots}
        if self.status == "optimal":
            out["value"] = fmt_rational(self.value)
            out["solution"] = [fmt_rational(v) for v in self.solution]
            out["duals"] = [fmt_rational(v) for v in self.duals]
        return out


def _standardize(lp: LinearProgram):
    """Rewrite as max c'.z + const s.t. A z (rel) b, z >= 0.

    Returns (A, rels, b, c, const, back) where ``back`` maps z to x as a list
    of (const, [(z_index, coef)]) per original variable.
    """
    back = []
    cols = 0
    ub_rows = []
    for j, (lo, hi) in enumerate(lp.bounds):
        if lo is not None:
            back.append((lo, [(cols, Fraction(1))]))
            if hi is not None:
                ub_rows.append((cols, hi - lo))
            cols += 1
        elif hi is not None:
            back.append((hi, [(cols, Fraction(-1))]))
            cols += 1
        else:
            back.append((ZERO, [(cols, Fraction(1)), (cols + 1, Fraction(-1))]))
            cols += 2
    A, rels, b = [], [], []
    for coeffs, rel, rhs in lp.rows:
        row = [ZERO] * cols
        shift = ZERO
        for j, a in enumerate(coeffs):
            if a:
                k0, terms = back[j]
                shift += a * k0
                for z, s in terms:
                    row[z] += a * s
        A.append(row)
        rels.append(rel)
        b.append(rhs - shift)
    for z, cap in ub_rows:
        row = [ZERO] * cols
        row[z] = Fraction(1)
        A.append(row)
        rels.append(LE)
        b.append(cap)
    c = [ZERO] * cols
    const = ZERO
    for j, cj in enumerate(lp.objective):
        k0, terms = back[j]
        const += cj * k0
        for z, s in terms:
            c[z] += cj * s
    return A, rels, b, c, const, back


class _Tableau:
    def __init__(self, A, rels, b, c):
        m, nz = len(A), len(c)
        self.sign = []
        rows = []
        for i in range(m):
            if b[i] < 0:
                self.sign.append(-1)
                rel = {LE: GE, GE: LE, EQ: EQ}[rels[i]]
                rows.append(([-a for a in A[i]], rel, -b[i]))
            else:
                self.sign.append(1)
                rows.append((list(A[i]), rels[i], b[i]))
        n_slack = sum(1 for _, rel, _ in rows if rel != EQ)
        n_art = sum(1 for _, rel, _ in rows if rel != LE)
        self.nz = nz
        self.ncols = nz + n_slack + n_art
        self.art_start = nz + n_slack
        self.T = []
        self.basis = []
        s = nz
        a = self.art_start
        for coeffs, rel, rhs in rows:
            row = coeffs + [ZERO] * (n_slack + n_art) + [rhs]
            if rel == LE:
                row[s] = Fraction(1)
                self.basis.append(s)
                s += 1
            else:
                if rel == GE:
                    row[s] = Fraction(-1)
                    s += 1
                row[a] = Fraction(1)
                self.basis.append(a)
                a += 1
            self.T.append(row)
        self.c = list(c) + [ZERO] * (n_slack + n_art)
        self.pivots = 0
        self.dropped: list[int] = []
        # original (sign-normalized) columns, for dual recovery
        self.A0 = [row[:-1] for row in self.T]

    def pivot(self, i, j):
        T = self.T
        pr = T[i]
        pv = pr[j]
        if pv != 1:
            T[i] = pr = [x / pv for x in pr]
        for k, row in enumerate(T):
            if k != i:
                f = row[j]
                if f:
                    T[k] = [x - f * y for x, y in zip(row, pr)]
        self.basis[i] = j
        self.pivots += 1

    def run(self, cost, allowed):
        """Maximize cost over the current basis with Bland's rule."""
        while True:
            m = len(self.T)
            # reduced costs: cost_j - sum_i cost_basis[i] * T[i][j]
            cb = [cost[bv] for bv in self.basis]
            enter = None
            for j in range(self.ncols):
                if not allowed[j] or j in self.basis:
                    continue
                red = cost[j] - sum((cb[i] * self.T[i][j] for i in range(m) if cb[i]), ZERO)
                if red > 0:
                    enter = j
                    break
            if enter is None:
                return "optimal"
            leave = None
            best = None
            for i in range(m):
                a = self.T[i][enter]
                if a > 0:
                    ratio = self.T[i][-1] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return "unbounded"
            self.pivot(leave, enter)


def _solve_transpose(B, rhs):
    """Solve B^T y = rhs by Gauss-Jordan; B is a square list of columns."""
    m = len(rhs)
    # rows of B^T are the columns of B
    M = [list(B[k]) + [rhs[k]] for k in range(m)]
    for col in range(m):
        piv = next(r for r in range(col, m) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for r in range(m):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[k][-1] for k in range(m)]


def simplex_max(lp: LinearProgram) -> LpOutcome:
    if lp.num_vars + len(lp.rows) > MAX_SIZE:
        raise DimensionMismatch(f"LP too large for the exact solver ({lp.num_vars} vars, {len(lp.rows)} rows)")
    A, rels, b, c, const, back = _standardize(lp)
    n_user = len(lp.rows)
    tab = _Tableau(A, rels, b, c)
    allowed = [True] * tab.ncols
    # phase 1: maximize -(sum of artificials)
    if tab.art_start < tab.ncols:
        cost1 = [ZERO] * tab.art_start + [Fraction(-1)] * (tab.ncols - tab.art_start)
        tab.run(cost1, allowed)
        if any(tab.T[i][-1] != 0 for i, bv in enumerate(tab.basis) if bv >= tab.art_start):
            return LpOutcome("infeasible", pivots=tab.pivots)
        # drive zero-level artificials out of the basis; drop redundant rows
        i = 0
        while i < len(tab.T):
            if tab.basis[i] >= tab.art_start:
                j = next((j for j in range(tab.art_start) if tab.T[i][j] != 0), None)
                if j is None:
                    del tab.T[i], tab.basis[i], tab.A0[i], tab.sign[i]
                    tab.dropped.append(i)
                    continue
                tab.pivot(i, j)
            i += 1
        for j in range(tab.art_start, tab.ncols):
            allowed[j] = False
    status = tab.run(tab.c, allowed)
    if status == "unbounded":
        return LpOutcome("unbounded", pivots=tab.pivots)
    z = [ZERO] * tab.nz
    for i, bv in enumerate(tab.basis):
        if bv < tab.nz:
            z[bv] = tab.T[i][-1]
    x = []
    for k0, terms in back:
        x.append(k0 + sum((s * z[k] for k, s in terms), ZERO))
    duals = _recover_duals(tab, n_user, len(A))
    return LpOutcome("optimal", lp.value(x), x, duals, tab.pivots)


def _recover_duals(tab, n_user, n_rows):
    # y' solves B^T y' = c_B on the rows that survived phase 1
    B = [[tab.A0[i][bv] for i in range(len(tab.A0))] for bv in tab.basis]
    y_kept = _solve_transpose(B, [tab.c[bv] for bv in tab.basis]) if B else []
    # replay row deletions to map surviving positions back to original rows
    alive = list(range(n_rows))
    for pos in tab.dropped:
        del alive[pos]
    y = [ZERO] * n_rows
    for k, orig in enumerate(alive):
        y[orig] = y_kept[k] * tab.sign[k]
    return y[:n_user]


def certificate_bound(lp: LinearProgram, y) -> Fraction | None:
    """Upper bound on the LP value implied by row multipliers y, or None if y
    has the wrong signs or leaves a reduced cost pointing at an open bound."""
    for (coeffs, rel, rhs), yi in zip(lp.rows, y):
        if (rel == LE and yi < 0) or (rel == GE and yi > 0):
            return None
    total = sum((yi * rhs for (_, _, rhs), yi in zip(lp.rows, y)), ZERO)
    for j in range(lp.num_vars):
        d = lp.objective[j] - sum((yi * row[0][j] for row, yi in zip(lp.rows, y)), ZERO)
        lo, hi = lp.bounds[j]
        if d > 0:
            if hi is None:
                return None
            total += d * hi
        elif d < 0:
            if lo is None:
                return None
            total += d * lo
    return total


def check_certificate(lp: LinearProgram, out: LpOutcome) -> bool:
    """Primal feasibility, exact value, and a dual bound equal to the value."""
    if out.status != "optimal":
        return False
    if not lp.is_feasible(out.solution) or lp.value(out.solution) != out.value:
        return False
    return certificate_bound(lp, out.duals) == out.value


# Plain-text row format, one statement per line:
#   vars N
#   max c1 ... cN
#   row a1 ... aN <=|>=|= b
#   bound j lo hi        (0-based j; '-' for an open side)

def lp_to_text(lp: LinearProgram) -> str:
    out = [f"vars {lp.num_vars}", "max " + " ".join(str(c) for c in lp.objective)]
    for coeffs, rel, rhs in lp.rows:
        out.append("row " + " ".join(str(a) for a in coeffs) + f" {rel} {str(rhs)}")
    for j, (lo, hi) in enumerate(lp.bounds):
        if (lo, hi) != (ZERO, None):
            out.append(f"bound {j} {'-' if lo is None else str(lo)} {'-' if hi is None else str(hi)}")
    return "\n".join(out) + "\n"


def lp_from_text(text: str) -> LinearProgram:
    nv, obj, rows, bounds = None, None, [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        try:
            head, rest = line[0], line[1:]
            if head == "vars":
                nv = int(rest[0])
            elif head == "max":
                obj = [parse_rational(t) for t in rest]
            elif head == "row":
                rel = rest[-2]
                if rel not in (LE, GE, EQ):
                    raise ParseError(f"bad relation {rel!r}", lineno)
                rows.append(([parse_rational(t) for t in rest[:-2]], rel, parse_rational(rest[-1])))
            elif head == "bound":
                j = int(rest[0])
                bounds[j] = tuple(None if t == "-" else parse_rational(t) for t in rest[1:3])
            else:
                raise ParseError(f"unknown statement {head!r}", lineno)
        except ParseError as exc:
            if exc.line is not None:
                raise
            raise ParseError(str(exc), lineno) from None
        except (IndexError, ValueError) as exc:
            raise ParseError(str(exc), lineno) from None
    if nv is None or obj is None:
        raise ParseError("LP text needs 'vars' and 'max' lines")
    bl = [bounds.get(j, (ZERO, None)) for j in range(nv)]
    return LinearProgram(nv, obj, rows, bl)


# --- the 7-vertex density LP -------------------------------------------------

def baby_lemma_lp(B: SetFamily, C) -> LinearProgram:
    """Variables rho_e (one per edge) and t; maximize sum(rho) - C t subject to
    every vertex rho-degree <= t, 0 <= rho <= 1 and sum(rho) >= 6.

    The strict conditions (mass > 6, value > 6 - 3C) are taken over the closed
    region; the open region is dense in it when |B| >= 7, so the supremum over
    the open region equals this maximum.
    """
    C = as_rational(C)
    if B.r != 3 or not is_intersecting(B) or B.span.bit_count() != 7 or tau(B) != 3:
        raise PreconditionViolated("needs an intersecting 3-uniform family on 7 spanned vertices with tau = 3")
    m = len(B)
    nv = m + 1
    obj = [Fraction(1)] * m + [-C]
    rows = []
    for x in range(B.n):
        if B.span >> x & 1:
            rows.append(([Fraction(int(bool(e >> x & 1))) for e in B.masks] + [Fraction(-1)], LE, ZERO))
    rows.append(([Fraction(1)] * m + [ZERO], GE, Fraction(6)))
    bounds = [(ZERO, Fraction(1))] * m + [(ZERO, None)]
    return LinearProgram(nv, obj, rows, bounds)


@dataclass
class BabyLemmaEntry:
    family: SetFamily
    is_fano: bool
    status: str
    optimum: Fraction | None
    threshold: Fraction
    ok: bool
    certified: bool

    @property
    def margin(self):
        return None if self.optimum is None else self.optimum - self.threshold

    def to_json(self) -> dict:
        return {
            "edges": self.family.to_lists(),
            "is_fano": self.is_fano,
            "status": self.status,
            "optimum": None if self.optimum is None else fmt_rational(self.optimum),
            "margin": None if self.margin is None else fmt_rational(self.margin),
            "ok": self.ok,
            "certified": self.certified,
        }


@dataclass
class BabyLemmaReport:
    C: Fraction
    entries: list

    @property
    def passed(self) -> bool:
        return bool(self.entries) and all(e.ok and e.certified for e in self.entries)

    def to_json(self) -> dict:
        return {
            "C": fmt_rational(self.C),
            "threshold": fmt_rational(6 - 3 * self.C),
            "families": len(self.entries),
            "passed": self.passed,
            "entries": [e.to_json() for e in self.entries],
        }


def check_family(B: SetFamily, C) -> BabyLemmaEntry:
    from .constructions import fano

    C = as_rational(C)
    thr = 6 - 3 * C
    lp = baby_lemma_lp(B, C)
    out = simplex_max(lp)
    is_fano = are_isomorphic(B, fano())
    if out.status == "optimal":
        ok = out.value > thr if is_fano else out.value <= thr
        cert = check_certificate(lp, out)
    else:
        # an infeasible LP has no density with mass >= 6, so the family is harmless
        ok = out.status == "infeasible" and not is_fano
        cert = out.status == "infeasible"
    return BabyLemmaEntry(B, is_fano, out.status, out.value, thr, ok, cert)


def _check_masks(args):
    masks, C = args
    return check_family(SetFamily(7, masks, 3), C)


def verify_baby_lemma(C, families=None, workers: int = 1) -> BabyLemmaReport:
    """Check the 7-vertex lemma over every catalogued family (or ``families``).

    Non-Fano families must have LP optimum <= 6 - 3C; the Fano plane must
    exceed it.  The lemma itself is stated for 3/2 <= C < 7/3.
    """
    from .search.catalog import catalog_tau3_families

    C = as_rational(C)
    fams = list(families) if families is not None else catalog_tau3_families()
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            entries = list(pool.map(_check_masks, [(F.masks, C) for F in fams]))
    else:
        entries = [check_family(F, C) for F in fams]
    return BabyLemmaReport(C, entries)
