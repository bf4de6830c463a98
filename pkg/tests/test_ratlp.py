from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flowerkit import constructions as cons
from flowerkit.core import SetFamily, are_isomorphic
from flowerkit.errors import BadParams, DimensionMismatch, ParseError, PreconditionViolated
from flowerkit.ratlp import (
    LinearProgram, baby_lemma_lp, certificate_bound, check_certificate, check_family,
    lp_from_text, lp_to_text, simplex_max, verify_baby_lemma,
)
from flowerkit.search import catalog_tau3_families

F = Fraction


def test_unit_interval():
    out = simplex_max(LinearProgram(1, [1], [], [(0, 1)]))
    assert out.status == "optimal" and out.value == 1 and out.solution == [1]
    assert check_certificate(LinearProgram(1, [1], [], [(0, 1)]), out)


def test_two_variables():
    lp = LinearProgram(2, [1, 1], [([1, 1], "<=", 3), ([1, 0], "<=", 1), ([0, 1], "<=", 1)])
    out = simplex_max(lp)
    assert out.value == 2 and check_certificate(lp, out)


def test_infeasible_and_unbounded():
    assert simplex_max(LinearProgram(1, [1], [([1], ">=", 2)], [(0, 1)])).status == "infeasible"
    assert simplex_max(LinearProgram(2, [1, 0], [([0, 1], "<=", 1)])).status == "unbounded"
    free = LinearProgram(1, [-1], [], [(None, None)])
    assert simplex_max(free).status == "unbounded"


def test_equalities_free_and_shifted_variables():
    # max x - y, x + y = 4, x in [-1, 3], y free, y >= -2 via a row
    lp = LinearProgram(2, [1, -1], [([1, 1], "=", 4), ([0, 1], ">=", -2)], [(-1, 3), (None, None)])
    out = simplex_max(lp)
    assert out.value == 2 and out.solution == [3, 1]
    assert check_certificate(lp, out)


def test_redundant_equalities():
    lp = LinearProgram(2, [1, 2], [([1, 1], "=", 2), ([2, 2], "=", 4)], [(0, None), (0, None)])
    out = simplex_max(lp)
    assert out.value == 4 and check_certificate(lp, out)


def test_degenerate_cycling_example_terminates():
    # a classic instance on which the largest-coefficient rule cycles
    lp = LinearProgram(4, [F(3, 4), -20, F(1, 2), -6], [
        ([F(1, 4), -8, -1, 9], "<=", 0),
        ([F(1, 2), -12, F(-1, 2), 3], "<=", 0),
        ([0, 0, 1, 0], "<=", 1),
    ])
    out = simplex_max(lp)
    assert out.value == F(5, 4) and check_certificate(lp, out)


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        LinearProgram(2, [1])
    with pytest.raises(DimensionMismatch):
        LinearProgram(2, [1, 1], [([1], "<=", 1)])
    with pytest.raises(BadParams):
        LinearProgram(1, [1], [([1], "<", 1)])
    big = LinearProgram(150, [1] * 150, [([1] * 150, "<=", 1)] * 51)
    with pytest.raises(DimensionMismatch):
        simplex_max(big)


def test_wrong_certificates_rejected():
    lp = LinearProgram(2, [1, 1], [([1, 1], "<=", 3), ([1, 0], "<=", 1), ([0, 1], "<=", 1)])
    assert certificate_bound(lp, [0, 1, 1]) == 2
    assert certificate_bound(lp, [1, 0, 0]) == 3
    assert certificate_bound(lp, [-1, 0, 0]) is None
    assert certificate_bound(lp, [0, 0, 0]) is None


def _solve(A, b):
    """Exact Gaussian elimination; None unless the square system is nonsingular."""
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col] / M[col][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def vertex_enumeration(lp):
    """Best basic feasible point of a box-bounded LP, or None if infeasible."""
    planes = [(coeffs, rhs) for coeffs, _, rhs in lp.rows]
    for j, (lo, hi) in enumerate(lp.bounds):
        unit = [F(int(k == j)) for k in range(lp.num_vars)]
        planes += [(unit, lo), (unit, hi)]
    best = None
    for pick in combinations(planes, lp.num_vars):
        x = _solve([p[0] for p in pick], [p[1] for p in pick])
        if x is not None and lp.is_feasible(x):
            v = lp.value(x)
            best = v if best is None else max(best, v)
    return best


small = st.integers(-3, 3).map(F)


@st.composite
def box_lps(draw):
    nv = draw(st.integers(1, 3))
    obj = draw(st.lists(small, min_size=nv, max_size=nv))
    rows = draw(st.lists(st.tuples(st.lists(small, min_size=nv, max_size=nv),
                                   st.sampled_from(["<=", ">=", "="]), st.integers(-4, 6).map(F)),
                         max_size=4))
    bounds = draw(st.lists(st.tuples(st.integers(-2, 0).map(F), st.integers(0, 3).map(F)),
                           min_size=nv, max_size=nv))
    return LinearProgram(nv, obj, [list(r) for r in rows], bounds)


@given(box_lps())
def test_simplex_matches_vertex_enumeration(lp):
    out = simplex_max(lp)
    best = vertex_enumeration(lp)
    if best is None:
        assert out.status == "infeasible"
    else:
        assert out.status == "optimal" and out.value == best
        assert check_certificate(lp, out)


@given(box_lps())
def test_text_roundtrip(lp):
    back = lp_from_text(lp_to_text(lp))
    assert (back.num_vars, back.objective, back.rows, back.bounds) == (
        lp.num_vars, lp.objective, lp.rows, lp.bounds)


def test_text_format_example():
    lp = lp_from_text("vars 2\nmax 1 1\nrow 1 1 <= 3  # cap\nbound 0 - 1\nbound 1 0 1/2\n")
    assert lp.bounds == [(None, 1), (0, F(1, 2))]
    assert simplex_max(lp).value == F(3, 2)


@pytest.mark.parametrize("text, line", [
    ("vars 1\nmax 1\nrow 1 < 2\n", 3),
    ("vars 1\nmax x\n", 2),
    ("vars 1\nmaximize 1\n", 2),
])
def test_text_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        lp_from_text(text)
    assert exc.value.line == line


# the 7-vertex density LP ---------------------------------------------------

def test_fano_lp():
    lp = baby_lemma_lp(cons.fano(), F(3, 2))
    out = simplex_max(lp)
    assert out.value == F(5, 2)
    assert check_certificate(lp, out)
    assert out.solution == [1] * 7 + [3]


def test_preconditions():
    with pytest.raises(PreconditionViolated):
        baby_lemma_lp(cons.star(7, 3), 2)
    with pytest.raises(PreconditionViolated):
        baby_lemma_lp(SetFamily.of(7, [1, 2, 3], [4, 5, 6]), 2)


def test_five_edges_infeasible():
    # no catalogued family has only five edges, so cap the mass row to five variables
    lp = baby_lemma_lp(cons.fano(), 2)
    lp.rows[-1] = ([F(1)] * 5 + [F(0)] * 3, ">=", F(6))
    assert simplex_max(lp).status == "infeasible"


def test_catalog_contents():
    cat = catalog_tau3_families()
    assert len(cat) == 6
    assert sum(are_isomorphic(B, cons.fano()) for B in cat) == 1
    assert sorted(len(B) for B in cat) == [6, 7, 7, 8, 9, 10]
    assert all(len(B) <= 10 and B.span == 0b1111111 for B in cat)


def test_optimum_nonincreasing_in_C():
    Cs = [F(3, 2), F(8, 5), F(7, 4), F(2), F(9, 4), F(7, 3) - F(1, 100)]
    for B in catalog_tau3_families():
        vals = [simplex_max(baby_lemma_lp(B, C)).value for C in Cs]
        assert all(a >= b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("C", [F(3, 2), F(8, 5), F(7, 4), F(2), F(9, 4), F(7, 3) - F(1, 100),
                               F(23, 10), F(11, 6)])
def test_verify_over_catalog(C):
    rep = verify_baby_lemma(C)
    assert rep.passed
    fano_entries = [e for e in rep.entries if e.is_fano]
    assert len(fano_entries) == 1 and fano_entries[0].optimum == 7 - 3 * C


def test_verify_with_workers_matches_serial():
    a = verify_baby_lemma(F(7, 4)).to_json()
    b = verify_baby_lemma(F(7, 4), workers=2).to_json()
    assert a == b


def test_non_fano_ten_edge_family_at_C_2():
    cat = catalog_tau3_families()
    ten = [B for B in cat if len(B) == 10][0]
    e = check_family(ten, 2)
    assert not e.is_fano and e.optimum <= 0 and e.ok and e.certified
