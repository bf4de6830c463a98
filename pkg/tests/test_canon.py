import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flowerkit.constructions import fano, projective_plane, star
from flowerkit.core import (
    SetFamily, are_isomorphic, canonical_form, canonical_masks, family_from_form,
)
from flowerkit.errors import GroundSetTooLarge

from oracles import brute_isomorphic, families, relabel


@given(families(max_n=9, uniform=False, max_edges=14), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(F, rnd):
    form = canonical_form(F)
    for _ in range(100):
        perm = list(range(1, F.n + 1))
        rnd.shuffle(perm)
        assert canonical_form(relabel(F, perm)) == form


@given(families(max_n=5, max_edges=6), families(max_n=5, max_edges=6))
def test_isomorphism_matches_brute_force(F, G):
    assert are_isomorphic(F, G) == brute_isomorphic(F, G)


@given(families(max_n=9, uniform=False, max_edges=12))
def test_form_decodes_to_an_isomorphic_copy(F):
    G = family_from_form(canonical_form(F))
    assert G.n == F.n and len(G) == len(F)
    assert canonical_form(G) == canonical_form(F)
    assert G.masks == canonical_masks(F.n, F.masks)


def test_known_isomorphisms():
    assert are_isomorphic(projective_plane(2), fano())
    assert not are_isomorphic(fano(), star(7, 3).with_masks(star(7, 3).masks[:7]))
    # same size and degree sequence, different structure: a 6-cycle and two triangles
    c6 = SetFamily.of(6, [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6])
    tt = SetFamily.of(6, [1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6])
    assert sorted(c6.degrees) == sorted(tt.degrees)
    assert not are_isomorphic(c6, tt)


def test_highly_symmetric_families_are_fast_enough():
    F = projective_plane(3)
    perm = list(range(1, 14))
    random.Random(5).shuffle(perm)
    assert canonical_form(relabel(F, perm)) == canonical_form(F)
    assert canonical_form(star(16, 2)) == canonical_form(star(16, 2, x=9))


def test_ground_set_limit():
    with pytest.raises(GroundSetTooLarge):
        canonical_form(SetFamily(17, [1]))


def test_different_ground_sets_never_isomorphic():
    assert not are_isomorphic(SetFamily.of(4, [1, 2]), SetFamily.of(5, [1, 2]))
