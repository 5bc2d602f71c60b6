import random
from itertools import product

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from coxshadow.affineweyl import affine_weyl_group
from coxshadow.galleries import Gallery, evaluate
from coxshadow.lsmodel import (
    NotPositivelyFolded,
    character_csv,
    dimension,
    extreme_points,
    gallery_character,
    load_bearing_pairs,
    ls_galleries,
    mv_polytope,
    partial_unfoldings,
    rho_bound,
    vertex_galleries,
)
from coxshadow.orientations import AtInfinity, antidominant
from coxshadow.rootdata import PreconditionError, freudenthal_multiplicities, is_dominant, weyl_orbit
from coxshadow.shadows import vertex_shadow

A1 = affine_weyl_group("A1~")
A2 = affine_weyl_group("A2~")


def dominants(W, max_height):
    for lam in product(range(max_height + 1), repeat=W.rank):
        if is_dominant(W.datum, lam) and W.datum.rho_pair(lam) <= max_height:
            yield lam


def test_a1_load_bearing_examples():
    o = antidominant(A1)
    plain = Gallery(A1.identity, (1,), start_vertex=(0,), end_vertex_requested=True)
    folded = Gallery(A1.identity, (1,), frozenset({1}), (0,), True)
    other = Gallery(A1.gen(0), (1,), start_vertex=(0,), end_vertex_requested=True)
    assert dimension(A1, plain, o) == 0
    assert dimension(A1, folded, o) == 1
    assert [p for p, _ in load_bearing_pairs(A1, folded, o)] == [1]
    assert dimension(A1, other, o) == 2
    assert [p for p, _ in load_bearing_pairs(A1, other, o)] == [0, 1]
    assert evaluate(A1, other).end_vertex == (-1,)
    # empty gallery at the fundamental alcove
    assert dimension(A1, Gallery(A1.identity, (), start_vertex=(0,)), o) == 0


def test_not_positively_folded():
    g = Gallery(A1.identity, (1,), frozenset({1}), (0,), True)
    with pytest.raises(NotPositivelyFolded):
        load_bearing_pairs(A1, g, AtInfinity(0))


def test_a1_ls_galleries():
    gals = ls_galleries(A1, (1,))
    assert sorted((g.end_vertex, g.dimension) for g in gals) == [((-1,), 2), ((0,), 1), ((1,), 0)]
    assert len(ls_galleries(A1, (0,))) == 1
    assert ls_galleries(A1, (0,))[0].gallery.type_word == ()
    with pytest.raises(PreconditionError):
        ls_galleries(A2, (2, -1))


def test_character_examples():
    assert gallery_character(A1, (1,)) == {(-1,): 1, (0,): 1, (1,): 1}
    assert gallery_character(A1, (2,)) == {(k,): 1 for k in range(-2, 3)}
    ch = gallery_character(A2, (1, 1))
    assert sum(ch.values()) == 8 and ch[(0, 0)] == 2
    assert len(ls_galleries(A2, (1, 1))) == 8


@pytest.mark.parametrize("tag,height", [("G2~", 5), ("A3~", 4)])
def test_character_identity_beyond_acceptance(tag, height):
    W = affine_weyl_group(tag)
    for lam in dominants(W, height):
        assert gallery_character(W, lam) == freudenthal_multiplicities(W.datum, lam)


@pytest.mark.parametrize("tag", ["A1~", "A2~", "C2~", "G2~"])
def test_dimension_bound_and_shadow_compatibility(tag):
    W = affine_weyl_group(tag)
    o = antidominant(W)
    for lam in dominants(W, 4):
        gals = vertex_galleries(W, lam)
        for g in gals:
            assert g.dimension <= rho_bound(W, lam, g.end_vertex)
        assert set(gallery_character(W, lam)) == vertex_shadow(W, lam, o)


def test_structural_asserts():
    for g in vertex_galleries(A2, (2, 2)):
        pos = [p for p, _ in g.load_bearing]
        assert pos.count(0) <= A2.datum.n_pos
        assert len(set(p for p in pos if p)) == len([p for p in pos if p])


def test_mv_examples():
    gals = {g.end_vertex: g for g in ls_galleries(A1, (1,))}
    poly = mv_polytope(A1, (1,), gals[(0,)])
    assert poly.endpoints == {(0,), (1,)} and poly.vertices == {(0,), (1,)}
    assert mv_polytope(A1, (1,), gals[(1,)]).vertices == {(1,)}


@pytest.mark.parametrize("tag", ["A2~", "C2~"])
def test_mv_structure(tag):
    W = affine_weyl_group(tag)
    for lam in dominants(W, 4):
        orbit = weyl_orbit(W.datum, lam)
        for dg in ls_galleries(W, lam):
            poly = mv_polytope(W, lam, dg)
            assert dg.end_vertex in poly.endpoints
            assert poly.vertices <= poly.endpoints
            full = partial_unfoldings(W, dg.gallery)[-1]
            assert not full.fold_mask
            assert evaluate(W, full).end.trans in orbit & poly.endpoints


def test_extreme_points_against_qhull():
    rng = random.Random(3)
    for dim in (2, 3):
        for _ in range(25):
            pts = {tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(10)}
            arr = np.array(sorted(pts), dtype=float)
            try:
                hull = ConvexHull(arr)
            except Exception:
                continue  # degenerate (flat) sets have no full-dimensional hull
            want = {tuple(int(c) for c in arr[i]) for i in hull.vertices}
            assert extreme_points(pts) == want


def test_extreme_points_small():
    assert extreme_points([(1,), (3,), (2,)]) == {(1,), (3,)}
    assert extreme_points([(0, 0), (1, 1), (2, 2)]) == {(0, 0), (2, 2)}
    assert extreme_points([(5, 5)]) == {(5, 5)}


def test_character_csv():
    assert character_csv({(0, 0): 2, (1, 1): 1}) == 'weight,multiplicity\n"0 0",2\n"1 1",1\n'
