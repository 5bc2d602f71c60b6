from itertools import product

import pytest
from hypothesis import given, strategies as st

from coxshadow.affineweyl import InputError, affine_weyl_group
from coxshadow.galleries import (
    Gallery,
    act,
    alcove_track,
    evaluate,
    fold_at,
    from_json,
    minimal_gallery,
    minimal_vertex_gallery,
    panel_walls,
    to_json,
    unfold_at,
    vertex_starts,
)
from coxshadow.orientations import antidominant, is_positively_folded
from coxshadow.rootdata import PreconditionError

A1 = affine_weyl_group("A1~")
A2 = affine_weyl_group("A2~")


def interval(W, a):
    """The alcove a as an interval of <alpha, .> values (rank 1 only)."""
    p = W.datum.cartan[0][0] * W.sample_point(a)[0]
    lo = p.numerator // p.denominator
    return (lo, lo + 1)


def test_minimal_gallery_examples():
    x = A1.translation((1,))
    g = minimal_gallery(A1, A1.identity, x)
    assert g.type_word == (1, 0)
    assert [interval(A1, a) for a in alcove_track(A1, g)] == [(0, 1), (1, 2), (2, 3)]
    assert minimal_gallery(A1, x, x).type_word == ()
    assert minimal_gallery(A2, A2.identity, A2.from_word([1, 2])).type_word == (1, 2)


def test_evaluate_examples():
    g = Gallery(A1.identity, (1, 0), end_vertex_requested=True)
    ev = evaluate(A1, g)
    assert interval(A1, ev.end) == (2, 3) and ev.end_vertex == (1,)
    assert evaluate(A1, Gallery(A1.identity, (1, 0), frozenset({1, 2}))).end == A1.identity
    end = evaluate(A1, Gallery(A1.identity, (1, 0), frozenset({1}))).end
    assert end == A1.gen(0) and interval(A1, end) == (-1, 0)


def test_fold_examples():
    g = Gallery(A1.identity, (1, 0))
    assert evaluate(A1, fold_at(g, 2)).end == A1.gen(1)
    assert unfold_at(fold_at(g, 1), 1) == g
    with pytest.raises(PreconditionError):
        fold_at(fold_at(g, 1), 1)
    with pytest.raises(PreconditionError):
        unfold_at(g, 1)
    with pytest.raises(InputError):
        fold_at(g, 3)


def test_doubly_folded_regression():
    # a plain length-7 gallery folded at panels 4 and 7
    word = (0, 1, 2, 0, 1, 0, 2)
    assert A2.is_reduced(word)
    plain = Gallery(A2.identity, word)
    g = fold_at(fold_at(plain, 4), 7)
    assert g.decorated_type == "0 1 2 ^0 1 0 ^2"
    assert is_positively_folded(A2, antidominant(A2), g)
    end = evaluate(A2, g).end
    assert end == A2.from_word((0, 1, 2, 1, 0))
    assert A2.reduced_word(end) == (0, 1, 2, 1, 0)
    track = alcove_track(A2, g)
    assert track[3] == track[4] and track[6] == track[7]


def test_act_examples():
    g = Gallery(A1.identity, (1,))
    assert act(A1, A1.identity, g) == g
    moved = act(A1, A1.gen(0), g)
    assert [interval(A1, a) for a in alcove_track(A1, moved)] == [(-1, 0), (-2, -1)]
    x, y = A2.from_word([0, 1]), A2.from_word([2])
    h = Gallery(A2.identity, (1, 2, 0), frozenset({2}))
    assert act(A2, x, act(A2, y, h)) == act(A2, A2.mul(x, y), h)


def test_minimal_vertex_gallery_examples():
    g = minimal_vertex_gallery(A1, (1,))
    assert g.type_word == (1,)
    assert g.start_vertex == (0,)
    ev = evaluate(A1, g)
    assert interval(A1, ev.end) == (1, 2) and ev.end_vertex == (1,)
    assert minimal_vertex_gallery(A1, (0,)).type_word == ()
    # theta^vee lies in the alcove s0 . a next to the fundamental one
    assert minimal_vertex_gallery(A2, (1, 1)).type_word == (0,)
    assert len(minimal_vertex_gallery(A2, (2, 2)).type_word) == 8 - 3
    with pytest.raises(PreconditionError):
        minimal_vertex_gallery(A2, (1, -1))


def test_vertex_starts():
    assert len(vertex_starts(A2)) == 6
    assert all(a.trans == (0, 0) for a in vertex_starts(A2))
    assert vertex_starts(A2, (0, 0)) == [A2.identity]
    # theta^vee = rho^vee is regular in A2; (2, 1) is fixed by one simple reflection
    assert len(vertex_starts(A2, (1, 1))) == 6
    assert vertex_starts(A2, (2, 1)) == [A2.identity, A2.gen(1), A2.from_word([2, 1])]


def test_bijection_masks_to_decorated_types():
    # distinct (word, mask) give distinct decorated types and evaluate is total
    seen = set()
    for n in range(5):
        for word in product(A2.letters, repeat=n):
            for bits in product((0, 1), repeat=n):
                g = Gallery(A2.identity, word, frozenset(i + 1 for i in range(n) if bits[i]))
                evaluate(A2, g)
                key = (word, g.decorated_type)
                assert key not in seen
                seen.add(key)


def test_fold_is_reflection_of_tail():
    for x in A2.ball(6):
        word = A2.reduced_word(x)
        for bits in product((0, 1), repeat=len(word)):
            g = Gallery(A2.identity, word, frozenset(i + 1 for i in range(len(word)) if bits[i]))
            track = alcove_track(A2, g)
            for i in range(1, len(word) + 1):
                if i in g.fold_mask:
                    continue
                r = A2.reflection(panel_walls(A2, g)[i - 1])
                folded = alcove_track(A2, fold_at(g, i))
                assert folded[:i] == track[:i]
                assert folded[i:] == [A2.mul(r, a) for a in track[i:]]


def test_reduced_iff_minimal():
    for n in range(7):
        for word in product(A2.letters, repeat=n):
            g = Gallery(A2.identity, word)
            end = evaluate(A2, g).end
            assert A2.is_reduced(word) == (A2.length(end) == n)


@given(st.lists(st.integers(0, 2), max_size=8), st.data())
def test_json_round_trip(word, data):
    mask = frozenset(data.draw(st.sets(st.integers(1, max(1, len(word))))) if word else set())
    start = A2.from_word(data.draw(st.lists(st.integers(0, 2), max_size=4)))
    g = Gallery(start, tuple(word), mask, (0, 0), True)
    if any(i > len(word) for i in mask):
        return
    assert from_json(A2, to_json(A2, g)) == g


@pytest.mark.parametrize("tag", ["A2~", "C2~", "G2~"])
def test_regular_vertex_gallery_length(tag):
    W = affine_weyl_group(tag)
    d = W.datum
    fw = d.finite_weyl
    for lam in product(range(1, 4), repeat=2):
        if all(d.pair_simple(i, lam) > 0 for i in range(2)):
            g = minimal_vertex_gallery(W, lam)
            assert len(g.type_word) == W.length(W.translation(lam)) - fw.length(fw.longest)
