from itertools import product

import pytest

from coxshadow.adlv import (
    AdlvContext,
    ConsistencyError,
    EmptyIntersectionError,
    adlv_dim_raw,
    adlv_nonempty,
    adlv_table,
    coset_dim,
    coset_dim_witness,
    coset_nonempty,
    mst_relation_report,
)
from coxshadow.affineweyl import affine_weyl_group
from coxshadow.lsmodel import load_bearing_pairs
from coxshadow.orientations import AtInfinity, all_chamber_orientations, side
from coxshadow.rootdata import weyl_orbit
from coxshadow.shadows import enumerate_masks
from coxshadow.galleries import evaluate

A1 = affine_weyl_group("A1~")
A2 = affine_weyl_group("A2~")
W0_A1 = A1.datum.finite_weyl.longest


def test_coset_nonempty_examples():
    x = A1.from_word([1, 0])
    assert coset_nonempty(A1, x, A1.gen(0), W0_A1)
    assert not coset_nonempty(A1, x, A1.identity, 0)
    for u in range(2):
        assert coset_nonempty(A1, x, x, u)


def test_coset_dim_examples():
    x = A1.from_word([1, 0])
    assert coset_dim(A1, x, A1.gen(1), W0_A1) == 1
    assert coset_dim_witness(A1, x, A1.gen(1), W0_A1).fold_mask == {2}
    assert coset_dim(A1, x, x, 0) == 2
    assert coset_dim(A1, x, x, W0_A1) == 0
    with pytest.raises(EmptyIntersectionError):
        coset_dim(A1, x, A1.identity, 0)


def brute_dims(W, x, u):
    o = AtInfinity(u)
    best = {}
    for g in enumerate_masks(W, W.reduced_word(x), o):
        z = evaluate(W, g).end
        best[z] = max(best.get(z, 0), len(load_bearing_pairs(W, g, o, include_origin=False)))
    return best


@pytest.mark.parametrize("tag", ["A1~", "A2~", "C2~"])
def test_coset_dim_against_mask_enumeration(tag):
    W = affine_weyl_group(tag)
    for x in W.ball(6):
        for u in range(len(W.datum.finite_weyl)):
            dims = brute_dims(W, x, u)
            for z in W.ball(W.length(x)):
                want = dims.get(z)
                if want is None:
                    with pytest.raises(EmptyIntersectionError):
                        coset_dim(W, x, z, u)
                else:
                    assert coset_dim(W, x, z, u) == want


def test_coset_dim_of_x_counts_positive_crossings():
    for x in A2.ball(8):
        for o in all_chamber_orientations(A2):
            walls = A2.separating_walls(A2.identity, x)
            want = sum(1 for hp in walls if side(A2, o, hp, x) == 1)
            assert coset_dim(A2, x, x, o.u) == want


def test_adlv_examples():
    x = A1.from_word([1, 0])
    assert not adlv_nonempty(A1, x, (0,)).nonempty
    rep = adlv_nonempty(A1, x, (1,))
    assert rep.nonempty and rep.per_direction[0].nonempty
    triv = adlv_nonempty(A1, A1.identity, (0,))
    assert triv.nonempty and triv.raw_dim == 0
    assert adlv_dim_raw(A1, x, (0,)) is None


def test_report_aggregates():
    for x in A2.ball(5):
        rep = adlv_nonempty(A2, x, (1, 0))
        hits = [r.max_gallery_dim for r in rep.per_direction.values() if r.nonempty]
        assert rep.nonempty == bool(hits)
        assert rep.raw_dim == (max(hits) if hits else None)
        assert rep.offset_policy == "report-only"


def test_table_examples():
    rows = adlv_table(A1, 0, (0,))
    assert len(rows) == 1 and rows[0].word == () and rows[0].nonempty
    rows = {r.word: r for r in adlv_table(A1, 2, (0,))}
    assert not rows[(1, 0)].nonempty and not rows[(0, 1)].nonempty
    assert rows[(0,)].nonempty and rows[(1,)].nonempty


def test_table_thread_independent():
    a = adlv_table(A2, 6, (1, 1), workers=1)
    b = adlv_table(A2, 6, (1, 1), workers=4)
    assert a == b


def test_table_symmetry_a2():
    # the diagram automorphism swapping letters 1 and 2 maps theta^vee to itself
    rows = {r.word: r.nonempty for r in adlv_table(A2, 8, (1, 1))}
    swap = {0: 0, 1: 2, 2: 1}
    for w, ok in rows.items():
        image = A2.reduced_word(A2.from_word([swap[s] for s in w]))
        assert rows[image] == ok


@pytest.mark.parametrize("tag", ["A1~", "A2~", "C2~"])
def test_mu_orbit_invariance(tag):
    W = affine_weyl_group(tag)
    d = W.datum
    ctx = AdlvContext(W)
    for mu in product(range(-2, 3), repeat=d.rank):
        orbit = sorted(weyl_orbit(d, mu))
        for x in W.ball(6):
            vals = {adlv_nonempty(W, x, m, ctx).nonempty for m in orbit}
            assert len(vals) == 1


def test_mst_report():
    x = A2.from_word([0, 1, 0, 2, 0, 1])
    assert mst_relation_report(A2, x, (0, 0)).residual in (0, None)
    assert mst_relation_report(A2, A2.identity, (0, 0)).residual == 0
    # golden diagnostics, not theorem checks
    for word in [(0, 1, 0, 2, 0, 1), (1, 0, 2, 0, 1, 0)]:
        rep = mst_relation_report(A2, A2.from_word(word), (1, 1))
        assert (rep.applicable, rep.raw_mu, rep.raw_zero, rep.rho_mu_plus, rep.residual) == (True, 6, 4, 2, 4)
    empty = mst_relation_report(A1, A1.from_word([1, 0]), (1,))
    assert not empty.applicable and empty.residual is None


def test_consistency_error_raised_on_corrupt_shadow():
    ctx = AdlvContext(A2)
    x = A2.from_word([0, 1])
    ctx._brute[(x, 0)] = frozenset()
    with pytest.raises(ConsistencyError):
        ctx.shadow(x, 0)
