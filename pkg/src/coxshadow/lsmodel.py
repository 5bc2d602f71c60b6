"""Load-bearing walls, gallery dimension, LS-galleries and MV polytopes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .affineweyl import AffineElement, AffineWeylGroup, Hyperplane, Word
from .galleries import Gallery, alcove_track, evaluate, minimal_vertex_gallery, unfold_at, vertex_starts
from .orientations import Orientation, antidominant, fold_is_positive, is_positively_folded, side
from .rootdata import PreconditionError, Weight, is_dominant


class NotPositivelyFolded(PreconditionError):
    pass


@dataclass(frozen=True)
class DimensionedGallery:
    gallery: Gallery
    orientation: Orientation
    load_bearing: tuple[tuple[int, Hyperplane], ...]
    end_vertex: Weight

    @property
    def dimension(self) -> int:
        return len(self.load_bearing)

    def to_json(self, W: AffineWeylGroup) -> dict:
        return {
            "start": list(W.reduced_word(self.gallery.start)),
            "folds": sorted(self.gallery.fold_mask),
            "end": list(self.end_vertex),
            "dim": self.dimension,
        }


def origin_load_bearing(W: AffineWeylGroup, o: Orientation, c0: AffineElement) -> list[Hyperplane]:
    return [hp for hp in W.walls_through_origin() if side(W, o, hp, c0) == 1]


def load_bearing_pairs(
    W: AffineWeylGroup, g: Gallery, o: Orientation, include_origin: bool = True
) -> list[tuple[int, Hyperplane]]:
    """Pairs (position, wall) where the outgoing alcove is on the o-positive side.

    Position 0 is the start vertex: every wall through the origin with ``c_0``
    on its positive side. Position ``i`` is panel ``i``, judged by ``c_i``, so
    positive folds and negative-to-positive crossings both count.
    """
    if not is_positively_folded(W, o, g):
        raise NotPositivelyFolded("load-bearing walls need a positively folded gallery")
    out: list[tuple[int, Hyperplane]] = []
    track = alcove_track(W, g)
    if include_origin:
        out.extend((0, hp) for hp in origin_load_bearing(W, o, track[0]))
    for i, s in enumerate(g.type_word, start=1):
        hp = W.wall_between(track[i - 1], s)
        if side(W, o, hp, track[i]) == 1:
            out.append((i, hp))
    return out


def dimension(W: AffineWeylGroup, g: Gallery, o: Orientation) -> int:
    return len(load_bearing_pairs(W, g, o, include_origin=g.start_vertex is not None))


def rho_bound(W: AffineWeylGroup, lam: Weight, mu: Weight) -> int:
    """Dimension bound ``<rho, lam - mu>`` for galleries of type tau(lam) ending at ``mu``."""
    return W.datum.rho_pair(tuple(a - b for a, b in zip(lam, mu)))


LS_BOUND: Callable[[AffineWeylGroup, Weight, Weight], int] = rho_bound


def positively_folded_galleries(
    W: AffineWeylGroup,
    word: Word,
    o: Orientation,
    starts: Iterable[AffineElement],
    start_vertex: Weight | None = None,
) -> list[Gallery]:
    """Depth-first enumeration pruning non-positive folds as they arise."""
    n = len(word)
    out: list[Gallery] = []

    def walk(a: AffineElement, i: int, mask: tuple[int, ...], start: AffineElement) -> None:
        if i == n:
            out.append(Gallery(start, word, frozenset(mask), start_vertex, start_vertex is not None))
            return
        s = word[i]
        walk(W.rmul(a, s), i + 1, mask, start)
        if fold_is_positive(W, o, a, s):
            walk(a, i + 1, mask + (i + 1,), start)

    for c0 in starts:
        walk(c0, 0, (), c0)
    return out


def dimensioned(W: AffineWeylGroup, g: Gallery, o: Orientation) -> DimensionedGallery:
    pairs = load_bearing_pairs(W, g, o)
    assert sum(1 for p, _ in pairs if p == 0) <= W.datum.n_pos
    assert len({p for p, _ in pairs if p > 0}) == sum(1 for p, _ in pairs if p > 0)
    return DimensionedGallery(g, o, tuple(pairs), evaluate(W, g).end.trans)


def vertex_galleries(W: AffineWeylGroup, lam: Weight, o: Orientation | None = None) -> list[DimensionedGallery]:
    """All o-positively folded galleries of type tau(lam) from the origin, with dimensions."""
    lam = tuple(lam)
    if not is_dominant(W.datum, lam):
        raise PreconditionError(f"{lam} is not dominant")
    o = antidominant(W) if o is None else o
    tau = minimal_vertex_gallery(W, lam).type_word
    gals = positively_folded_galleries(W, tau, o, vertex_starts(W, lam), W.datum.zero)
    return [dimensioned(W, g, o) for g in gals]


def ls_galleries(W: AffineWeylGroup, lam: Weight) -> list[DimensionedGallery]:
    lam = tuple(lam)
    return [dg for dg in vertex_galleries(W, lam) if dg.dimension == LS_BOUND(W, lam, dg.end_vertex)]


def gallery_character(W: AffineWeylGroup, lam: Weight) -> dict[Weight, int]:
    counts = Counter(dg.end_vertex for dg in ls_galleries(W, lam))
    return dict(sorted(counts.items()))


# --- MV polytopes ----------------------------------------------------------------


def partial_unfoldings(W: AffineWeylGroup, g: Gallery) -> list[Gallery]:
    folds = sorted(g.fold_mask)
    out = []
    for k in range(len(folds) + 1):
        for sub in combinations(folds, k):
            h = g
            for i in sub:
                h = unfold_at(h, i)
            out.append(h)
    return out


def _cross(o: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def extreme_points(points: Iterable[Weight]) -> frozenset[Weight]:
    """Vertices of the convex hull of integer points (rank <= 2 exact, rank 3 via LP).

    Convexity is affine-invariant, so coroot coordinates can be used directly.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 1:
        return frozenset(pts)
    dim = len(pts[0])
    if dim == 1:
        return frozenset({pts[0], pts[-1]})
    if dim == 2:
        # Andrew's monotone chain, dropping collinear points
        lower: list[Weight] = []
        for p in pts:
            while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        upper: list[Weight] = []
        for p in reversed(pts):
            while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        return frozenset(lower[:-1] + upper[:-1])
    return frozenset(p for p in pts if not _in_hull_lp(p, [q for q in pts if q != p]))


def _in_hull_lp(p: Weight, others: list[Weight]) -> bool:
    import numpy as np
    from scipy.optimize import linprog

    if not others:
        return False
    a = np.array(others, dtype=float).T
    a_eq = np.vstack([a, np.ones(len(others))])
    b_eq = np.array(list(p) + [1.0])
    res = linprog(np.zeros(len(others)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    return bool(res.status == 0)


@dataclass(frozen=True)
class MVPolytope:
    endpoints: frozenset[Weight]
    vertices: frozenset[Weight]


def mv_polytope(W: AffineWeylGroup, lam: Weight, delta: DimensionedGallery | Gallery) -> MVPolytope:
    """Convex hull of the end vertices of all partial unfoldings of ``delta``."""
    g = delta.gallery if isinstance(delta, DimensionedGallery) else delta
    ends = frozenset(evaluate(W, h).end.trans for h in partial_unfoldings(W, g))
    return MVPolytope(ends, extreme_points(ends))


def character_csv(char: dict[Weight, int]) -> str:
    lines = ["weight,multiplicity"]
    for nu, k in sorted(char.items()):
        lines.append(f"\"{' '.join(map(str, nu))}\",{k}")
    return "\n".join(lines) + "\n"
