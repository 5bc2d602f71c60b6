"""Combinatorial galleries encoded as (start alcove, type word, fold mask).

Panel ``i`` (1-based) has type ``type_word[i-1]``; if ``i`` is in the fold
mask the gallery stays in its current alcove, otherwise it crosses to
``c_{i-1} s``. Alcove tracks are recomputed on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple

from .affineweyl import AffineElement, AffineWeylGroup, Hyperplane, InputError, Word
from .rootdata import PreconditionError, Weight, is_dominant


@dataclass(frozen=True)
class Gallery:
    start: AffineElement
    type_word: Word
    fold_mask: frozenset[int] = field(default_factory=frozenset)
    start_vertex: Weight | None = None
    end_vertex_requested: bool = False

    def __len__(self) -> int:
        return len(self.type_word)

    @property
    def decorated_type(self) -> str:
        """Type word with a hat (``^``) on every folded letter."""
        return " ".join(
            f"^{s}" if i in self.fold_mask else str(s)
            for i, s in enumerate(self.type_word, start=1)
        )


class Evaluation(NamedTuple):
    alcoves: list[AffineElement]
    end: AffineElement
    end_vertex: Weight | None


def alcove_track(W: AffineWeylGroup, g: Gallery) -> list[AffineElement]:
    track = [g.start]
    a = g.start
    for i, s in enumerate(g.type_word, start=1):
        if i not in g.fold_mask:
            a = W.rmul(a, s)
        track.append(a)
    return track


def evaluate(W: AffineWeylGroup, g: Gallery) -> Evaluation:
    track = alcove_track(W, g)
    end = track[-1]
    return Evaluation(track, end, end.trans if g.end_vertex_requested else None)


def panel_walls(W: AffineWeylGroup, g: Gallery) -> list[Hyperplane]:
    """Wall of panel ``i`` (list index ``i-1``): the wall of ``c_{i-1}`` of type ``s_{j_i}``."""
    track = alcove_track(W, g)
    return [W.wall_between(track[i], s) for i, s in enumerate(g.type_word)]


def _check_index(g: Gallery, i: int) -> None:
    if not 1 <= i <= len(g.type_word):
        raise InputError(f"panel index {i} out of range 1..{len(g.type_word)}")


def fold_at(g: Gallery, i: int) -> Gallery:
    _check_index(g, i)
    if i in g.fold_mask:
        raise PreconditionError(f"gallery already folded at panel {i}")
    return replace(g, fold_mask=g.fold_mask | {i})


def unfold_at(g: Gallery, i: int) -> Gallery:
    _check_index(g, i)
    if i not in g.fold_mask:
        raise PreconditionError(f"gallery is not folded at panel {i}")
    return replace(g, fold_mask=g.fold_mask - {i})


def act(W: AffineWeylGroup, w: AffineElement, g: Gallery) -> Gallery:
    """Left action: every alcove and panel is multiplied by ``w``; types are invariant."""
    sv = None if g.start_vertex is None else tuple(W.act_point(w, g.start_vertex))
    return replace(g, start=W.mul(w, g.start), start_vertex=sv)


def minimal_gallery(W: AffineWeylGroup, a: AffineElement, b: AffineElement) -> Gallery:
    return Gallery(start=a, type_word=W.reduced_word(W.mul(W.inv(a), b)))


def minimal_vertex_alcove(W: AffineWeylGroup, lam: Weight) -> AffineElement:
    """The alcove containing ``lam`` that is closest to the fundamental alcove."""
    t = W.translation(lam)
    cands = [W.mul(t, W.finite(w)) for w in range(len(W.datum.finite_weyl))]
    return min(cands, key=lambda x: (W.length(x), W.reduced_word(x)))


def minimal_vertex_gallery(W: AffineWeylGroup, lam: Weight) -> Gallery:
    """Minimal gallery from the origin to the dominant coweight ``lam``.

    It starts at the fundamental alcove and ends in the alcove containing ``lam``
    of minimal length; its end vertex is the type-0 vertex ``lam``.
    """
    lam = tuple(lam)
    if not is_dominant(W.datum, lam):
        raise PreconditionError(f"{lam} is not dominant")
    m = minimal_vertex_alcove(W, lam)
    return Gallery(
        start=W.identity,
        type_word=W.reduced_word(m),
        start_vertex=W.datum.zero,
        end_vertex_requested=True,
    )


def vertex_starts(W: AffineWeylGroup, lam: Weight | None = None) -> list[AffineElement]:
    """Alcoves containing the origin, i.e. ``W0 . a``.

    With ``lam`` given, one alcove per coset of the stabiliser ``W_lam``: the
    minimal-length representative. A gallery towards a non-regular ``lam``
    really starts at a face fixed by ``W_lam``, and these representatives are
    the alcoves of ``W0 . a`` that see that face without crossing its walls.
    """
    d = W.datum
    fw = d.finite_weyl
    if lam is None:
        return [W.finite(w) for w in range(len(fw))]
    lam = tuple(lam)
    stab = [v for v in range(len(fw)) if d.act(v, lam) == lam]
    reps = []
    for w in range(len(fw)):
        # BFS order makes the first element met in each coset its shortest one
        if all(fw.length(fw.mult[w][v]) >= fw.length(w) for v in stab):
            reps.append(W.finite(w))
    return reps


def to_json(W: AffineWeylGroup, g: Gallery) -> dict:
    out: dict = {
        "start": list(W.reduced_word(g.start)),
        "type": list(g.type_word),
        "folds": sorted(g.fold_mask),
    }
    if g.start_vertex is not None:
        out["start_vertex"] = list(g.start_vertex)
    if g.end_vertex_requested:
        out["end_vertex"] = list(evaluate(W, g).end.trans)
    return out


def from_json(W: AffineWeylGroup, data: dict) -> Gallery:
    return Gallery(
        start=W.from_word(data["start"]),
        type_word=tuple(data["type"]),
        fold_mask=frozenset(data.get("folds", ())),
        start_vertex=tuple(data["start_vertex"]) if "start_vertex" in data else None,
        end_vertex_requested="end_vertex" in data,
    )
