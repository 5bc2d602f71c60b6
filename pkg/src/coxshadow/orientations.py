"""Orientations on (wall, alcove) pairs and positive foldedness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .affineweyl import AffineElement, AffineWeylGroup, Hyperplane, InputError
from .galleries import Gallery, alcove_track


@dataclass(frozen=True)
class TrivialPos:
    pass


@dataclass(frozen=True)
class TrivialNeg:
    pass


@dataclass(frozen=True)
class AlcoveTowards:
    target: AffineElement


@dataclass(frozen=True)
class AtInfinity:
    """Weyl chamber orientation for the chamber at infinity in direction ``u . rho^vee``.

    ``AtInfinity(W0 longest)`` is the orientation of the anti-dominant chamber.
    """

    u: int


Orientation = Union[TrivialPos, TrivialNeg, AlcoveTowards, AtInfinity]


def side(W: AffineWeylGroup, o: Orientation, hp: Hyperplane, a: AffineElement) -> int:
    """+1 if ``a`` is on the o-positive side of ``hp``, else -1."""
    match o:
        case TrivialPos():
            return 1
        case TrivialNeg():
            return -1
        case AlcoveTowards(target=c):
            return 1 if W.side_sign(hp, a) == W.side_sign(hp, c) else -1
        case AtInfinity(u=u):
            far = W.datum.pair(hp.root, W.datum.act(u, W.datum.rho_vee2))
            return 1 if (W.offset(hp, a) > 0) == (far > 0) else -1
    raise TypeError(f"not an orientation: {o!r}")


def fold_is_positive(W: AffineWeylGroup, o: Orientation, a: AffineElement, s: int) -> bool:
    """Whether staying in ``a`` at its panel of type ``s`` is an o-positive fold."""
    return side(W, o, W.wall_between(a, s), a) == 1


def positive_fold_count(W: AffineWeylGroup, o: Orientation, g: Gallery) -> int:
    track = alcove_track(W, g)
    return sum(
        1 for i in g.fold_mask if fold_is_positive(W, o, track[i], g.type_word[i - 1])
    )


def is_positively_folded(W: AffineWeylGroup, o: Orientation, g: Gallery) -> bool:
    return positive_fold_count(W, o, g) == len(g.fold_mask)


def left_translate_orientation(W: AffineWeylGroup, s: int, o: Orientation) -> AtInfinity:
    """``s . o`` with ``(s o)(H, a) = o(s^-1 H, s^-1 a)``; defined for AtInfinity only."""
    if not isinstance(o, AtInfinity):
        raise TypeError("left translation is only implemented for AtInfinity orientations")
    lin = W.gen(s).lin
    return AtInfinity(W.datum.finite_weyl.mult[lin][o.u])


def all_chamber_orientations(W: AffineWeylGroup) -> list[AtInfinity]:
    return [AtInfinity(u) for u in range(len(W.datum.finite_weyl))]


def antidominant(W: AffineWeylGroup) -> AtInfinity:
    return AtInfinity(W.datum.finite_weyl.longest)


def parse_orientation(W: AffineWeylGroup, text: str) -> Orientation:
    """Parse ``triv+``, ``triv-``, ``alcove:<affine word>`` or ``winf:<W0 word>``.

    The W0 word uses finite letters ``1..rank``; ``winf:w0`` is the
    anti-dominant chamber.
    """
    text = text.strip()
    if text == "triv+":
        return TrivialPos()
    if text == "triv-":
        return TrivialNeg()
    kind, _, arg = text.partition(":")
    if kind == "alcove":
        return AlcoveTowards(W.from_word(W.parse_word(arg)))
    if kind == "winf":
        fw = W.datum.finite_weyl
        if arg.strip() == "w0":
            return AtInfinity(fw.longest)
        u = 0
        for tok in filter(None, arg.replace(" ", "").split(",")):
            i = int(tok)
            if not 1 <= i <= W.rank:
                raise InputError(f"finite letter {i} out of range 1..{W.rank}")
            u = fw.mult[u][fw.words.index((i,))]
        return AtInfinity(u)
    raise InputError(f"unknown orientation {text!r}")


def format_orientation(W: AffineWeylGroup, o: Orientation) -> str:
    match o:
        case TrivialPos():
            return "triv+"
        case TrivialNeg():
            return "triv-"
        case AlcoveTowards(target=c):
            return "alcove:" + W.format_word(W.reduced_word(c))
        case AtInfinity(u=u):
            return "winf:" + W.format_word(W.datum.finite_weyl.words[u])
    raise TypeError(f"not an orientation: {o!r}")
