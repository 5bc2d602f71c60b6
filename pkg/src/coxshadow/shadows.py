"""Shadows: end alcoves of positively folded galleries of a reduced type.

Three independent routes are provided:

* ``frontier`` – left-to-right sweep keeping the set of reachable alcoves,
* ``enumerate_masks`` – all 2^n fold masks filtered by positivity (slow oracle),
* ``shadow_recursive`` – the right/left descent recursions for chamber
  orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .affineweyl import AffineElement, AffineWeylGroup, Word
from .galleries import Gallery, evaluate, minimal_vertex_gallery, vertex_starts
from .orientations import (
    AtInfinity,
    Orientation,
    TrivialPos,
    antidominant,
    fold_is_positive,
    is_positively_folded,
    left_translate_orientation,
    side,
)
from .rootdata import PreconditionError, Weight, convex_hull_membership, is_dominant, weyl_orbit


@dataclass(frozen=True)
class ShadowResult:
    base_element: AffineElement
    orientation: Orientation
    elements: frozenset
    max_folds: dict | None = field(default=None, compare=False)


def frontier(
    W: AffineWeylGroup,
    word: Sequence[int],
    o: Orientation,
    starts: Iterable[AffineElement] | None = None,
) -> dict[AffineElement, int]:
    """Reachable end alcoves of o-positively folded galleries of type ``word``.

    Values are the maximal number of folds among galleries reaching that alcove.
    """
    front = {a: 0 for a in (starts if starts is not None else [W.identity])}
    for s in word:
        nxt: dict[AffineElement, int] = {}
        for a, folds in front.items():
            b = W.rmul(a, s)
            if nxt.get(b, -1) < folds:
                nxt[b] = folds
            if fold_is_positive(W, o, a, s) and nxt.get(a, -1) < folds + 1:
                nxt[a] = folds + 1
        front = nxt
    return front


def enumerate_masks(
    W: AffineWeylGroup,
    word: Sequence[int],
    o: Orientation,
    start: AffineElement | None = None,
) -> list[Gallery]:
    """Every o-positively folded gallery of type ``word`` (explicit 2^n scan)."""
    start = W.identity if start is None else start
    n = len(word)
    out = []
    for bits in product((0, 1), repeat=n):
        g = Gallery(start, tuple(word), frozenset(i + 1 for i in range(n) if bits[i]))
        if is_positively_folded(W, o, g):
            out.append(g)
    return out


def shadow_brute(
    W: AffineWeylGroup,
    x: AffineElement,
    o: Orientation,
    word: Word | None = None,
    method: str = "frontier",
) -> ShadowResult:
    """Shadow of ``x`` from the registry's canonical reduced word (or ``word``)."""
    word = W.reduced_word(x) if word is None else tuple(word)
    if method == "masks":
        ends: dict[AffineElement, int] = {}
        for g in enumerate_masks(W, word, o):
            e = evaluate(W, g).end
            ends[e] = max(ends.get(e, 0), len(g.fold_mask))
    elif method == "frontier":
        ends = frontier(W, word, o)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ShadowResult(x, o, frozenset(ends), dict(ends))


def bruhat_interval(W: AffineWeylGroup, x: AffineElement) -> frozenset[AffineElement]:
    return shadow_brute(W, x, TrivialPos()).elements


# --- recursions ----------------------------------------------------------------


def step_right(
    W: AffineWeylGroup, o: AtInfinity, prev: Iterable[AffineElement], s: int
) -> frozenset[AffineElement]:
    """``Shadow(x)`` from ``Shadow(xs)`` for a right descent ``s`` of ``x``."""
    out = set()
    for z in prev:
        out.add(W.rmul(z, s))
        if fold_is_positive(W, o, z, s):
            out.add(z)
    return frozenset(out)


def step_left(
    W: AffineWeylGroup,
    o: AtInfinity,
    translated: Iterable[AffineElement],
    same: Iterable[AffineElement],
    s: int,
) -> frozenset[AffineElement]:
    """``Shadow_o(x)`` from ``Shadow_{so}(sx)`` and ``Shadow_o(sx)`` for a left descent ``s``."""
    out = {W.lmul(s, z) for z in translated}
    # s.a on the negative side of its wall with a  <=>  folding at a is positive
    if fold_is_positive(W, o, W.identity, s):
        out.update(same)
    return frozenset(out)


class RecursiveShadows:
    """Memoised descent recursions for all chamber orientations of one group."""

    def __init__(self, W: AffineWeylGroup, rule: str = "R"):
        if rule not in ("R", "L"):
            raise ValueError("rule must be 'R' or 'L'")
        self.W = W
        self.rule = rule
        self.memo: dict[tuple[AffineElement, int], frozenset[AffineElement]] = {}

    def __call__(self, x: AffineElement, o: Orientation) -> frozenset[AffineElement]:
        if not isinstance(o, AtInfinity):
            raise TypeError("recursive shadows need an AtInfinity orientation")
        W = self.W
        key = (x, o.u)
        if key in self.memo:
            return self.memo[key]
        if x == W.identity:
            res = frozenset([x])
        elif self.rule == "R":
            s = W.right_descents(x)[0]
            res = step_right(W, o, self(W.rmul(x, s), o), s)
        else:
            s = W.left_descents(x)[0]
            sx = W.lmul(s, x)
            res = step_left(W, o, self(sx, left_translate_orientation(W, s, o)), self(sx, o), s)
        self.memo[key] = res
        return res


def shadow_recursive(
    W: AffineWeylGroup, x: AffineElement, o: AtInfinity, rule: str = "R"
) -> ShadowResult:
    return ShadowResult(x, o, RecursiveShadows(W, rule)(x, o))


def recursion_mismatches(
    W: AffineWeylGroup,
    shadow_of,
    x: AffineElement,
    o: AtInfinity,
) -> list[str]:
    """Apply both one-step recursions with every valid descent of ``x``.

    ``shadow_of(y, o)`` supplies the shadows of shorter elements; returns a list
    of human-readable mismatches (empty when all agree with ``shadow_of(x, o)``).
    """
    target = shadow_of(x, o)
    bad = []
    for s in W.right_descents(x):
        got = step_right(W, o, shadow_of(W.rmul(x, s), o), s)
        if got != target:
            bad.append(f"R s={s} x={W.reduced_word(x)} u={o.u}")
    for s in W.left_descents(x):
        sx = W.lmul(s, x)
        got = step_left(W, o, shadow_of(sx, left_translate_orientation(W, s, o)), shadow_of(sx, o), s)
        if got != target:
            bad.append(f"L s={s} x={W.reduced_word(x)} u={o.u}")
    return bad


# --- vertex shadows and convexity ----------------------------------------------


def vertex_shadow(W: AffineWeylGroup, lam: Weight, o: Orientation) -> frozenset[Weight]:
    """End vertices of o-positively folded galleries of the minimal type to ``lam``
    starting at the origin (any alcove around it)."""
    lam = tuple(lam)
    if not is_dominant(W.datum, lam):
        raise PreconditionError(f"{lam} is not dominant")
    g = minimal_vertex_gallery(W, lam)
    ends = frontier(W, g.type_word, o, starts=vertex_starts(W))
    return frozenset(a.trans for a in ends)


def hull_lattice_points(W: AffineWeylGroup, lam: Weight) -> frozenset[Weight]:
    """Coroot-lattice points in the convex hull of ``W0 . lam``."""
    d = W.datum
    orbit = weyl_orbit(d, lam)
    lo = [min(v[i] for v in orbit) for i in range(d.rank)]
    hi = [max(v[i] for v in orbit) for i in range(d.rank)]
    box = product(*(range(a, b + 1) for a, b in zip(lo, hi)))
    return frozenset(nu for nu in box if convex_hull_membership(d, nu, lam))


@dataclass(frozen=True)
class ConvexityReport:
    lam: Weight
    shadow: frozenset
    hull: frozenset

    @property
    def difference(self) -> frozenset:
        return self.shadow ^ self.hull

    @property
    def ok(self) -> bool:
        return not self.difference

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "vertex_shadow": sorted(list(v) for v in self.shadow),
            "hull_points": sorted(list(v) for v in self.hull),
            "symmetric_difference": sorted(list(v) for v in self.difference),
            "ok": self.ok,
        }


def verify_convexity(W: AffineWeylGroup, lam: Weight) -> ConvexityReport:
    lam = tuple(lam)
    return ConvexityReport(lam, vertex_shadow(W, lam, antidominant(W)), hull_lattice_points(W, lam))


def shadow_json(W: AffineWeylGroup, result: ShadowResult, word: Word | None = None) -> dict:
    from .orientations import format_orientation

    elems = sorted(result.elements, key=lambda y: (W.length(y), W.reduced_word(y)))
    return {
        "type_tag": W.datum.type_tag,
        "word": list(W.reduced_word(result.base_element) if word is None else word),
        "orientation": format_orientation(W, result.orientation),
        "shadow": [list(W.reduced_word(y)) for y in elems],
    }


__all__ = [
    "ShadowResult",
    "frontier",
    "enumerate_masks",
    "shadow_brute",
    "bruhat_interval",
    "step_right",
    "step_left",
    "RecursiveShadows",
    "shadow_recursive",
    "recursion_mismatches",
    "vertex_shadow",
    "hull_lattice_points",
    "verify_convexity",
    "ConvexityReport",
    "shadow_json",
    "side",
]
