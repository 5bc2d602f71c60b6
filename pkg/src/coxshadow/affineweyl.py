"""The affine Weyl group W0 x| Q^vee as exact affine maps of coweight space.

An element ``(lin, trans)`` acts by ``v -> lin(v) + trans`` and labels the
alcove ``x . a`` where ``a`` is the fundamental alcove. Alcove sides are
decided with the scaled sample point ``2h * x(b0) = lin(2 rho^vee) + 2h trans``
with ``b0 = rho^vee / h``; its pairing with any root is never a multiple of
``2h``, so side tests never tie.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .rootdata import RootDatum, Weight, build_root_datum

Word = tuple[int, ...]


class InputError(ValueError):
    """Malformed word or element."""


@dataclass(frozen=True, order=True)
class AffineElement:
    lin: int
    trans: Weight


@dataclass(frozen=True, order=True)
class Hyperplane:
    """``{v : <alpha, v> = level}`` with ``alpha`` a positive root (index)."""

    root: int
    level: int


class AffineWeylGroup:
    """Affine Weyl group of a registered root datum.

    Generators are labelled ``0..rank``: ``s_i = r_{alpha_i, 0}`` for ``i >= 1``
    and ``s_0 = r_{theta, 1}``, except in A1~ where ``s_0 = r_{alpha, 0}`` and
    ``s_1 = r_{alpha, 1}`` (reflections at adjacent integers on the line).
    """

    def __init__(self, datum: RootDatum | str):
        if isinstance(datum, str):
            datum = build_root_datum(datum)
        self.datum = datum
        d = datum
        self.h = d.coxeter_number
        self.two_h = 2 * self.h
        self.rank = d.rank
        self.letters: tuple[int, ...] = tuple(range(d.rank + 1))
        self.identity = AffineElement(0, d.zero)

        # base walls of the fundamental alcove, by letter
        walls = {0: Hyperplane(d.theta_index, 1)}
        for i in range(d.rank):
            walls[i + 1] = Hyperplane(d.simple_index[i], 0)
        if d.type_tag == "A1~":
            walls = {0: Hyperplane(0, 0), 1: Hyperplane(0, 1)}
        self.base_walls: dict[int, Hyperplane] = walls
        self.gens: dict[int, AffineElement] = {i: self.reflection(h) for i, h in walls.items()}

        fw = d.finite_weyl
        self._w_rho = tuple(d.act(w, d.rho_vee2) for w in range(len(fw)))
        self.length = lru_cache(maxsize=None)(self._length)
        self.reduced_word = lru_cache(maxsize=None)(self._reduced_word)

    # --- group law -----------------------------------------------------------

    def mul(self, x: AffineElement, y: AffineElement) -> AffineElement:
        d = self.datum
        t = d.act(x.lin, y.trans)
        return AffineElement(
            d.finite_weyl.mult[x.lin][y.lin], tuple(a + b for a, b in zip(t, x.trans))
        )

    def inv(self, x: AffineElement) -> AffineElement:
        d = self.datum
        li = d.finite_weyl.inverse[x.lin]
        return AffineElement(li, tuple(-a for a in d.act(li, x.trans)))

    def gen(self, i: int) -> AffineElement:
        if i not in self.gens:
            raise InputError(f"letter {i} out of range 0..{self.rank}")
        return self.gens[i]

    def rmul(self, x: AffineElement, i: int) -> AffineElement:
        return self.mul(x, self.gen(i))

    def lmul(self, i: int, x: AffineElement) -> AffineElement:
        return self.mul(self.gen(i), x)

    def from_word(self, word: Iterable[int]) -> AffineElement:
        x = self.identity
        for i in word:
            x = self.rmul(x, i)
        return x

    def translation(self, lam: Weight) -> AffineElement:
        return AffineElement(0, tuple(lam))

    def finite(self, w: int) -> AffineElement:
        return AffineElement(w, self.datum.zero)

    def act_point(self, x: AffineElement, v: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(self.datum.act(x.lin, tuple(v)), x.trans))

    # --- hyperplanes and alcoves ---------------------------------------------

    def reflection(self, hp: Hyperplane) -> AffineElement:
        """``r_{alpha,k} = (s_alpha, k alpha^vee)``."""
        d = self.datum
        return AffineElement(
            d.reflection_of_root[hp.root],
            tuple(hp.level * c for c in d.positive_coroots[hp.root]),
        )

    def image_of_wall(self, x: AffineElement, hp: Hyperplane) -> Hyperplane:
        # x{<b,v>=k} = {<x.lin b, u> = k + <x.lin b, x.trans>}
        d = self.datum
        g = d.finite_weyl.root_perm[x.lin][hp.root]
        level = hp.level + d.pair(g, x.trans)
        if g >= d.n_pos:
            return Hyperplane(g - d.n_pos, -level)
        return Hyperplane(g, level)

    def wall_between(self, a: AffineElement, i: int) -> Hyperplane:
        """The wall shared by alcoves ``a`` and ``a s_i``."""
        return self.image_of_wall(a, self.base_walls[i])

    def scaled_point(self, a: AffineElement) -> Weight:
        """``2h * a(b0)`` as an integer coweight."""
        return tuple(p + self.two_h * t for p, t in zip(self._w_rho[a.lin], a.trans))

    def sample_point(self, a: AffineElement) -> tuple[Fraction, ...]:
        return tuple(Fraction(p, self.two_h) for p in self.scaled_point(a))

    def offset(self, hp: Hyperplane, a: AffineElement) -> int:
        """``2h (<alpha, a(b0)> - k)``: nonzero, sign gives the side of ``a``."""
        return self.datum.pair(hp.root, self.scaled_point(a)) - self.two_h * hp.level

    def side_sign(self, hp: Hyperplane, a: AffineElement) -> int:
        return 1 if self.offset(hp, a) > 0 else -1

    def separates(self, hp: Hyperplane, a: AffineElement, b: AffineElement) -> bool:
        return self.side_sign(hp, a) != self.side_sign(hp, b)

    def separating_walls(self, a: AffineElement, b: AffineElement) -> list[Hyperplane]:
        d = self.datum
        pa, pb = self.scaled_point(a), self.scaled_point(b)
        out = []
        for r in range(d.n_pos):
            lo, hi = sorted((d.pair(r, pa), d.pair(r, pb)))
            # integers k with lo < 2h k < hi
            for k in range(-(-lo // self.two_h), hi // self.two_h + 1):
                if lo < self.two_h * k < hi:
                    out.append(Hyperplane(r, k))
        return out

    def walls_through_origin(self) -> list[Hyperplane]:
        return [Hyperplane(r, 0) for r in range(self.datum.n_pos)]

    # --- length and words ----------------------------------------------------

    def _length(self, x: AffineElement) -> int:
        d = self.datum
        p = self.scaled_point(x)
        total = 0
        for r in range(d.n_pos):
            n = d.pair(r, p)
            total += n // self.two_h if n > 0 else (-n) // self.two_h + 1
        return total

    def is_right_descent(self, x: AffineElement, i: int) -> bool:
        return self.separates(self.wall_between(x, i), x, self.identity)

    def is_left_descent(self, i: int, x: AffineElement) -> bool:
        return self.separates(self.base_walls[i], x, self.identity)

    def right_descents(self, x: AffineElement) -> list[int]:
        return [i for i in self.letters if self.is_right_descent(x, i)]

    def left_descents(self, x: AffineElement) -> list[int]:
        return [i for i in self.letters if self.is_left_descent(i, x)]

    def _reduced_word(self, x: AffineElement) -> Word:
        """Canonical reduced word: repeatedly strip the smallest right descent."""
        letters: list[int] = []
        while x != self.identity:
            i = next(i for i in self.letters if self.is_right_descent(x, i))
            letters.append(i)
            x = self.rmul(x, i)
        return tuple(reversed(letters))

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length(self.from_word(word)) == len(word)

    def bruhat_leq(self, y: AffineElement, x: AffineElement) -> bool:
        """Subword test: scan a reduced word of ``x`` right to left, stripping
        the current letter from ``y`` whenever it is a right descent of ``y``."""
        if self.length(y) > self.length(x):
            return False
        for i in reversed(self.reduced_word(x)):
            if self.is_right_descent(y, i):
                y = self.rmul(y, i)
        return y == self.identity

    # --- enumeration ---------------------------------------------------------

    def ball(self, radius: int) -> list[AffineElement]:
        """All elements of length <= radius, ordered by (length, reduced word)."""
        layer = [self.identity]
        out = [self.identity]
        for n in range(radius):
            nxt = set()
            for x in layer:
                for i in self.letters:
                    if not self.is_right_descent(x, i):
                        nxt.add(self.rmul(x, i))
            layer = sorted(nxt, key=self.reduced_word)
            out.extend(layer)
        return out

    def format_word(self, word: Sequence[int]) -> str:
        return ",".join(str(i) for i in word)

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if not text:
            return ()
        try:
            word = tuple(int(t) for t in text.replace(" ", "").split(","))
        except ValueError as exc:
            raise InputError(f"bad word {text!r}") from exc
        for i in word:
            if i not in self.gens:
                raise InputError(f"letter {i} out of range 0..{self.rank}")
        return word


@lru_cache(maxsize=None)
def affine_weyl_group(type_tag: str) -> AffineWeylGroup:
    return AffineWeylGroup(build_root_datum(type_tag))
