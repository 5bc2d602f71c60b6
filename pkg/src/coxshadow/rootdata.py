"""Finite crystallographic root data.

Roots are stored in simple-root coordinates, coroots and all weights in
simple-coroot coordinates, so the pairing ``<root, coweight>`` is the
integer bilinear form ``a^T C v`` with ``C[i][j] = <alpha_i, alpha_j^vee>``.
Nothing in here uses floating point.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm, prod

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

SCHEMA_VERSION = "coxshadow.rootdata/1"


class ConfigurationError(ValueError):
    """Unknown or unsupported root datum."""


class PreconditionError(ValueError):
    """An operation was called outside of its domain."""


# Cartan matrices with C[i][j] = <alpha_i, alpha_j^vee>; alpha_1 is short in C2/G2.
_CARTAN: dict[str, list[list[int]]] = {
    "A1~": [[2]],
    "A2~": [[2, -1], [-1, 2]],
    "C2~": [[2, -1], [-2, 2]],
    "G2~": [[2, -1], [-3, 2]],
    "A3~": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
}

SUPPORTED_TAGS: tuple[str, ...] = tuple(_CARTAN)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _apply(m: Matrix, v: Weight) -> Weight:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FiniteWeyl:
    """The finite Weyl group W0, enumerated in BFS (shortlex) order.

    ``coweight_mats[w]`` acts on simple-coroot coordinates and
    ``root_perm[w][r]`` is the index of ``w(root r)`` in ``RootDatum.roots``.
    """

    coweight_mats: tuple[Matrix, ...]
    words: tuple[tuple[int, ...], ...]
    root_perm: tuple[tuple[int, ...], ...]
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    longest: int

    def __len__(self) -> int:
        return len(self.coweight_mats)

    def length(self, w: int) -> int:
        return len(self.words[w])

    @property
    def identity(self) -> int:
        return 0


@dataclass(frozen=True)
class RootDatum:
    type_tag: str
    cartan: Matrix
    positive_roots: tuple[Weight, ...]
    positive_coroots: tuple[Weight, ...]
    finite_weyl: FiniteWeyl = field(repr=False)
    # half-integral vectors are kept doubled
    rho2: Weight = ()
    rho_vee2: Weight = ()
    symmetrizer: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def n_pos(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        """Positive roots followed by their negatives (same order)."""
        return self.positive_roots + tuple(tuple(-a for a in r) for r in self.positive_roots)

    @cached_property
    def coroots(self) -> tuple[Weight, ...]:
        return self.positive_coroots + tuple(tuple(-a for a in r) for r in self.positive_coroots)

    @cached_property
    def root_forms(self) -> tuple[tuple[int, ...], ...]:
        """Row vectors ``a^T C`` so that ``<root r, v>`` is a dot product."""
        n = self.rank
        return tuple(
            tuple(sum(r[i] * self.cartan[i][j] for i in range(n)) for j in range(n))
            for r in self.roots
        )

    @property
    def theta_index(self) -> int:
        heights = [sum(r) for r in self.positive_roots]
        return heights.index(max(heights))

    @property
    def theta(self) -> Weight:
        return self.positive_roots[self.theta_index]

    @property
    def theta_vee(self) -> Weight:
        return self.positive_coroots[self.theta_index]

    @property
    def coxeter_number(self) -> int:
        return sum(self.theta) + 1

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @cached_property
    def simple_index(self) -> tuple[int, ...]:
        """Position of alpha_i in ``positive_roots`` (roots are sorted lexicographically)."""
        return tuple(
            self.positive_roots.index(tuple(int(i == j) for j in range(self.rank)))
            for i in range(self.rank)
        )

    def pair_simple(self, i: int, v: Weight) -> int:
        """``<alpha_i, v>`` for the i-th simple root (0-based)."""
        return sum(self.cartan[i][j] * v[j] for j in range(self.rank))

    def pair(self, root_index: int, v: Weight) -> int:
        form = self.root_forms[root_index]
        return sum(f * x for f, x in zip(form, v))

    def negate_root(self, r: int) -> int:
        return r + self.n_pos if r < self.n_pos else r - self.n_pos

    def rho_pair(self, v: Weight) -> int:
        """``<rho, v>``; an integer since ``<rho, alpha_i^vee> = 1``."""
        return sum(v)

    def act(self, w: int, v: Weight) -> Weight:
        return _apply(self.finite_weyl.coweight_mats[w], v)

    @cached_property
    def reflection_of_root(self) -> tuple[int, ...]:
        """W0 index of the reflection s_alpha for each positive root."""
        index = {m: k for k, m in enumerate(self.finite_weyl.coweight_mats)}
        n = self.rank
        out = []
        for r in range(self.n_pos):
            form = self.root_forms[r]
            cov = self.positive_coroots[r]
            # s_alpha(v) = v - <alpha, v> alpha^vee
            mat = tuple(
                tuple(int(i == j) - cov[i] * form[j] for j in range(n)) for i in range(n)
            )
            out.append(index[mat])
        return tuple(out)

    @cached_property
    def gram(self) -> Matrix:
        """Integral W0-invariant form on the coroot lattice (a positive multiple of
        ``(alpha_i^vee, alpha_j^vee)``)."""
        big = lcm(*self.symmetrizer)
        n = self.rank
        return tuple(
            tuple(self.cartan[i][j] * big // self.symmetrizer[i] for j in range(n))
            for i in range(n)
        )

    def form(self, u: Weight, v: Weight) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def to_json(self) -> dict:
        fw = self.finite_weyl
        return {
            "schema": SCHEMA_VERSION,
            "type_tag": self.type_tag,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
            "positive_coroots": [list(r) for r in self.positive_coroots],
            "rho_doubled": list(self.rho2),
            "rho_vee_doubled": list(self.rho_vee2),
            "theta": list(self.theta),
            "coxeter_number": self.coxeter_number,
            "weyl_order": len(fw),
            "longest_length": fw.length(fw.longest),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _symmetrizer(cartan: Matrix) -> tuple[int, ...]:
    """Integers d_i with C[i][j] * d_j symmetric, i.e. d_i = (alpha_i, alpha_i)/2."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                # C_ij d_j = C_ji d_i
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                queue.append(j)
    assert all(x is not None for x in d), "Cartan matrix must be irreducible"
    den = lcm(*(x.denominator for x in d))
    return tuple(int(x * den) for x in d)


def _simple_root_reflection(cartan: Matrix, i: int) -> Matrix:
    # s_i(a) = a - <a, alpha_i^vee> alpha_i on simple-root coordinates
    n = len(cartan)
    return tuple(
        tuple(int(r == c) - (cartan[c][i] if r == i else 0) for c in range(n))
        for r in range(n)
    )


def _simple_coweight_reflection(cartan: Matrix, i: int) -> Matrix:
    # s_i(v) = v - <alpha_i, v> alpha_i^vee on simple-coroot coordinates
    n = len(cartan)
    return tuple(
        tuple(int(r == c) - (cartan[i][c] if r == i else 0) for c in range(n))
        for r in range(n)
    )


def build_root_datum(type_tag: str) -> RootDatum:
    if type_tag not in _CARTAN:
        raise ConfigurationError(
            f"unknown type tag {type_tag!r}; supported: {', '.join(SUPPORTED_TAGS)}"
        )
    return _build(type_tag)


_CACHE: dict[str, RootDatum] = {}


def _build(type_tag: str) -> RootDatum:
    if type_tag in _CACHE:
        return _CACHE[type_tag]
    cartan: Matrix = tuple(tuple(row) for row in _CARTAN[type_tag])
    n = len(cartan)
    sym = _symmetrizer(cartan)
    root_refl = [_simple_root_reflection(cartan, i) for i in range(n)]
    cow_refl = [_simple_coweight_reflection(cartan, i) for i in range(n)]

    # close the simple roots under simple reflections
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for m in root_refl:
            s = _apply(m, r)
            if s not in seen:
                seen.add(s)
                queue.append(s)
    positive = tuple(sorted(r for r in seen if all(a >= 0 for a in r)))

    def norm(a: Weight) -> Fraction:
        # (alpha, alpha)/2 with (alpha_i, alpha_j) = C_ij d_j
        return Fraction(sum(a[i] * a[j] * cartan[i][j] * sym[j] for i in range(n) for j in range(n)), 2)

    coroots = []
    for a in positive:
        da = norm(a)
        c = tuple(Fraction(a[i] * sym[i]) / da for i in range(n))
        assert all(x.denominator == 1 for x in c)
        coroots.append(tuple(int(x) for x in c))
    positive_coroots = tuple(coroots)

    all_roots = positive + tuple(tuple(-a for a in r) for r in positive)
    root_index = {r: k for k, r in enumerate(all_roots)}

    # W0 by BFS on (coweight matrix, root matrix) pairs; shortlex words
    ident = _identity(n)
    mats = [ident]
    rmats = [ident]
    words: list[tuple[int, ...]] = [()]
    index = {ident: 0}
    k = 0
    while k < len(mats):
        for i in range(n):
            m = _matmul(mats[k], cow_refl[i])
            if m not in index:
                index[m] = len(mats)
                mats.append(m)
                rmats.append(_matmul(rmats[k], root_refl[i]))
                words.append(words[k] + (i + 1,))
        k += 1
    mult = tuple(tuple(index[_matmul(a, b)] for b in mats) for a in mats)
    inverse = tuple(row.index(0) for row in mult)
    root_perm = tuple(tuple(root_index[_apply(rm, r)] for r in all_roots) for rm in rmats)
    longest = max(range(len(mats)), key=lambda w: len(words[w]))

    rho2 = tuple(sum(r[i] for r in positive) for i in range(n))
    rho_vee2 = tuple(sum(r[i] for r in positive_coroots) for i in range(n))

    datum = RootDatum(
        type_tag=type_tag,
        cartan=cartan,
        positive_roots=positive,
        positive_coroots=positive_coroots,
        finite_weyl=FiniteWeyl(
            coweight_mats=tuple(mats),
            words=tuple(words),
            root_perm=root_perm,
            mult=mult,
            inverse=inverse,
            longest=longest,
        ),
        rho2=rho2,
        rho_vee2=rho_vee2,
        symmetrizer=sym,
    )
    _CACHE[type_tag] = datum
    return datum


# --- weights -----------------------------------------------------------------


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Weight) -> Weight:
    return tuple(k * a for a in v)


def is_dominant(datum: RootDatum, v: Weight) -> bool:
    return all(datum.pair_simple(i, v) >= 0 for i in range(datum.rank))


def dominant(datum: RootDatum, v: Weight) -> Weight:
    """The dominant element of ``W0 . v``."""
    v = tuple(v)
    while True:
        for i in range(datum.rank):
            p = datum.pair_simple(i, v)
            if p < 0:
                # s_i(v) = v - <alpha_i, v> alpha_i^vee, and alpha_i^vee = e_i here
                v = v[:i] + (v[i] - p,) + v[i + 1:]
                break
        else:
            return v


def dominance_leq(nu: Weight, lam: Weight) -> bool:
    """``nu <= lam``: ``lam - nu`` is a non-negative combination of simple coroots."""
    return all(b - a >= 0 for a, b in zip(nu, lam))


def weyl_orbit(datum: RootDatum, lam: Weight) -> frozenset[Weight]:
    return frozenset(datum.act(w, lam) for w in range(len(datum.finite_weyl)))


def weyl_dimension(datum: RootDatum, lam: Weight) -> int:
    # prod over alpha > 0 of <alpha, lam + rho^vee> / <alpha, rho^vee>, doubled to stay integral
    lam2 = tuple(2 * a + b for a, b in zip(lam, datum.rho_vee2))
    num = prod(datum.pair(r, lam2) for r in range(datum.n_pos))
    den = prod(datum.pair(r, datum.rho_vee2) for r in range(datum.n_pos))
    assert num % den == 0
    return num // den


def freudenthal_multiplicities(datum: RootDatum, lam: Weight) -> dict[Weight, int]:
    """Weight multiplicities of the irreducible dual-group module V(lam).

    Freudenthal's recursion over the dominant weights below ``lam``, with the
    coroots playing the role of roots. Independent of any gallery machinery.
    """
    lam = tuple(lam)
    if not is_dominant(datum, lam):
        raise PreconditionError(f"{lam} is not dominant")
    n = datum.rank
    rv2 = datum.rho_vee2

    # dominant weights nu <= lam, sorted by depth below lam
    dominants: list[Weight] = []
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        dominants.append(mu)
        for i in range(n):
            nxt = tuple(mu[j] - int(i == j) for j in range(n))
            if nxt in seen:
                continue
            seen.add(nxt)
            # nu <= lam and dominant(nu) <= lam bounds the search; keep only
            # weights whose dominant representative is still below lam
            if dominance_leq(dominant(datum, nxt), lam):
                queue.append(nxt)
    dominants = sorted({d for d in dominants if is_dominant(datum, d)}, key=lambda d: (sum(lam) - sum(d), d))

    mult: dict[Weight, int] = {}

    def m(nu: Weight) -> int:
        d = dominant(datum, nu)
        if not dominance_leq(d, lam):
            return 0
        return mult.get(d, 0)

    def norm2(v2: Weight) -> int:
        return datum.form(v2, v2)

    lam_rho = tuple(2 * a + b for a, b in zip(lam, rv2))
    top = norm2(lam_rho)
    for mu in dominants:
        if mu == lam:
            mult[mu] = 1
            continue
        mu_rho = tuple(2 * a + b for a, b in zip(mu, rv2))
        lhs = top - norm2(mu_rho)  # 4 * ((lam+rho, lam+rho) - (mu+rho, mu+rho))
        total = 0
        for beta in datum.positive_coroots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, beta))
                mnu = m(nu)
                if mnu == 0 and not dominance_leq(dominant(datum, nu), lam):
                    break
                total += datum.form(nu, beta) * mnu
                k += 1
        # (lhs / 4) m = 2 * total
        assert (8 * total) % lhs == 0, (mu, total, lhs)
        mult[mu] = 8 * total // lhs

    out: dict[Weight, int] = {}
    for d, k in mult.items():
        if k:
            for nu in weyl_orbit(datum, d):
                out[nu] = k
    assert sum(out.values()) == weyl_dimension(datum, lam)
    return dict(sorted(out.items()))


def convex_hull_membership(datum: RootDatum, nu: Weight, lam: Weight) -> bool:
    """Whether ``nu`` lies in the convex hull of ``W0 . lam`` (lam dominant).

    The hull is the intersection of the half-spaces ``<w omega_i, v> <= <omega_i, lam>``
    over ``w`` in W0 and fundamental weights ``omega_i``. In coroot coordinates
    ``<omega_i, v>`` is just ``v_i``.
    """
    for w in range(len(datum.finite_weyl)):
        wnu = datum.act(w, nu)
        if any(a > b for a, b in zip(wnu, lam)):
            return False
    return True
