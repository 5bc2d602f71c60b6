"""Gallery criteria for double cosets and affine Deligne-Lusztig varieties.

Only pure translations ``b = t^mu`` are handled and the Frobenius acts
trivially on the affine Weyl group. For a direction ``u`` in W0 the coset
``^uU^- z I`` meets ``I x I`` iff ``z`` lies in the shadow of ``x`` for the
chamber orientation ``AtInfinity(u)``; its dimension is the largest number of
load-bearing panels of such a gallery.

Dimensions are reported raw: the additive constant depending on ``mu`` is not
determined here, so ``offset_policy`` only records how it was handled.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .affineweyl import AffineElement, AffineWeylGroup, Word
from .orientations import AtInfinity, side
from .rootdata import PreconditionError, Weight, dominant
from .shadows import RecursiveShadows, frontier

OFFSET_POLICY = "report-only"


class EmptyIntersectionError(PreconditionError):
    """The requested double-coset intersection is empty."""


class ConsistencyError(AssertionError):
    """Recursive and brute-force shadows disagree."""


def threads() -> int:
    try:
        return max(1, int(os.environ.get("COXSHADOW_THREADS", "1")))
    except ValueError:
        return 1


class AdlvContext:
    """Memoised shadows of one group, shared across coset queries."""

    def __init__(self, W: AffineWeylGroup, check: bool = True):
        self.W = W
        self.check = check
        self.rec = RecursiveShadows(W, "R")
        self._brute: dict[tuple[AffineElement, int], frozenset[AffineElement]] = {}

    def brute(self, x: AffineElement, u: int) -> frozenset[AffineElement]:
        key = (x, u)
        if key not in self._brute:
            self._brute[key] = frozenset(frontier(self.W, self.W.reduced_word(x), AtInfinity(u)))
        return self._brute[key]

    def shadow(self, x: AffineElement, u: int) -> frozenset[AffineElement]:
        got = self.rec(x, AtInfinity(u))
        if self.check and got != self.brute(x, u):
            raise ConsistencyError(f"shadow mismatch at x={self.W.reduced_word(x)} u={u}")
        return got


def coset_nonempty(
    W: AffineWeylGroup, x: AffineElement, z: AffineElement, u: int, ctx: AdlvContext | None = None
) -> bool:
    ctx = AdlvContext(W) if ctx is None else ctx
    return z in ctx.shadow(x, u)


@dataclass(frozen=True)
class CosetDim:
    dim: int
    fold_mask: frozenset[int]


def coset_dim_witness(W: AffineWeylGroup, x: AffineElement, z: AffineElement, u: int) -> CosetDim:
    """Max load-bearing panels over AtInfinity(u)-positively folded galleries
    of type ``reduced_word(x)`` from the fundamental alcove ending at ``z``.

    Dynamic programme over panels keyed by the current alcove; ties keep the
    first mask found, which is deterministic since the sweep order is.
    """
    o = AtInfinity(u)
    word = W.reduced_word(x)
    best: dict[AffineElement, tuple[int, tuple[int, ...]]] = {W.identity: (0, ())}
    for i, s in enumerate(word, start=1):
        nxt: dict[AffineElement, tuple[int, tuple[int, ...]]] = {}
        for a, (dim, mask) in best.items():
            hp = W.wall_between(a, s)
            here = side(W, o, hp, a)
            b = W.rmul(a, s)
            # crossing lands on the side opposite to a
            cand = [(b, dim + (here == -1), mask)]
            if here == 1:
                cand.append((a, dim + 1, mask + (i,)))
            for c, k, m in cand:
                if c not in nxt or nxt[c][0] < k:
                    nxt[c] = (k, m)
        best = nxt
    if z not in best:
        raise EmptyIntersectionError(f"{W.reduced_word(z)} is not in the shadow of {word} for u={u}")
    k, m = best[z]
    return CosetDim(k, frozenset(m))


def coset_dim(W: AffineWeylGroup, x: AffineElement, z: AffineElement, u: int) -> int:
    return coset_dim_witness(W, x, z, u).dim


@dataclass(frozen=True)
class DirectionResult:
    nonempty: bool
    max_gallery_dim: int | None = None
    fold_mask: frozenset[int] | None = None


@dataclass(frozen=True)
class AdlvReport:
    x: AffineElement
    mu: Weight
    per_direction: dict[int, DirectionResult] = field(compare=False)
    nonempty: bool
    raw_dim: int | None
    witness: int | None
    offset_policy: str = OFFSET_POLICY

    def to_json(self, W: AffineWeylGroup) -> dict:
        fw = W.datum.finite_weyl
        return {
            "x": list(W.reduced_word(self.x)),
            "mu": list(self.mu),
            "nonempty": self.nonempty,
            "raw_dim": self.raw_dim,
            "witness_u": None if self.witness is None else list(fw.words[self.witness]),
            "offset_policy": self.offset_policy,
            "per_direction": [
                {
                    "u": list(fw.words[u]),
                    "nonempty": r.nonempty,
                    "max_gallery_dim": r.max_gallery_dim,
                }
                for u, r in sorted(self.per_direction.items())
            ],
        }


def adlv_nonempty(
    W: AffineWeylGroup, x: AffineElement, mu: Weight, ctx: AdlvContext | None = None
) -> AdlvReport:
    """Test ``z = t^{u mu}`` against the ``AtInfinity(u)`` shadow of ``x`` for every ``u``."""
    ctx = AdlvContext(W) if ctx is None else ctx
    d = W.datum
    mu = tuple(mu)
    if len(mu) != d.rank:
        raise PreconditionError(f"mu must have {d.rank} coordinates")
    per: dict[int, DirectionResult] = {}
    for u in range(len(d.finite_weyl)):
        z = W.translation(d.act(u, mu))
        if coset_nonempty(W, x, z, u, ctx):
            cd = coset_dim_witness(W, x, z, u)
            per[u] = DirectionResult(True, cd.dim, cd.fold_mask)
        else:
            per[u] = DirectionResult(False)
    hits = [(r.max_gallery_dim, -u) for u, r in per.items() if r.nonempty]
    if not hits:
        return AdlvReport(x, mu, per, False, None, None)
    dim, neg_u = max(hits)
    return AdlvReport(x, mu, per, True, dim, -neg_u)


def adlv_dim_raw(W: AffineWeylGroup, x: AffineElement, mu: Weight) -> int | None:
    return adlv_nonempty(W, x, mu).raw_dim


def _fmt_word(w: Word) -> str:
    # "e" keeps the identity distinguishable from a missing value
    return " ".join(map(str, w)) if w else "e"


@dataclass(frozen=True)
class TableRow:
    word: Word
    length: int
    nonempty: bool
    raw_dim: int | None
    witness_u: Word | None
    witness_mask: tuple[int, ...] | None

    def csv(self) -> str:
        return ",".join([
            _fmt_word(self.word),
            str(self.length),
            str(self.nonempty).lower(),
            "" if self.raw_dim is None else str(self.raw_dim),
            "" if self.witness_u is None else _fmt_word(self.witness_u),
            " ".join(map(str, self.witness_mask or ())),
        ])


CSV_HEADER = "word,length,nonempty,raw_dim,witness_u,witness_mask"


def adlv_table(W: AffineWeylGroup, radius: int, mu: Weight, workers: int | None = None) -> list[TableRow]:
    """One row per element of the length ball, in (length, reduced word) order."""
    fw = W.datum.finite_weyl
    xs = W.ball(radius)
    # warm the word cache single-threaded so workers only read it
    for x in xs:
        W.reduced_word(x)

    def row(x: AffineElement) -> TableRow:
        rep = adlv_nonempty(W, x, mu)
        mask = None
        if rep.witness is not None:
            mask = tuple(sorted(rep.per_direction[rep.witness].fold_mask))
        return TableRow(
            W.reduced_word(x),
            W.length(x),
            rep.nonempty,
            rep.raw_dim,
            None if rep.witness is None else fw.words[rep.witness],
            mask,
        )

    n = threads() if workers is None else workers
    if n <= 1:
        return [row(x) for x in xs]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(row, xs))


@dataclass(frozen=True)
class MstReport:
    applicable: bool
    residual: int | None
    raw_mu: int | None
    raw_zero: int | None
    rho_mu_plus: int

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "residual": self.residual,
            "raw_dim_mu": self.raw_mu,
            "raw_dim_zero": self.raw_zero,
            "rho_mu_plus": self.rho_mu_plus,
        }


def mst_relation_report(W: AffineWeylGroup, x: AffineElement, mu: Weight) -> MstReport:
    """Residual ``raw(x, mu) - raw(x, 0) + <rho, mu+>``. Diagnostic only."""
    d = W.datum
    rho_mu = d.rho_pair(dominant(d, tuple(mu)))
    a = adlv_nonempty(W, x, mu)
    b = adlv_nonempty(W, x, d.zero)
    if not (a.nonempty and b.nonempty):
        return MstReport(False, None, a.raw_dim, b.raw_dim, rho_mu)
    return MstReport(True, a.raw_dim - b.raw_dim + rho_mu, a.raw_dim, b.raw_dim, rho_mu)
