"""The (q+1)-regular tree as the rank-1 affine building, with both retractions.

Vertices are integers in breadth-first order from the origin (vertex 0). The
base apartment is the path of vertices with positions ``-R..R``; the base
alcove is the edge between positions 0 and 1. Retractions are computed from
graph distances and merge points: in a tree the apartment through two
simplices is fixed by the geodesic between them, so this agrees with the
apartment-by-apartment definition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .rootdata import ConfigurationError


@dataclass(frozen=True)
class TreeBall:
    q: int
    radius: int
    parent: tuple[int | None, ...]
    depth: tuple[int, ...]
    position: tuple[int | None, ...]

    def __len__(self) -> int:
        return len(self.parent)

    @property
    def types(self) -> tuple[int, ...]:
        return tuple(d % 2 for d in self.depth)

    def vertex_at(self, p: int) -> int:
        return self.position.index(p)

    def sphere(self, n: int) -> list[int]:
        return [v for v, d in enumerate(self.depth) if d == n]

    def neighbours(self, v: int) -> list[int]:
        out = [] if self.parent[v] is None else [self.parent[v]]
        out.extend(w for w, p in enumerate(self.parent) if p == v)
        return out

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def distance(self, u: int, v: int) -> int:
        au = self.path_to_root(u)
        seen = {w: i for i, w in enumerate(au)}
        for j, w in enumerate(self.path_to_root(v)):
            if w in seen:
                return seen[w] + j
        raise AssertionError("tree is disconnected")


def build_ball(q: int, R: int) -> TreeBall:
    if q < 2:
        raise ConfigurationError("q must be at least 2")
    if R < 0:
        raise ConfigurationError("radius must be non-negative")
    parent: list[int | None] = [None]
    depth = [0]
    position: list[int | None] = [0]
    layer = [0]
    for n in range(1, R + 1):
        nxt = []
        for v in layer:
            kids: list[int | None] = []
            p = position[v]
            if p is None:
                kids = [None] * q
            elif p == 0:
                kids = [1, -1] + [None] * (q - 1)
            else:
                kids = [p + (1 if p > 0 else -1)] + [None] * (q - 1)
            for pos in kids:
                parent.append(v)
                depth.append(n)
                position.append(pos)
                nxt.append(len(parent) - 1)
        layer = nxt
    return TreeBall(q, R, tuple(parent), tuple(depth), tuple(position))


def retract_to_alcove(t: TreeBall, v: int) -> int:
    """The position ``m`` with ``|m| = d(v, 0)`` and ``|m - 1| = d(v, 1)``."""
    d0 = t.distance(v, t.vertex_at(0))
    if t.radius == 0:
        return 0
    d1 = t.distance(v, t.vertex_at(1))
    # d1 - d0 is +1 on the side of 0 and -1 on the side of 1
    m = -d0 if d1 > d0 else d0
    assert abs(m) == d0 and abs(m - 1) == d1
    return m


def merge_vertex(t: TreeBall, v: int) -> int:
    """Where the ray from ``v`` towards the minus end meets the base apartment."""
    for w in t.path_to_root(v):
        if t.position[w] is not None:
            return w
    raise AssertionError("origin lies on the apartment")


def retract_to_infinity(t: TreeBall, v: int) -> int:
    m = merge_vertex(t, v)
    return t.position[m] + t.distance(v, m)


@dataclass(frozen=True)
class TreeConvexity:
    q: int
    n: int
    preimage_is_sphere: bool
    sphere_size: int
    image: tuple[int, ...]
    fibers: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.preimage_is_sphere and self.image == tuple(range(-self.n, self.n + 1, 2))

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "sphere_size": self.sphere_size,
            "preimage_is_sphere": self.preimage_is_sphere,
            "image": list(self.image),
            "fiber_sizes": list(self.fibers),
            "ok": self.ok,
        }


def convexity_check(t: TreeBall, n: int) -> TreeConvexity:
    if not 0 <= n <= t.radius:
        raise ConfigurationError(f"n must lie in 0..{t.radius}")
    pre = [v for v in range(len(t)) if abs(retract_to_alcove(t, v)) == n]
    fib = Counter(retract_to_infinity(t, v) for v in pre)
    image = tuple(sorted(fib))
    return TreeConvexity(
        t.q, n, sorted(pre) == t.sphere(n), len(pre), image, tuple(fib[p] for p in image)
    )


def to_dot(t: TreeBall) -> str:
    lines = ["graph tree {"]
    for v in range(len(t)):
        pos = t.position[v]
        label = f"p{pos}" if pos is not None else f"v{v}"
        attrs = f'label="{label}\\nrc={retract_to_alcove(t, v)} rinf={retract_to_infinity(t, v)}"'
        if pos is not None:
            attrs += " shape=box"
        lines.append(f"  {v} [{attrs}];")
    for v, p in enumerate(t.parent):
        if p is not None:
            lines.append(f"  {p} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
