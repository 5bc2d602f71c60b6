"""Deterministic SVG pictures of rank 1 and rank 2 Coxeter complexes.

Alcove corners are computed exactly in coroot coordinates and only then
embedded in the plane through a Cholesky factor of the invariant form, so
chamber walls meet at their true angles. This module is the only place where
floating point appears.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .affineweyl import AffineElement, AffineWeylGroup
from .rootdata import Weight


class UnsupportedRender(ValueError):
    pass


DEFAULT_STYLES = {
    "base": "#ffffff",
    "shadow": "#f4a261",
    "element": "#264653",
    "nonempty": "#2a9d8f",
    "hull": "#e9c46a",
}

SCALE = 60.0


@dataclass(frozen=True)
class RenderSpec:
    type_tag: str
    radius: int
    highlight: dict[str, frozenset[AffineElement]] = field(default_factory=dict)
    vertices: dict[str, frozenset[Weight]] = field(default_factory=dict)
    styles: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_STYLES))


def fundamental_corners(W: AffineWeylGroup) -> list[tuple[Fraction, ...]]:
    """Vertices of the fundamental alcove in coroot coordinates."""
    d = W.datum
    if d.rank == 1:
        # 0 < <alpha, v> < 1
        return [(Fraction(0),), (Fraction(1, d.cartan[0][0]),)]
    if d.rank != 2:
        raise UnsupportedRender("only rank 1 and rank 2 complexes are drawn")
    theta = d.root_forms[d.theta_index]
    out = [(Fraction(0), Fraction(0))]
    for i in range(2):
        j = 1 - i
        # <alpha_j, v> = 0 and <theta, v> = 1
        a, b = d.cartan[j]
        c, e = theta
        det = a * e - b * c
        out.append((Fraction(-b, det), Fraction(a, det)))
    return out


class Embedding:
    def __init__(self, W: AffineWeylGroup):
        self.W = W
        gram = np.array(W.datum.gram, dtype=float)
        self.L = np.linalg.cholesky(gram)
        self.corners = fundamental_corners(W)

    def point(self, v) -> tuple[float, float]:
        y = self.L.T @ np.array([float(c) for c in v])
        if len(y) == 1:
            return (float(y[0]), 0.0)
        return (float(y[0]), float(y[1]))

    def alcove(self, x: AffineElement) -> list[tuple[float, float]]:
        pts = [self.point(self.W.act_point(x, c)) for c in self.corners]
        if len(pts) == 2:
            (a, _), (b, _) = pts
            h = 0.08
            return [(a, -h), (b, -h), (b, h), (a, h)]
        return pts


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(W: AffineWeylGroup, spec: RenderSpec) -> str:
    if W.rank > 2:
        raise UnsupportedRender("only rank 1 and rank 2 complexes are drawn")
    emb = Embedding(W)
    alcoves = W.ball(spec.radius)
    polys = []
    for x in alcoves:
        cls = next((c for c, s in spec.highlight.items() if x in s), "base")
        pts = [(SCALE * a, -SCALE * b) for a, b in emb.alcove(x)]
        polys.append((cls, pts))
    dots = []
    for cls, vs in spec.vertices.items():
        for v in sorted(vs):
            a, b = emb.point(v)
            dots.append((cls, (SCALE * a, -SCALE * b)))

    xs = [p[0] for _, pts in polys for p in pts] + [p[0] for _, p in dots]
    ys = [p[1] for _, pts in polys for p in pts] + [p[1] for _, p in dots]
    pad = 10.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f"<title>{spec.type_tag} radius {spec.radius}</title>",
    ]
    for cls, pts in polys:
        fill = spec.styles.get(cls, DEFAULT_STYLES["base"])
        path = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in pts)
        out.append(
            f'<polygon class="{cls}" points="{path}" fill="{fill}" stroke="#555" stroke-width="0.5"/>'
        )
    for cls, (a, b) in dots:
        fill = spec.styles.get(cls, "#000")
        out.append(f'<circle class="{cls}" cx="{_fmt(a)}" cy="{_fmt(b)}" r="3" fill="{fill}" stroke="#000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
