"""SVG figures of colored arrangements, curves and points.

This is the only module that converts to floating point.  Nothing in the
verifiers reads its output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyViewport
from .polyring import HomogPoly, dehomogenize
from .projgeom import ProjLine, ProjPoint

RED = "#cc0000"
BLUE = "#0044cc"
GREEN = "#00aa44"
CURVE = "#222222"


@dataclass(frozen=True)
class Viewport:
    xmin: float = -5.0
    xmax: float = 5.0
    ymin: float = -5.0
    ymax: float = 5.0
    width: int = 600
    height: int = 600
    resolution: int = 256

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise EmptyViewport(f"empty window [{self.xmin},{self.xmax}]x[{self.ymin},{self.ymax}]")
        if self.resolution < 16:
            raise EmptyViewport("resolution must be at least 16")
        if self.width <= 0 or self.height <= 0:
            raise EmptyViewport("pixel size must be positive")

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        px = (x - self.xmin) / (self.xmax - self.xmin) * self.width
        py = (self.ymax - y) / (self.ymax - self.ymin) * self.height
        return px, py

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    @property
    def cell(self) -> tuple[float, float]:
        return ((self.xmax - self.xmin) / self.resolution,
                (self.ymax - self.ymin) / self.resolution)


def clip_line(l: ProjLine, vp: Viewport) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """Segment of the affine line ``a x + b y + c = 0`` inside the window."""
    a, b, c = (float(t) for t in l.coords)
    if a == 0 and b == 0:
        return None  # line at infinity
    pts = []
    if b != 0:
        for x in (vp.xmin, vp.xmax):
            y = -(a * x + c) / b
            if vp.ymin <= y <= vp.ymax:
                pts.append((x, y))
    if a != 0:
        for y in (vp.ymin, vp.ymax):
            x = -(b * y + c) / a
            if vp.xmin <= x <= vp.xmax:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def _poly_eval_fn(f: HomogPoly):
    terms = [(i, j, float(c)) for (i, j), c in dehomogenize(f).items()]

    def fn(x: float, y: float) -> float:
        return sum(c * x ** i * y ** j for i, j, c in terms)
    return fn


def trace_curve(f: HomogPoly, vp: Viewport) -> list[list[tuple[float, float]]]:
    """Marching squares on the affine chart ``z = 1``; returns polylines.

    Crossing points live on grid edges, keyed by the edge, so segments from
    neighbouring cells are chained without any float comparison.
    """
    fn = _poly_eval_fn(f)
    n = vp.resolution
    dx, dy = vp.cell
    xs = [vp.xmin + i * dx for i in range(n + 1)]
    ys = [vp.ymin + j * dy for j in range(n + 1)]
    val = [[fn(x, y) for x in xs] for y in ys]  # val[j][i]

    def sign(v: float) -> bool:
        return v > 0

    def crossing(key):
        (i0, j0), (i1, j1) = key
        v0, v1 = val[j0][i0], val[j1][i1]
        t = v0 / (v0 - v1) if v0 != v1 else 0.5
        return (xs[i0] + t * (xs[i1] - xs[i0]), ys[j0] + t * (ys[j1] - ys[j0]))

    adj: dict = {}
    for j in range(n):
        for i in range(n):
            corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            edges = [(corners[k], corners[(k + 1) % 4]) for k in range(4)]
            hits = []
            for e in edges:
                (a0, b0), (a1, b1) = e
                if sign(val[b0][a0]) != sign(val[b1][a1]):
                    hits.append(tuple(sorted(e)))
            if len(hits) == 2:
                pairs = [(hits[0], hits[1])]
            elif len(hits) == 4:
                # saddle: decide by the cell-centre value
                centre = fn(xs[i] + dx / 2, ys[j] + dy / 2)
                if sign(centre) == sign(val[j][i]):
                    pairs = [(hits[0], hits[1]), (hits[2], hits[3])]
                else:
                    pairs = [(hits[0], hits[3]), (hits[1], hits[2])]
            else:
                pairs = []
            for u, v in pairs:
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)

    seen_edges = set()
    lines = []
    for start in sorted(adj, key=lambda k: (len(adj[k]), k)):
        for nxt in adj[start]:
            if frozenset((start, nxt)) in seen_edges:
                continue
            path = [start]
            prev, cur = start, nxt
            seen_edges.add(frozenset((prev, cur)))
            path.append(cur)
            while True:
                options = [w for w in adj[cur] if frozenset((cur, w)) not in seen_edges]
                if not options:
                    break
                prev, cur = cur, options[0]
                seen_edges.add(frozenset((prev, cur)))
                path.append(cur)
            lines.append([crossing(k) for k in path])
    return lines


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_scene(arr=None, curve: HomogPoly | None = None,
                 pts: Iterable[ProjPoint] = (), vp: Viewport | None = None,
                 title: str | None = None) -> str:
    """Deterministic SVG 1.1 text for an arrangement, a curve and marked points."""
    vp = vp or Viewport()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vp.width}" '
        f'height="{vp.height}" viewBox="0 0 {vp.width} {vp.height}">',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append('<rect x="0" y="0" width="100%" height="100%" fill="white"/>')
    # axes as paths so that <line> elements count arrangement lines only
    ax = []
    if vp.ymin <= 0 <= vp.ymax:
        (x0, y0), (x1, y1) = vp.to_px(vp.xmin, 0), vp.to_px(vp.xmax, 0)
        ax.append(f"M {_fmt(x0)} {_fmt(y0)} L {_fmt(x1)} {_fmt(y1)}")
    if vp.xmin <= 0 <= vp.xmax:
        (x0, y0), (x1, y1) = vp.to_px(0, vp.ymin), vp.to_px(0, vp.ymax)
        ax.append(f"M {_fmt(x0)} {_fmt(y0)} L {_fmt(x1)} {_fmt(y1)}")
    if ax:
        out.append(f'<path class="axes" d="{" ".join(ax)}" stroke="#bbbbbb" stroke-width="1" fill="none"/>')

    notes = []
    if arr is not None:
        groups: list[tuple[str, str, Sequence[ProjLine]]] = [
            ("red", RED, arr.red), ("blue", BLUE, arr.blue), ("green", GREEN, [arr.green])]
        for name, color, lines in groups:
            for idx, l in enumerate(lines):
                seg = clip_line(l, vp)
                if seg is None:
                    notes.append(f"{name} line {idx} ({l}) not drawn: outside window or at infinity")
                    continue
                (x0, y0), (x1, y1) = vp.to_px(*seg[0]), vp.to_px(*seg[1])
                out.append(f'<line class="{name}" x1="{_fmt(x0)}" y1="{_fmt(y0)}" '
                           f'x2="{_fmt(x1)}" y2="{_fmt(y1)}" stroke="{color}" stroke-width="1.5"/>')

    if curve is not None:
        for poly in trace_curve(curve, vp):
            coords = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in (vp.to_px(*p) for p in poly))
            out.append(f'<polyline class="curve" points="{coords}" stroke="{CURVE}" '
                       f'stroke-width="1.5" fill="none"/>')

    for p in pts:
        if p.at_infinity:
            notes.append(f"point {list(p.coords)} at infinity not drawn")
            continue
        x, y = (float(t) for t in p.affine())
        if not vp.contains(x, y):
            notes.append(f"point {list(p.coords)} outside window")
            continue
        cx, cy = vp.to_px(x, y)
        out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="black"/>')

    for note in notes:
        out.append(f"<!-- {note} -->")
    out.append("</svg>")
    return "\n".join(out) + "\n"
