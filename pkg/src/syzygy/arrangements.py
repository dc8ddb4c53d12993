"""Colored line arrangements and the incidence-theorem verifiers.

Every verifier recomputes the genericity conditions it needs before it
asserts anything, and raises :class:`~syzygy.errors.TheoremViolation` when an
exact computation disagrees with the theorem.

Polygon convention: for vertices ``v_0 .. v_{2k-1}`` edge ``i`` is
``join(v_i, v_{i+1 mod 2k})`` and is red when ``i`` is even, blue when odd.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .curvefit import PointSet, unique_curve_through
from .errors import (
    BadOnConicCount,
    DegenerateArrangement,
    DegenerateInput,
    IdenticalLines,
    IdenticalPoints,
    InputError,
    NotGeneric,
    PointsNotOnConic,
    TheoremViolation,
)
from .linalg import to_rational
from .polyring import HomogPoly, evaluate
from .projgeom import (
    PARABOLA,
    Conic,
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    conic_point,
    incident,
    join,
    meet,
)

CONFIRMED = "confirmed"
VIOLATED = "violated"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"


@dataclass(frozen=True)
class ColoredArrangement:
    """``k`` red and ``k`` blue lines with ``red[i] ∩ blue[i]`` on ``green``."""

    red: tuple[ProjLine, ...]
    blue: tuple[ProjLine, ...]
    green: ProjLine
    k: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "red", tuple(self.red))
        object.__setattr__(self, "blue", tuple(self.blue))
        if len(self.red) != len(self.blue):
            raise DegenerateArrangement(
                f"{len(self.red)} red lines but {len(self.blue)} blue lines")
        object.__setattr__(self, "k", len(self.red))
        lines = [("green", 0, self.green)]
        lines += [("red", i, l) for i, l in enumerate(self.red)]
        lines += [("blue", i, l) for i, l in enumerate(self.blue)]
        for (c1, i1, l1), (c2, i2, l2) in combinations(lines, 2):
            if l1 == l2:
                raise DegenerateArrangement(f"{c1}[{i1}] and {c2}[{i2}] are the same line {l1}")
        triples = self.triple_points()
        for i, p in enumerate(triples):
            if not incident(p, self.green):
                raise DegenerateArrangement(f"red[{i}] and blue[{i}] do not meet on the green line")
        for i, j in combinations(range(self.k), 2):
            if triples[i] == triples[j]:
                raise DegenerateArrangement(f"triple points {i} and {j} coincide at {triples[i]!r}")

    def triple_points(self) -> list[ProjPoint]:
        return [meet(r, b) for r, b in zip(self.red, self.blue)]

    def crossings(self) -> list[tuple[int, int, ProjPoint]]:
        """All off-diagonal red/blue crossings ``(i, j, red[i] ∩ blue[j])``, ``i != j``."""
        return [(i, j, meet(self.red[i], self.blue[j]))
                for i in range(self.k) for j in range(self.k) if i != j]

    @property
    def generic(self) -> bool:
        pts = [p for _, _, p in self.crossings()]
        if len(set(pts)) != len(pts):
            return False
        return not any(incident(p, self.green) for p in pts)

    def swapped(self) -> ColoredArrangement:
        return ColoredArrangement(self.blue, self.red, self.green)

    def to_json(self) -> dict:
        return {"k": self.k, "green": self.green.to_json(),
                "red": [l.to_json() for l in self.red],
                "blue": [l.to_json() for l in self.blue]}

    @classmethod
    def from_json(cls, data) -> ColoredArrangement:
        try:
            red = [ProjLine.from_json(l) for l in data["red"]]
            blue = [ProjLine.from_json(l) for l in data["blue"]]
            green = ProjLine.from_json(data["green"])
            k = data.get("k", len(red))
        except (KeyError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed arrangement: {exc!r}") from None
        if k != len(red):
            raise InputError(f"k = {k} but {len(red)} red lines given")
        return cls(red, blue, green)


def make_arrangement(green: ProjLine, triple_pts: Sequence[ProjPoint],
                     red_dirs: Sequence[ProjPoint], blue_dirs: Sequence[ProjPoint]) -> ColoredArrangement:
    """Red line ``i`` joins triple point ``i`` to ``red_dirs[i]``; likewise blue."""
    k = len(triple_pts)
    if len(red_dirs) != k or len(blue_dirs) != k:
        raise DegenerateArrangement("need one red and one blue direction point per triple point")
    for i, p in enumerate(triple_pts):
        if not incident(p, green):
            raise DegenerateArrangement(f"triple point {i} {p!r} is not on the green line")
    for i, j in combinations(range(k), 2):
        if triple_pts[i] == triple_pts[j]:
            raise DegenerateArrangement(f"triple points {i} and {j} coincide")
    for name, dirs in (("red", red_dirs), ("blue", blue_dirs)):
        for i, q in enumerate(dirs):
            if incident(q, green):
                raise DegenerateArrangement(f"{name} direction point {i} lies on the green line")
    red = [join(p, q) for p, q in zip(triple_pts, red_dirs)]
    blue = [join(p, q) for p, q in zip(triple_pts, blue_dirs)]
    return ColoredArrangement(red, blue, green)


def offgreen_points(arr: ColoredArrangement, allow_coincident: bool = False) -> PointSet:
    """The distinct red/blue crossings off the green line.

    A generic arrangement gives exactly ``k^2 - k`` of them.  With
    ``allow_coincident`` an arrangement whose only defect is coincident
    crossings (three or more lines through a point) is accepted and the
    distinct crossing points are returned.
    """
    if not arr.generic:
        pts = [p for _, _, p in arr.crossings()]
        if not allow_coincident or any(incident(p, arr.green) for p in pts):
            raise NotGeneric("off-green crossings are not distinct, or one lies on the green line")
    return PointSet(p for _, _, p in arr.crossings())


def construct_curve(arr: ColoredArrangement, allow_coincident: bool = False) -> HomogPoly:
    """The unique degree ``k-1`` curve through the off-green crossings.

    ``NoCurve``/``NotUnique`` propagate: for a generic arrangement either one
    contradicts the theorem being exercised.
    """
    if arr.k < 2:
        raise InputError("need k >= 2")
    pts = offgreen_points(arr, allow_coincident)
    curve = unique_curve_through(pts, arr.k - 1)
    bad = [p for p in pts if evaluate(curve, p) != 0]
    if bad:
        raise TheoremViolation(f"constructed curve misses {bad[0]!r}")
    return curve


def random_arrangement(k: int, rng: random.Random, bound: int = 9,
                       max_tries: int = 1000) -> ColoredArrangement:
    """A random generic arrangement with small integer data."""
    for _ in range(max_tries):
        g = [rng.randint(-bound, bound) for _ in range(3)]
        if not any(g):
            continue
        green = ProjLine(g)
        try:
            triples = []
            for _ in range(k):
                cut = [rng.randint(-bound, bound) for _ in range(3)]
                if not any(cut):
                    raise DegenerateArrangement("zero line")
                triples.append(meet(green, ProjLine(cut)))
            dirs = [_random_point(rng, bound) for _ in range(2 * k)]
            arr = make_arrangement(green, triples, dirs[:k], dirs[k:])
        except InputError:
            continue
        if arr.generic:
            return arr
    raise DegenerateArrangement(f"no generic arrangement found in {max_tries} tries")


def _random_point(rng: random.Random, bound: int) -> ProjPoint:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(3)]
        if any(v):
            return ProjPoint(v)


# -- hexagon theorems -----------------------------------------------------

def _opposite_side_points(v: Sequence[ProjPoint]) -> list[ProjPoint]:
    """Meets of opposite sides ``v_i v_{i+1}`` and ``v_{i+3} v_{i+4}`` of a hexagon."""
    sides = [join(v[i], v[(i + 1) % 6]) for i in range(6)]
    return [meet(sides[i], sides[i + 3]) for i in range(3)]


def _hexagon_line(v: Sequence[ProjPoint], what: str) -> ProjLine:
    try:
        pts = _opposite_side_points(v)
    except (IdenticalPoints, IdenticalLines) as exc:
        raise DegenerateInput(f"degenerate hexagon: {exc}") from None
    if any(p in v for p in pts):
        raise DegenerateInput("a constructed point coincides with a vertex")
    if len(set(pts)) < 3:
        raise DegenerateInput("the three constructed points are not distinct")
    if not collinear(pts):
        raise TheoremViolation(f"{what}: points {pts} are not collinear")
    return join(pts[0], pts[1])


def pappus_check(A: ProjPoint, B: ProjPoint, C: ProjPoint,
                 a: ProjPoint, b: ProjPoint, c: ProjPoint) -> ProjLine:
    """``Aa ∩ bC``, ``aB ∩ Cc`` and ``Bb ∩ cA`` are collinear; returns their line."""
    big, small = [A, B, C], [a, b, c]
    six = big + small
    if len(set(six)) != 6:
        raise DegenerateInput("the six points must be distinct")
    if not collinear(big) or not collinear(small):
        raise DegenerateInput("each triple must be collinear")
    if join(A, B) == join(a, b):
        raise DegenerateInput("the two triples lie on the same line")
    l1, l2 = join(A, B), join(a, b)
    if any(incident(p, l2) for p in big) or any(incident(p, l1) for p in small):
        raise DegenerateInput("a point lies on both lines")
    return _hexagon_line([A, a, B, b, C, c], "Pappus")


def pascal_check(points: Sequence[ProjPoint], conic: Conic = PARABOLA) -> ProjLine:
    """Opposite sides of the inscribed hexagon meet on a line; returns it."""
    points = list(points)
    if len(points) != 6 or len(set(points)) != 6:
        raise DegenerateInput("need six distinct points")
    off = [p for p in points if not conic.contains(p)]
    if off:
        raise PointsNotOnConic(f"{off[0]!r} is not on the conic")
    return _hexagon_line(points, "Pascal")


def brianchon_check(lines: Sequence[ProjLine], conic: Conic | None = None) -> ProjPoint:
    """The three main diagonals of a circumscribed hexagon are concurrent.

    Vertex ``i`` is ``lines[i] ∩ lines[i+1]``; the diagonals join vertices
    ``i`` and ``i+3``.  When ``conic`` is given every line must be tangent to it.
    """
    lines = list(lines)
    if len(lines) != 6 or len(set(lines)) != 6:
        raise DegenerateInput("need six distinct tangent lines")
    if conic is not None:
        off = [l for l in lines if not conic.is_tangent(l)]
        if off:
            raise DegenerateInput(f"{off[0]} is not tangent to the conic")
    try:
        verts = [meet(lines[i], lines[(i + 1) % 6]) for i in range(6)]
        diags = [join(verts[i], verts[i + 3]) for i in range(3)]
    except (IdenticalPoints, IdenticalLines) as exc:
        raise DegenerateInput(f"degenerate hexagon: {exc}") from None
    if len(set(diags)) < 3:
        raise DegenerateInput("diagonals are not distinct")
    if not concurrent(diags):
        raise TheoremViolation(f"Brianchon: diagonals {diags} are not concurrent")
    return meet(diags[0], diags[1])


# -- polygon theorems -------------------------------------------------------

def polygon_edges(vertices: Sequence[ProjPoint]) -> tuple[list[ProjLine], list[ProjLine]]:
    """Alternate-colored edge lines ``(red, blue)`` of a closed polygon."""
    n = len(vertices)
    if n % 2 or n < 4:
        raise DegenerateInput("need an even number (>= 4) of vertices")
    if len(set(vertices)) != n:
        raise DegenerateInput("repeated vertex")
    edges = [join(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    if len(set(edges)) != n:
        raise DegenerateInput("two edges lie on the same line")
    return edges[0::2], edges[1::2]


def offvertex_crossings(vertices: Sequence[ProjPoint]) -> dict[tuple[int, int], ProjPoint]:
    """Crossings ``red edge 2a`` with ``blue edge 2b+1`` that are not polygon vertices.

    Keys are edge indices ``(2a, 2b+1)``.
    """
    red, blue = polygon_edges(vertices)
    n = len(vertices)
    verts = set(vertices)
    out = {}
    for a, r in enumerate(red):
        for b, l in enumerate(blue):
            i, j = 2 * a, 2 * b + 1
            if (j - i) % n in (1, n - 1):
                continue  # adjacent edges meet at a vertex
            p = meet(r, l)
            if p in verts:
                raise DegenerateInput(f"edges {i} and {j} meet at a vertex")
            out[(i, j)] = p
    return out


@dataclass(frozen=True)
class MobiusResult:
    count_on_green: int
    verdict: str


def mobius_check(vertices: Sequence[ProjPoint], green: ProjLine,
                 conic: Conic = PARABOLA) -> MobiusResult:
    """If ``k-1`` off-vertex red/blue crossings are on ``green``, so is a ``k``-th."""
    vertices = list(vertices)
    off = [p for p in vertices if not conic.contains(p)]
    if off:
        raise PointsNotOnConic(f"{off[0]!r} is not on the conic")
    k = len(vertices) // 2
    red, blue = polygon_edges(vertices)
    if green in red or green in blue:
        raise DegenerateInput("the green line is an edge line")
    crossings = offvertex_crossings(vertices)
    pts = list(crossings.values())
    if len(set(pts)) != len(pts):
        raise DegenerateInput("off-vertex crossings are not distinct")
    count = sum(incident(p, green) for p in pts)
    if count < k - 1:
        return MobiusResult(count, HYPOTHESIS_NOT_MET)
    if count < k:
        raise TheoremViolation(f"Mobius: only {count} crossings on the green line, expected >= {k}")
    return MobiusResult(count, CONFIRMED)


def rational_roots_deg2(coeffs: Sequence[Fraction]) -> list[Fraction] | None:
    """Rational roots of ``c0 + c1 t + c2 t^2``.

    Returns ``None`` when the roots are irrational and ``[]`` for no real
    roots or a nonzero constant.  The zero polynomial is rejected.
    """
    from math import isqrt

    c0, c1, c2 = (to_rational(c) for c in coeffs)
    if c2 == 0:
        if c1 == 0:
            if c0 == 0:
                raise DegenerateInput("condition holds identically")
            return []
        return [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    root = Fraction(rn, rd)
    return sorted({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)})


def _interpolate_deg2(f) -> list[Fraction]:
    """Coefficients of the degree <= 2 polynomial ``f`` from values at 0, 1, -1."""
    f0, f1, fm = f(Fraction(0)), f(Fraction(1)), f(Fraction(-1))
    c2 = (f1 + fm) / 2 - f0
    c1 = (f1 - fm) / 2
    return [f0, c1, c2]


@dataclass(frozen=True)
class MobiusInstance:
    params: tuple[Fraction, ...]
    green: ProjLine
    designated: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> list[ProjPoint]:
        return [conic_point(t) for t in self.params]


def _designated(k: int) -> tuple[tuple[int, int], ...]:
    # Red edge 2a against blue edge 2a+3 for the fixed edges, then red edge
    # n-2 (through the free last vertex) against blue edge 1.
    n = 2 * k
    return tuple((2 * a, 2 * a + 3) for a in range(k - 2)) + ((n - 2, 1),)


# k=4 octagon parameters found by the generator below; used when the random
# search gives up.
_STORED_MOBIUS: dict[int, tuple[str, ...]] = {
    4: ("-19/3", "27", "-11", "2", "1", "-3", "-21/2", "173/17"),
}


def mobius_instance(k: int, rng: random.Random, bound: int = 9,
                    max_tries: int = 1000) -> MobiusInstance:
    """Polygon on ``xz = y^2`` with ``k-1`` designated crossings on one line.

    ``2k-1`` vertex parameters are drawn at random.  For ``k = 4`` the green
    line joins two crossings of fixed edges and the last parameter ``t`` is
    solved exactly so that a third crossing, on the edge through
    ``[t^2:t:1]``, lands on it; the condition is a polynomial of degree <= 2
    in ``t``.  For ``k = 3`` the green line simply joins two crossings.
    """
    if k not in (3, 4):
        raise InputError("instance generation is implemented for k = 3 and k = 4")
    n = 2 * k
    designated = _designated(k)
    for _ in range(max_tries):
        params = [Fraction(rng.randint(-3 * bound, 3 * bound), rng.randint(1, 3))
                  for _ in range(n - 1)]
        if len(set(params)) != n - 1:
            continue
        try:
            if k == 3:
                params.append(Fraction(rng.randint(-3 * bound, 3 * bound), rng.randint(1, 3)))
                if len(set(params)) != n:
                    continue
                cr = offvertex_crossings(inscribed_polygon(params))
                green = join(cr[designated[0]], cr[designated[1]])
                mobius_check(inscribed_polygon(params), green)
                return MobiusInstance(tuple(params), green, designated)
            inst = _solve_last_vertex(params, designated)
        except (InputError, IdenticalPoints, IdenticalLines):
            continue
        if inst is not None:
            return inst
    return _stored_mobius_instance(k)


def _solve_last_vertex(params: list[Fraction], designated) -> MobiusInstance | None:
    n = len(params) + 1
    verts = [conic_point(t) for t in params]
    fixed_edges = {i: join(verts[i], verts[i + 1]) for i in range(n - 2)}
    fixed_pts = [meet(fixed_edges[i], fixed_edges[j]) for i, j in designated[:-1]]
    if len(set(fixed_pts)) != len(fixed_pts) or set(fixed_pts) & set(verts):
        return None
    green = join(fixed_pts[0], fixed_pts[1])
    if not all(incident(p, green) for p in fixed_pts):
        return None
    _, last_blue = designated[-1]
    other = fixed_edges[last_blue]
    anchor = verts[-1].coords

    def condition(t):
        edge = _cross(anchor, (t * t, t, Fraction(1)))
        return sum(a * b for a, b in zip(_cross(edge, other.coords), green.coords))

    roots = rational_roots_deg2(_interpolate_deg2(condition))
    if roots is None:
        return None  # irrational: caller resamples
    for t in roots:
        if t in params:
            continue  # the edge through the free vertex degenerates
        cand = tuple(params) + (t,)
        try:
            res = mobius_check(inscribed_polygon(cand), green)
        except InputError:
            continue
        if res.count_on_green >= len(designated):
            return MobiusInstance(cand, green, designated)
    return None


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _stored_mobius_instance(k: int) -> MobiusInstance:
    stored = _STORED_MOBIUS.get(k)
    if not stored:
        raise DegenerateInput(f"no stored Mobius instance for k = {k}")
    params = tuple(Fraction(s) for s in stored)
    designated = _designated(k)
    crossings = offvertex_crossings(inscribed_polygon(params))
    green = join(crossings[designated[0]], crossings[designated[1]])
    return MobiusInstance(params, green, designated)


# -- Katz ---------------------------------------------------------------------

def katz_check(red: Sequence[ProjLine], blue: Sequence[ProjLine],
               conic: Conic = PARABOLA) -> HomogPoly:
    """Unique degree ``d-2`` curve through the ``d^2 - 2d`` crossings off the conic."""
    d = len(red)
    if len(blue) != d or d < 3:
        raise InputError("need d >= 3 red and d blue lines")
    lines = list(red) + list(blue)
    if len(set(lines)) != 2 * d:
        raise DegenerateInput("lines must be distinct")
    pts = [meet(r, b) for r in red for b in blue]
    if len(set(pts)) != d * d:
        raise DegenerateInput("the d^2 crossings are not distinct")
    on = [p for p in pts if conic.contains(p)]
    if len(on) != 2 * d:
        raise BadOnConicCount(f"{len(on)} crossings on the conic, expected {2 * d}")
    rest = PointSet(p for p in pts if not conic.contains(p))
    curve = unique_curve_through(rest, d - 2)
    if any(evaluate(curve, p) != 0 for p in rest):
        raise TheoremViolation("Katz curve misses a crossing")
    return curve


def inscribed_polygon(params: Sequence) -> list[ProjPoint]:
    return [conic_point(t) for t in params]


def random_polygon_params(n: int, rng: random.Random, bound: int = 20) -> list[Fraction]:
    vals = rng.sample(range(-bound, bound + 1), n)
    return [Fraction(v) for v in vals]
