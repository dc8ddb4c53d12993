"""Chord-tangent group law on plane cubics and the line construction for cubics.

Points are plain :class:`~syzygy.projgeom.ProjPoint` values checked against a
:class:`CubicCurve`.  The group identity must be a flex, so that three points
sum to zero exactly when they are collinear.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateChoice, IdenticalPoints, InputError, LineInsideCurve, SingularPoint, TheoremViolation
from .linalg import to_rational
from .polyring import HomogPoly, evaluate, restrict_to_line
from .projgeom import ProjLine, ProjPoint, collinear, cross, incident, join, meet

O_WEIERSTRASS = ProjPoint(0, 1, 0)

# Small rational points on y^2 = x^3 + 17.
SEED_POINTS_17 = ((-2, 3), (-1, 4), (2, 5), (4, 9), (8, 23))


def _other_point_on(l: ProjLine, p: ProjPoint) -> ProjPoint:
    """Some point of ``l`` different from ``p``: meets with the coordinate lines."""
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = cross(l.coords, axis)
        if any(v) and ProjPoint(v) != p:
            return ProjPoint(v)
    raise AssertionError("unreachable")


class CubicCurve:
    """A plane cubic ``form = 0`` with a flex ``base`` as group identity."""

    __slots__ = ("form", "base")

    def __init__(self, form: HomogPoly, base: ProjPoint):
        if form.degree != 3:
            raise InputError("a cubic curve needs a degree-3 form")
        object.__setattr__(self, "form", form.normalized())
        object.__setattr__(self, "base", base)
        if evaluate(self.form, base) != 0:
            raise InputError(f"base point {base!r} is not on the curve")
        t = self.tangent_line(base)
        coeffs = restrict_to_line(self.form, base.coords, _other_point_on(t, base).coords)
        # coeffs[0] = coeffs[1] = 0 by tangency; a flex also kills coeffs[2]
        if coeffs[2] != 0:
            raise InputError(f"base point {base!r} is not a flex")
        if coeffs[3] == 0:
            raise LineInsideCurve("the tangent line at the base point is a component")

    def __setattr__(self, name, value):
        raise AttributeError("CubicCurve is immutable")

    def __repr__(self):
        return f"CubicCurve({self.form}, base={self.base!r})"

    @classmethod
    def weierstrass(cls, a, b) -> CubicCurve:
        """``y^2 z = x^3 + a x z^2 + b z^3`` with identity ``[0:1:0]``."""
        a, b = to_rational(a), to_rational(b)
        form = HomogPoly.from_terms(3, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -a, (0, 0, 3): -b})
        return cls(form, O_WEIERSTRASS)

    def contains(self, p: ProjPoint) -> bool:
        return evaluate(self.form, p) == 0

    def _require(self, p: ProjPoint):
        if not self.contains(p):
            raise InputError(f"{p!r} is not on the curve")

    def point(self, x, y) -> ProjPoint:
        p = ProjPoint(to_rational(x), to_rational(y), 1)
        self._require(p)
        return p

    def tangent_line(self, p: ProjPoint) -> ProjLine:
        self._require(p)
        g = self.form.gradient(p)
        if not any(g):
            raise SingularPoint(f"{p!r} is a singular point of the curve")
        return ProjLine(g)

    def third_point(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        """Residual intersection of the chord ``pq`` (tangent if ``p = q``)."""
        self._require(p)
        self._require(q)
        if p == q:
            q2 = _other_point_on(self.tangent_line(p), p)
        else:
            q2 = q
        c = restrict_to_line(self.form, p.coords, q2.coords)
        if not any(c):
            raise LineInsideCurve("the line through the points lies in the curve")
        # f(s p + t q2) = c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3 with c0 = 0.
        if p != q:
            # roots (1:0) and (0:1) known: f = s t (c1 s + c2 t)
            s, t = c[2], -c[1]
        else:
            # double root at (1:0): f = t^2 (c2 s + c3 t)
            s, t = c[3], -c[2]
        r = ProjPoint([s * a + t * b for a, b in zip(p.coords, q2.coords)])
        if not self.contains(r):
            raise TheoremViolation("residual point is not on the curve")
        return r

    def neg(self, p: ProjPoint) -> ProjPoint:
        return self.third_point(p, self.base)

    def add(self, p: ProjPoint, q: ProjPoint) -> ProjPoint:
        return self.neg(self.third_point(p, q))

    def mul(self, n: int, p: ProjPoint) -> ProjPoint:
        """``n * p`` by double-and-add."""
        if n < 0:
            return self.mul(-n, self.neg(p))
        acc = self.base
        while n:
            if n & 1:
                acc = self.add(acc, p)
            p = self.add(p, p)
            n >>= 1
        return acc

    def sum(self, points: Sequence[ProjPoint]) -> ProjPoint:
        acc = self.base
        for p in points:
            acc = self.add(acc, p)
        return acc


def tangent_line(c: CubicCurve, p: ProjPoint) -> ProjLine:
    return c.tangent_line(p)


def third_point(c: CubicCurve, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    return c.third_point(p, q)


def ec_neg(c: CubicCurve, p: ProjPoint) -> ProjPoint:
    return c.neg(p)


def ec_add(c: CubicCurve, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    return c.add(p, q)


@dataclass(frozen=True)
class CubicConstruction:
    red: tuple[ProjLine, ...]
    blue: tuple[ProjLine, ...]
    green: ProjLine
    on_curve: tuple[ProjPoint, ...]
    residual: tuple[ProjPoint, ...]

    def arrangement(self):
        """The configuration as a k=4 colored arrangement.

        Red and blue lines are paired by their crossing on the green line.
        """
        from .arrangements import ColoredArrangement

        blue = []
        for r in self.red:
            match = [b for b in self.blue if incident(meet(r, b), self.green)]
            if len(match) != 1:
                raise DegenerateChoice("red line does not meet exactly one blue line on green")
            blue.append(match[0])
        return ColoredArrangement(self.red, blue, self.green)


def _line(p: ProjPoint, q: ProjPoint, what: str) -> ProjLine:
    try:
        return join(p, q)
    except IdenticalPoints:
        raise DegenerateChoice(f"{what}: the two points coincide") from None


def thm10_construct(c: CubicCurve, pts: Sequence[ProjPoint]) -> CubicConstruction:
    """Four red and four blue lines whose 4 crossings off the cubic are collinear.

    Wiring, writing sums in the group law of ``c``::

        red:  p1p2, p4p5, -(p1+p4) -(p2+p3), -(p1+..+p5) p3
        blue: p1p4, p2p3, (p1+p2+p3+p4) p5, -(p1+p2) -(p4+p5)
    """
    if len(pts) != 5:
        raise InputError("need exactly 5 points")
    p1, p2, p3, p4, p5 = pts
    for p in pts:
        c._require(p)
    if len(set(pts)) != 5:
        raise DegenerateChoice("points are not distinct")
    for i in range(5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                if collinear([pts[i], pts[j], pts[k]]):
                    raise DegenerateChoice(f"points {i + 1}, {j + 1}, {k + 1} are collinear")
    add, neg = c.add, c.neg
    s12, s14, s23, s45 = add(p1, p2), add(p1, p4), add(p2, p3), add(p4, p5)
    s1234 = add(s14, s23)
    s12345 = add(s1234, p5)
    red = (_line(p1, p2, "red 1"), _line(p4, p5, "red 2"),
           _line(neg(s14), neg(s23), "red 3"), _line(neg(s12345), p3, "red 4"))
    blue = (_line(p1, p4, "blue 1"), _line(p2, p3, "blue 2"),
            _line(s1234, p5, "blue 3"), _line(neg(s12), neg(s45), "blue 4"))
    if len(set(red + blue)) != 8:
        raise DegenerateChoice("constructed lines are not distinct")
    crossings = [meet(r, b) for r in red for b in blue]
    if len(set(crossings)) != 16:
        raise DegenerateChoice("the 16 crossings are not distinct")
    on = tuple(p for p in crossings if c.contains(p))
    off = tuple(p for p in crossings if not c.contains(p))
    if len(on) != 12:
        raise DegenerateChoice(f"{len(on)} crossings on the cubic instead of 12")
    if not collinear(off):
        raise TheoremViolation(f"residual crossings {off} are not collinear")
    green = join(off[0], off[1])
    if green in red or green in blue:
        raise DegenerateChoice("green line coincides with a red or blue line")
    return CubicConstruction(red, blue, green, on, off)


# Admissible 5-tuples on y^2 = x^3 + 17 (affine coordinates), used when
# random sampling keeps failing.
FALLBACK_TUPLES_17 = (
    ((-2, 3), (-1, 4), (2, 5), (4, 9), (8, 23)),
)


def random_point(c: CubicCurve, seeds: Sequence[ProjPoint], rng: random.Random,
                 coeff_range: int = 6, terms: int = 2) -> ProjPoint:
    """A random small group word ``sum n_i s_i`` in the seed points."""
    idx = rng.sample(range(len(seeds)), min(terms, len(seeds)))
    acc = c.base
    for i in idx:
        n = rng.randint(-coeff_range, coeff_range)
        acc = c.add(acc, c.mul(n, seeds[i]))
    return acc


def random_admissible_tuple(c: CubicCurve, seeds: Sequence[ProjPoint], rng: random.Random,
                            max_tries: int = 200, fallback=FALLBACK_TUPLES_17,
                            **word_kw) -> tuple[CubicConstruction, tuple[ProjPoint, ...]]:
    """Sample 5 points until :func:`thm10_construct` accepts them."""
    for _ in range(max_tries):
        pts = tuple(random_point(c, seeds, rng, **word_kw) for _ in range(5))
        if c.base in pts:
            continue
        try:
            return thm10_construct(c, pts), pts
        except DegenerateChoice:
            continue
    for tup in fallback:
        try:
            pts = tuple(c.point(x, y) for x, y in tup)
            return thm10_construct(c, pts), pts
        except (DegenerateChoice, InputError):
            continue
    raise DegenerateChoice("no admissible 5-tuple found")


def default_curve() -> CubicCurve:
    return CubicCurve.weierstrass(0, 17)


def default_seeds(c: CubicCurve | None = None) -> list[ProjPoint]:
    c = c or default_curve()
    return [c.point(x, y) for x, y in SEED_POINTS_17]
