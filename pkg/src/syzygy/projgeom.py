"""Points, lines and conics in the rational projective plane.

Points and lines are stored as canonical integer triples (coprime, first
nonzero entry positive), so two objects are equal exactly when they are the
same projective element.  Meets and joins are cross products.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateConic, IdenticalLines, IdenticalPoints, InputError
from .linalg import primitive, rank_of_vectors, to_rational

INFINITY = "inf"


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


class _Triple:
    """Shared canonicalization for homogeneous triples."""

    __slots__ = ("coords",)

    def __init__(self, *args):
        if len(args) == 1:
            args = tuple(args[0])
        if len(args) != 3:
            raise InputError(f"expected 3 homogeneous coordinates, got {len(args)}")
        vals = [to_rational(a) for a in args]
        if not any(vals):
            raise InputError("all three homogeneous coordinates are zero")
        object.__setattr__(self, "coords", primitive(vals))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __lt__(self, other):
        return self.coords < other.coords

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(map(str, self.coords))})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise InputError(f"expected a list of 3 rationals, got {data!r}")
        try:
            return cls(*(Fraction(str(x)) for x in data))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational in {data!r}: {exc}") from None


class ProjPoint(_Triple):
    """A point ``[x:y:z]``."""

    __slots__ = ()

    @property
    def at_infinity(self) -> bool:
        return self.coords[2] == 0

    def affine(self) -> tuple[Fraction, Fraction]:
        x, y, z = self.coords
        if z == 0:
            raise InputError(f"{self!r} is at infinity")
        return Fraction(x, z), Fraction(y, z)


class ProjLine(_Triple):
    """The line ``a x + b y + c z = 0``."""

    __slots__ = ()

    def __str__(self):
        out = ""
        for c, v in zip(self.coords, "xyz"):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not out:
                out = ("-" if c < 0 else "") + mag + v
            else:
                out += (" - " if c < 0 else " + ") + mag + v
        return out + " = 0"


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise IdenticalLines(f"{l1!r} meets itself in a line, not a point")
    return ProjPoint(cross(l1.coords, l2.coords))


def join(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    if p1 == p2:
        raise IdenticalPoints(f"cannot join {p1!r} to itself")
    return ProjLine(cross(p1.coords, p2.coords))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return dot(p.coords, l.coords) == 0


def collinear(points: Iterable[ProjPoint]) -> bool:
    points = list(points)
    if len(points) < 3:
        raise InputError("collinearity needs at least 3 points")
    return rank_of_vectors([p.coords for p in points]) <= 2


def concurrent(lines: Iterable[ProjLine]) -> bool:
    lines = list(lines)
    if len(lines) < 3:
        raise InputError("concurrency needs at least 3 lines")
    return rank_of_vectors([l.coords for l in lines]) <= 2


def dual_point(l: ProjLine) -> ProjPoint:
    return ProjPoint(l.coords)


def dual_line(p: ProjPoint) -> ProjLine:
    return ProjLine(p.coords)


def conic_point(t) -> ProjPoint:
    """Rational parametrization ``t -> [t^2 : t : 1]`` of ``xz = y^2``.

    ``t = "inf"`` (or ``None``) gives ``[1:0:0]``.
    """
    if t is None or t == INFINITY:
        return ProjPoint(1, 0, 0)
    t = to_rational(t)
    return ProjPoint(t * t, t, 1)


def _det3(m: Sequence[Sequence]) -> Fraction:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _adjugate3(m: Sequence[Sequence]) -> list[list]:
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return [[cof[j][i] for j in range(3)] for i in range(3)]


class Conic:
    """The conic ``v^T M v = 0`` for a symmetric 3x3 rational ``M``.

    ``M`` is stored scaled to coprime integers with first nonzero entry
    positive, so proportional matrices compare equal.
    """

    __slots__ = ("sym",)

    def __init__(self, sym: Sequence[Sequence]):
        rows = [[to_rational(x) for x in r] for r in sym]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise InputError("conic matrix must be 3x3")
        for i in range(3):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InputError("conic matrix must be symmetric")
        flat = [x for r in rows for x in r]
        if not any(flat):
            raise InputError("zero conic matrix")
        flat = primitive(flat)
        object.__setattr__(self, "sym", tuple(tuple(flat[3 * i:3 * i + 3]) for i in range(3)))

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    def __eq__(self, other):
        return isinstance(other, Conic) and self.sym == other.sym

    def __hash__(self):
        return hash(self.sym)

    def __repr__(self):
        return f"Conic({self.sym})"

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> Conic:
        """From ``a0 x^2 + a1 xy + a2 xz + a3 y^2 + a4 yz + a5 z^2``."""
        a = [to_rational(c) for c in coeffs]
        if len(a) != 6:
            raise InputError("a conic has 6 coefficients")
        h = Fraction(1, 2)
        return cls([[a[0], h * a[1], h * a[2]],
                    [h * a[1], a[3], h * a[4]],
                    [h * a[2], h * a[4], a[5]]])

    def coeffs(self) -> tuple[Fraction, ...]:
        m = self.sym
        return tuple(Fraction(c) for c in primitive(
            [m[0][0], 2 * m[0][1], 2 * m[0][2], m[1][1], 2 * m[1][2], m[2][2]]))

    def value(self, v: Sequence) -> Fraction:
        m = self.sym
        return sum((v[i] * m[i][j] * v[j] for i in range(3) for j in range(3)), Fraction(0))

    def contains(self, p: ProjPoint) -> bool:
        return self.value(p.coords) == 0

    def det(self) -> Fraction:
        return _det3(self.sym)

    def tangent_at(self, p: ProjPoint) -> ProjLine:
        if not self.contains(p):
            raise InputError(f"{p!r} is not on {self!r}")
        return ProjLine([dot(row, p.coords) for row in self.sym])

    def is_tangent(self, l: ProjLine) -> bool:
        """True iff ``l`` is tangent to this (nondegenerate) conic."""
        adj = _adjugate3(self.sym)
        v = l.coords
        return sum(v[i] * adj[i][j] * v[j] for i in range(3) for j in range(3)) == 0


PARABOLA = Conic.from_coeffs([0, 0, 1, -1, 0, 0])  # xz - y^2


def dual_conic(c: Conic) -> Conic:
    """The conic of the adjugate matrix; points of it are duals of tangents of ``c``."""
    if c.det() == 0:
        raise DegenerateConic(f"{c!r} is degenerate (det = 0)")
    return Conic(_adjugate3(c.sym))
