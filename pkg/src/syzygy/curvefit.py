"""Spaces of plane curves through finite point sets.

The core object is the evaluation matrix of a point set against the
degree-``d`` monomials.  Its nullspace is the space of curves through the
points, and ``|points| - rank`` is how many conditions the points fail to
impose.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import BadPartition, InputError, NoCurve, NotTransverse, NotUnique
from .linalg import Mat, nullspace, rank
from .polyring import HomogPoly, monomial_values, n_monomials
from .projgeom import ProjLine, ProjPoint, meet


class PointSet:
    """An ordered set of distinct projective points.

    Duplicates are dropped on construction; a repeated point would silently
    lower the rank of the evaluation matrix.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[ProjPoint] = ()):
        seen = {}
        for p in points:
            if not isinstance(p, ProjPoint):
                p = ProjPoint(p)
            seen.setdefault(p, None)
        object.__setattr__(self, "points", tuple(seen))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in set(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and set(self.points) == set(other.points)

    def __hash__(self):
        return hash(frozenset(self.points))

    def __repr__(self):
        return f"PointSet({list(self.points)!r})"

    def issubset(self, other: PointSet) -> bool:
        return set(self.points) <= set(other.points)

    def minus(self, other: PointSet) -> PointSet:
        drop = set(other.points)
        return PointSet(p for p in self.points if p not in drop)

    def to_json(self) -> list:
        return [p.to_json() for p in self.points]


def _as_pointset(pts) -> PointSet:
    return pts if isinstance(pts, PointSet) else PointSet(pts)


def vanish_matrix(pts, d: int) -> Mat:
    """Row ``i`` holds every degree-``d`` monomial evaluated at point ``i``."""
    if d < 1:
        raise InputError("degree must be at least 1")
    pts = _as_pointset(pts)
    rows = [monomial_values(d, p.coords) for p in pts]
    return Mat.from_rows(rows, n_monomials(d))


def curves_through(pts, d: int) -> list[HomogPoly]:
    """A basis of the degree-``d`` forms vanishing on every point."""
    return [HomogPoly(d, v) for v in nullspace(vanish_matrix(pts, d))]


def curve_space_dim(pts, d: int) -> int:
    pts = _as_pointset(pts)
    if not len(pts):
        return n_monomials(d)
    return n_monomials(d) - rank(vanish_matrix(pts, d))


def conditions_failure(pts, d: int) -> int:
    """Number of independent conditions the points fail to impose on degree ``d``."""
    pts = _as_pointset(pts)
    if not len(pts):
        return 0
    return len(pts) - rank(vanish_matrix(pts, d))


def unique_curve_through(pts, d: int) -> HomogPoly:
    basis = curves_through(pts, d)
    if not basis:
        raise NoCurve(0, f"no curve of degree {d} passes through the {len(_as_pointset(pts))} points")
    if len(basis) > 1:
        raise NotUnique(len(basis), f"a {len(basis)}-dimensional family of degree-{d} curves passes through the points")
    return basis[0].normalized()


def line_union_intersection(lines1: Sequence[ProjLine], lines2: Sequence[ProjLine]) -> PointSet:
    """The ``len(lines1) * len(lines2)`` crossings of two unions of lines.

    Raises :class:`NotTransverse` unless every crossing is a distinct point
    (which also rules out shared lines).
    """
    pts = []
    for l in lines1:
        for m in lines2:
            if l == m:
                raise NotTransverse(f"{l!r} is a common component")
            pts.append(meet(l, m))
    out = PointSet(pts)
    if len(out) != len(pts):
        raise NotTransverse("two crossings coincide")
    return out


def cb_dimension(gamma_prime, gamma, d: int, d1: int, d2: int) -> int:
    """Dimension of degree-``d`` forms through gamma' modulo those through gamma."""
    gamma_prime = _as_pointset(gamma_prime)
    gamma = _as_pointset(gamma)
    if not gamma_prime.issubset(gamma):
        raise BadPartition("gamma' is not contained in gamma")
    if not 0 <= d <= d1 + d2 - 3:
        raise InputError(f"need 0 <= d <= {d1 + d2 - 3}, got d = {d}")
    if d == 0:
        return int(len(gamma_prime) == 0) - int(len(gamma) == 0)
    return curve_space_dim(gamma_prime, d) - curve_space_dim(gamma, d)


class CBCheck(NamedTuple):
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _failure_any_degree(pts: PointSet, d: int) -> int:
    if not len(pts):
        return 0
    if d == 0:
        return len(pts) - 1
    return conditions_failure(pts, d)


def cayley_bacharach(lines1: Sequence[ProjLine], lines2: Sequence[ProjLine], gamma_prime, d: int) -> CBCheck:
    """Both sides of the Cayley-Bacharach equality for two line unions.

    ``lhs`` counts degree-``d`` forms through ``gamma_prime`` modulo those
    through the whole intersection; ``rhs`` is the failure of the residual
    points to impose conditions in degree ``d1 + d2 - 3 - d``.
    """
    gamma = line_union_intersection(lines1, lines2)
    gamma_prime = _as_pointset(gamma_prime)
    d1, d2 = len(lines1), len(lines2)
    lhs = cb_dimension(gamma_prime, gamma, d, d1, d2)
    residual = gamma.minus(gamma_prime)
    rhs = _failure_any_degree(residual, d1 + d2 - 3 - d)
    return CBCheck(lhs, rhs)
