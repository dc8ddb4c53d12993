"""Tangent spaces to completely reducible forms and secant dimensions.

For ``p = F_1 ... F_d`` the affine tangent space to the variety of products
of linear forms is the degree-``d`` part of the ideal generated by the
cofactors ``G_i = p / F_i``, i.e. the span of ``m * G_i`` over linear
monomials ``m``.  The secant variety's dimension at a generic point is the
dimension of the span of two such tangent spaces, minus one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .curvefit import PointSet, curve_space_dim
from .errors import DegreeMismatch, InputError
from .linalg import rank_of_vectors, row_space_basis, subspace_dims
from .polyring import HomogPoly, multiply, product
from .projgeom import ProjLine, meet

_LINEAR_MONOMIALS = tuple(HomogPoly(1, v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


@dataclass(frozen=True)
class SplitForm:
    """A product of linear forms, remembered factor by factor."""

    factors: tuple[ProjLine, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(
            f if isinstance(f, ProjLine) else ProjLine(f) for f in self.factors))
        if not self.factors:
            raise InputError("a split form needs at least one factor")

    @property
    def degree(self) -> int:
        return len(self.factors)

    @property
    def product(self) -> HomogPoly:
        return product([HomogPoly.linear(f) for f in self.factors])

    @property
    def distinct(self) -> bool:
        return len(set(self.factors)) == len(self.factors)

    def nodes(self) -> PointSet:
        """Pairwise intersections of the factor lines."""
        return PointSet(meet(a, b) for a, b in combinations(self.factors, 2) if a != b)


def cofactors(s: SplitForm) -> list[HomogPoly]:
    lin = [HomogPoly.linear(f) for f in s.factors]
    return [product(lin[:i] + lin[i + 1:]) for i in range(len(lin))]


def tangent_generators(s: SplitForm) -> list[tuple]:
    return [multiply(m, g).coeffs for g in cofactors(s) for m in _LINEAR_MONOMIALS]


def tangent_space_basis(s: SplitForm) -> list[tuple]:
    """Row-reduced basis of the degree-``d`` tangent space (coefficient vectors)."""
    return row_space_basis(tangent_generators(s))


def tangent_dim(s: SplitForm) -> int:
    return rank_of_vectors(tangent_generators(s))


class Span(NamedTuple):
    dim_sum: int
    dim_intersection: int


def terracini_span(s1: SplitForm, s2: SplitForm) -> Span:
    if s1.degree != s2.degree:
        raise DegreeMismatch(f"degrees {s1.degree} and {s2.degree} differ")
    dims = subspace_dims(tangent_space_basis(s1), tangent_space_basis(s2))
    return Span(dims.dim_sum, dims.dim_intersection)


def pointwise_intersection_dim(s1: SplitForm, s2: SplitForm) -> int:
    """Dimension of degree-``d`` forms through the nodes of both split forms.

    This is the point-evaluation route: one row per node, one column per
    monomial.  For distinct generic factors it equals the coefficient-space
    intersection dimension.
    """
    if s1.degree != s2.degree:
        raise DegreeMismatch(f"degrees {s1.degree} and {s2.degree} differ")
    pts = PointSet(list(s1.nodes()) + list(s2.nodes()))
    return curve_space_dim(pts, s1.degree)


def random_split_form(d: int, rng: random.Random, bound: int = 9,
                      avoid: Sequence[ProjLine] = ()) -> SplitForm:
    """``d`` pairwise distinct random lines with coefficients in ``[-bound, bound]``."""
    taken = set(avoid)
    factors = []
    while len(factors) < d:
        v = [rng.randint(-bound, bound) for _ in range(3)]
        if not any(v):
            continue
        l = ProjLine(v)
        if l in taken:
            continue
        taken.add(l)
        factors.append(l)
    return SplitForm(tuple(factors))


@dataclass(frozen=True)
class SecantReport:
    d: int
    trials: int
    tangent_dims: tuple[int, ...]
    span_dims: tuple[int, ...]
    intersection_dims: tuple[int, ...]

    @property
    def tangent_dim(self) -> int:
        return max(self.tangent_dims)

    @property
    def span_dim_max(self) -> int:
        return max(self.span_dims)

    @property
    def secant_dim(self) -> int:
        return self.span_dim_max - 1

    @property
    def intersection_dim_min(self) -> int:
        return min(self.intersection_dims)

    def to_json(self) -> dict:
        return {"d": self.d, "tangent_dim": self.tangent_dim,
                "span_dim_max": self.span_dim_max, "secant_dim": self.secant_dim,
                "intersection_dim_min": self.intersection_dim_min}


def secant_trials(d: int, trials: int = 20, seed: int = 0) -> SecantReport:
    """Random pairs of split forms with all ``2d`` lines distinct."""
    if trials < 1:
        raise InputError("need at least one trial")
    if d < 1:
        raise InputError("degree must be positive")
    rng = random.Random(seed)
    tdims, spans, inters = [], [], []
    for _ in range(trials):
        s1 = random_split_form(d, rng)
        s2 = random_split_form(d, rng, avoid=s1.factors)
        b1, b2 = tangent_space_basis(s1), tangent_space_basis(s2)
        dims = subspace_dims(b1, b2)
        tdims.extend((dims.dim_u, dims.dim_v))
        spans.append(dims.dim_sum)
        inters.append(dims.dim_intersection)
    return SecantReport(d, trials, tuple(tdims), tuple(spans), tuple(inters))


def secant_dim(d: int, trials: int = 20, seed: int = 0) -> int:
    """Projective dimension of the secant variety, max span over trials minus 1."""
    return secant_trials(d, trials, seed).secant_dim


class DensityCount(NamedTuple):
    params: int
    curve_space_dim: int
    dense_possible: bool


def density_count(d: int) -> DensityCount:
    """Parameters of line arrangements vs. dimension of the space of degree-``d`` curves."""
    if d < 1:
        raise InputError("degree must be positive")
    params = 3 * d + 5
    curves = (d * d + 3 * d) // 2
    return DensityCount(params, curves, curves <= params)
