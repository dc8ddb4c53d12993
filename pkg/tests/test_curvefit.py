import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzygy.curvefit import (PointSet, cayley_bacharach, cb_dimension, conditions_failure, curve_space_dim,
                             curves_through, line_union_intersection, unique_curve_through, vanish_matrix)
from syzygy.errors import BadPartition, NoCurve, NotTransverse, NotUnique
from syzygy.polyring import evaluate, n_monomials
from syzygy.projgeom import ProjLine, ProjPoint
from syzygy.witnesses import cubic_partition_instance

pt = st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)).filter(any).map(ProjPoint)


def test_pointset_dedups_and_keeps_order():
    s = PointSet([ProjPoint(1, 0, 0), ProjPoint(2, 0, 0), ProjPoint(0, 1, 0)])
    assert len(s) == 2
    assert list(s)[0] == ProjPoint(1, 0, 0)
    assert s == PointSet([ProjPoint(0, 1, 0), ProjPoint(1, 0, 0)])


def test_vanish_matrix_shape():
    pts = [ProjPoint(i, 1, 1) for i in range(4)]
    m = vanish_matrix(pts, 2)
    assert (m.rows, m.cols) == (4, 6)


def test_conic_through_five_points():
    pts = [ProjPoint(t * t, t, 1) for t in range(5)]
    f = unique_curve_through(pts, 2)
    assert all(evaluate(f, p) == 0 for p in pts)
    with pytest.raises(NotUnique) as exc:
        unique_curve_through(pts[:4], 2)
    assert exc.value.nullity == 2


def test_no_curve():
    pts = [ProjPoint(t * t, t, 1) for t in range(5)] + [ProjPoint(1, 0, 1)]
    with pytest.raises(NoCurve):
        unique_curve_through(pts, 2)


@pytest.mark.parametrize("k", range(2, 11))
def test_collinear_failure(k):
    pts = [ProjPoint(i, 0, 1) for i in range(k)]
    for d in range(1, 12):
        expected = k - (d + 1) if d + 1 < k else 0
        assert conditions_failure(pts, d) == expected


@given(st.lists(pt, max_size=12), st.integers(1, 4))
def test_dimension_bounds(pts, d):
    s = PointSet(pts)
    dim = curve_space_dim(s, d)
    assert max(n_monomials(d) - len(s), 0) <= dim <= n_monomials(d)
    assert conditions_failure(s, d) >= 0
    for f in curves_through(s, d):
        assert all(evaluate(f, p) == 0 for p in s)


@given(st.lists(pt, max_size=10), st.lists(pt, max_size=4), st.integers(1, 3))
def test_dimension_monotone(pts, extra, d):
    assert curve_space_dim(PointSet(pts + extra), d) <= curve_space_dim(PointSet(pts), d)


def test_line_union_intersection_transverse():
    red = [ProjLine(1, 0, -i) for i in range(3)]
    blue = [ProjLine(0, 1, -i) for i in range(2)]
    assert len(line_union_intersection(red, blue)) == 6
    with pytest.raises(NotTransverse):
        line_union_intersection(red, [ProjLine(1, 1, 0), ProjLine(1, -1, 0)])


def test_cb_dimension_requires_subset():
    with pytest.raises(BadPartition):
        cb_dimension([ProjPoint(1, 2, 3)], [ProjPoint(0, 0, 1)], 1, 2, 2)


def test_cayley_bacharach_classical():
    # two cubics as unions of lines; every cubic through 8 of the 9 points contains the 9th
    red = [ProjLine(1, 0, -i) for i in range(3)]
    blue = [ProjLine(0, 1, -i) for i in range(3)]
    gamma = line_union_intersection(red, blue)
    for p in gamma:
        check = cayley_bacharach(red, blue, gamma.minus(PointSet([p])), 3)
        assert check.holds
        assert check.lhs == 0


@pytest.mark.parametrize("seed", range(5))
def test_two_quintics_through_cubic_points(seed):
    inst = cubic_partition_instance(random.Random(seed))
    assert len(inst.gamma) == 25
    assert curve_space_dim(inst.gamma_rest, 4) == 1
    assert curve_space_dim(inst.gamma, 4) == 0
    assert conditions_failure(inst.gamma_cubic, 3) == 1
    check = cayley_bacharach(inst.red, inst.blue, inst.gamma_rest, 4)
    assert check.holds and (check.lhs, check.rhs) == (1, 1)
