from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzygy.linalg import Mat, nullspace, primitive, rank, rank_of_vectors, rref, subspace_dims, to_rational

small = st.integers(min_value=-6, max_value=6)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def matrices(max_rows=5, max_cols=5, elems=small):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_to_rational_refuses_floats():
    assert to_rational("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_rref_small():
    r = rref(Mat.from_rows([[2, 4, 6], [1, 2, 4]]))
    assert r.rank == 2
    assert r.pivot_cols == [0, 2]
    assert r.reduced.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_nullspace_is_primitive_integer():
    ns = nullspace(Mat.from_rows([[1, 2, 3], [2, 4, 6]]))
    assert len(ns) == 2
    for v in ns:
        assert all(x.denominator == 1 for x in v)
        assert next(x for x in v if x) > 0


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(-1, 3), 0]) == (3, -2, 0)
    assert primitive([0, -4, 6]) == (0, 2, -3)


@given(matrices(elems=fracs))
def test_rank_nullity(rows):
    m = Mat.from_rows(rows)
    ns = nullspace(m)
    assert rank(m) + len(ns) == m.cols
    for v in ns:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
def test_rref_idempotent(rows):
    r = rref(Mat.from_rows(rows))
    again = rref(r.reduced)
    assert again.reduced == r.reduced
    assert again.rank == r.rank


@given(matrices())
def test_rank_transpose(rows):
    m = Mat.from_rows(rows)
    t = Mat.from_rows([list(c) for c in zip(*rows)])
    assert rank(m) == rank(t)


@given(matrices(max_cols=4), matrices(max_cols=4))
def test_grassmann(u, v):
    n = min(len(u[0]), len(v[0]))
    u = [r[:n] for r in u]
    v = [r[:n] for r in v]
    d = subspace_dims(u, v)
    assert d.dim_u == rank_of_vectors(u)
    assert d.dim_sum == rank_of_vectors(u + v)
    assert d.dim_sum + d.dim_intersection == d.dim_u + d.dim_v
