import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from syzygy.arrangements import (CONFIRMED, HYPOTHESIS_NOT_MET, ColoredArrangement, brianchon_check,
                                  construct_curve, inscribed_polygon, katz_check, mobius_check,
                                  mobius_instance, offgreen_points, offvertex_crossings, pappus_check,
                                  pascal_check, polygon_edges, random_arrangement, rational_roots_deg2)
from syzygy.curvefit import curve_space_dim
from syzygy.errors import BadOnConicCount, DegenerateArrangement, DegenerateInput, InputError, NotGeneric
from syzygy.polyring import HomogPoly, evaluate
from syzygy.projgeom import (PARABOLA, ProjLine, ProjPoint, conic_point, dual_conic, dual_line,
                             dual_point, incident, join, meet)
from syzygy.witnesses import published_quartic, published_quintic, quartic_witness, quintic_witness

params = st.fractions(min_value=-12, max_value=12, max_denominator=4)


def test_arrangement_validation():
    green = ProjLine(0, 1, 0)
    with pytest.raises(DegenerateArrangement):
        ColoredArrangement([ProjLine(1, 0, 0)], [ProjLine(1, 1, 1)], green)  # meet off green
    with pytest.raises(DegenerateArrangement):
        ColoredArrangement([ProjLine(1, 0, 0)], [ProjLine(1, 0, 0)], green)


def test_json_roundtrip():
    arr = quartic_witness()
    assert ColoredArrangement.from_json(arr.to_json()) == arr
    with pytest.raises(InputError):
        ColoredArrangement.from_json({"red": []})


def test_quartic_witness():
    arr = quartic_witness()
    assert arr.generic
    assert len(offgreen_points(arr)) == 20
    assert curve_space_dim(offgreen_points(arr), 4) == 1
    assert construct_curve(arr).proportional(published_quartic())


def test_quintic_witness_has_a_triple_crossing():
    arr = quintic_witness()
    assert not arr.generic
    with pytest.raises(NotGeneric):
        offgreen_points(arr)
    pts = offgreen_points(arr, allow_coincident=True)
    assert len(pts) == 29
    assert ProjPoint(2, 5, 1) in pts
    assert curve_space_dim(pts, 5) == 1
    f = construct_curve(arr, allow_coincident=True)
    assert f.proportional(published_quintic())
    assert all(evaluate(published_quintic(), p) == 0 for p in pts)


@pytest.mark.parametrize("k", range(2, 6))
def test_theorem_random(k):
    for seed in range(5):
        arr = random_arrangement(k, random.Random(seed))
        f = construct_curve(arr)
        assert f.degree == k - 1
        assert all(evaluate(f, p) == 0 for p in offgreen_points(arr))
        # colors are symmetric
        assert construct_curve(arr.swapped()).proportional(f)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(2, 4))
def test_theorem_property(seed, k):
    arr = random_arrangement(k, random.Random(seed))
    pts = offgreen_points(arr)
    assert len(pts) == k * k - k
    assert curve_space_dim(pts, k - 1) == 1


def test_pappus_example():
    A, B, C = ProjPoint(0, 0, 1), ProjPoint(1, 0, 1), ProjPoint(3, 0, 1)
    a, b, c = ProjPoint(0, 1, 1), ProjPoint(2, 1, 1), ProjPoint(-1, 1, 1)
    l = pappus_check(A, B, C, a, b, c)
    assert isinstance(l, ProjLine)


@given(st.lists(params, min_size=6, max_size=6, unique=True))
def test_pascal_property(ts):
    pts = [conic_point(t) for t in ts]
    try:
        l = pascal_check(pts)
    except DegenerateInput:
        assume(False)
    v = pts
    for i in range(3):
        p = meet(join(v[i], v[i + 1]), join(v[i + 3], v[(i + 4) % 6]))
        assert incident(p, l)


def test_pascal_symmetric_hexagon_gives_line_at_infinity():
    # t_i + t_{i+1} = t_{i+3} + t_{i+4}: opposite sides are parallel
    assert pascal_check([conic_point(t) for t in (0, 1, 2, -3, 4, -1)]) == ProjLine(0, 0, 1)


@given(st.lists(params, min_size=6, max_size=6, unique=True))
def test_brianchon_is_dual_pascal(ts):
    pts = [conic_point(t) for t in ts]
    try:
        pascal = pascal_check(pts)
        point = brianchon_check([dual_line(p) for p in pts], dual_conic(PARABOLA))
    except DegenerateInput:
        assume(False)
    assert point == dual_point(pascal)


def test_brianchon_tangent_hexagon():
    tangents = [PARABOLA.tangent_at(conic_point(t)) for t in (0, 1, 3, -2, 5, -4)]
    p = brianchon_check(tangents, PARABOLA)
    assert isinstance(p, ProjPoint)


def test_polygon_edges_coloring():
    v = inscribed_polygon([0, 1, 2, 3])
    red, blue = polygon_edges(v)
    assert red == [join(v[0], v[1]), join(v[2], v[3])]
    assert blue == [join(v[1], v[2]), join(v[3], v[0])]
    with pytest.raises(DegenerateInput):
        polygon_edges(v[:3])


@pytest.mark.parametrize("k", (3, 4))
def test_mobius_instances(k):
    for seed in range(5):
        inst = mobius_instance(k, random.Random(seed))
        cr = offvertex_crossings(inst.vertices)
        assert all(incident(cr[key], inst.green) for key in inst.designated)
        res = mobius_check(inst.vertices, inst.green)
        assert res.verdict == CONFIRMED and res.count_on_green >= k


def test_mobius_hypothesis_not_met():
    v = inscribed_polygon([0, 1, 3, -2, 5, 7])
    res = mobius_check(v, ProjLine(1, 1, 100))
    assert res.verdict == HYPOTHESIS_NOT_MET


def test_rational_roots():
    assert sorted(rational_roots_deg2([Fraction(-2), Fraction(-1), Fraction(1)])) == [-1, 2]
    assert rational_roots_deg2([Fraction(-2), Fraction(0), Fraction(1)]) is None


def _katz(ts):
    red, blue = polygon_edges(inscribed_polygon(ts))
    return red, blue


def test_katz_d3_is_pascal():
    ts = [0, 1, 3, -2, 5, 7]
    red, blue = _katz(ts)
    line = pascal_check(inscribed_polygon(ts))
    assert katz_check(red, blue).proportional(HomogPoly.linear(line))


@pytest.mark.parametrize("d", (4, 5))
def test_katz_higher(d):
    rng = random.Random(d)
    done = 0
    while done < 3:
        ts = rng.sample(range(-20, 21), 2 * d)
        try:
            f = katz_check(*_katz(ts))
        except (DegenerateInput, BadOnConicCount):
            continue
        assert f.degree == d - 2
        done += 1


def test_katz_rejects_wrong_conic_count():
    red = [ProjLine(1, 0, -i) for i in range(3)]
    blue = [ProjLine(0, 1, -i) for i in range(3)]
    with pytest.raises(BadOnConicCount):
        katz_check(red, blue)
