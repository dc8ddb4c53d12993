"""Published witness configurations and other fixed instances."""

from __future__ import annotations

import random
from fractions import Fraction

from .arrangements import ColoredArrangement
from .curvefit import PointSet, line_union_intersection
from .errors import InputError, NotTransverse
from .polyring import HomogPoly, homogenize
from .projgeom import ProjLine, ProjPoint, join


def _lines(*triples) -> list[ProjLine]:
    return [ProjLine(t) for t in triples]


def quartic_witness() -> ColoredArrangement:
    """Green ``y = 0``; reds ``x + c z``, blues ``x - y + c z`` for ``c = 2..-2``."""
    red = _lines((1, 0, 2), (1, 0, 1), (1, 0, 0), (1, 0, -1), (1, 0, -2))
    blue = _lines((1, -1, 2), (1, -1, 1), (1, -1, 0), (1, -1, -1), (1, -1, -2))
    return ColoredArrangement(red, blue, ProjLine(0, 1, 0))


def quintic_witness() -> ColoredArrangement:
    red = _lines((1, 0, 3), (1, 0, 2), (1, 0, 1), (1, 0, 0), (1, 0, -1), (1, 0, -2))
    blue = _lines((1, -1, 3), (1, -1, 2), (1, -1, 1), (5, -1, 0), (5, -1, -5), (5, -1, -10))
    return ColoredArrangement(red, blue, ProjLine(0, 1, 0))


def published_quartic() -> HomogPoly:
    """``5x^4 - 10x^3y + 10x^2y^2 - 5xy^3 + y^4 - 15x^2 + 15xy - 5y^2 + 4``, homogenized."""
    return homogenize({(4, 0): 5, (3, 1): -10, (2, 2): 10, (1, 3): -5, (0, 4): 1,
                       (2, 0): -15, (1, 1): 15, (0, 2): -5, (0, 0): 4}, 4)


def published_quintic() -> HomogPoly:
    return HomogPoly.from_terms(5, {
        (5, 0, 0): 450, (4, 1, 0): -615, (3, 2, 0): 396, (2, 3, 0): -123,
        (1, 4, 0): 18, (0, 5, 0): -1, (4, 0, 1): 675, (3, 1, 1): -150,
        (2, 2, 1): -234, (1, 3, 1): 93, (0, 4, 1): -9, (3, 0, 2): -2400,
        (2, 1, 2): 2250, (1, 2, 2): -504, (0, 3, 2): 29, (2, 0, 3): -2025,
        (1, 1, 3): -375, (0, 2, 3): 141, (1, 0, 4): 2400, (0, 1, 4): -460,
        (0, 0, 5): 300,
    })


WITNESSES = {
    "k5": (quartic_witness, published_quartic),
    "k6": (quintic_witness, published_quintic),
}


# -- two quintics meeting a cubic in ten points ---------------------------------

CUSPIDAL_CUBIC = HomogPoly.from_terms(3, {(0, 2, 1): 1, (3, 0, 0): -1})  # y^2 z = x^3


def cuspidal_point(t) -> ProjPoint:
    t = Fraction(t)
    return ProjPoint(t * t, t * t * t, 1)


class CubicPartitionInstance:
    """Five red and five blue chords of an irreducible cubic.

    Ten points ``q_0..q_9`` on the cubic are joined cyclically: red lines are
    ``q_{2i} q_{2i+1}`` and blue lines ``q_{2i+1} q_{2i+2}``, so the 25
    crossings contain the ten ``q``'s and 15 further points.
    """

    def __init__(self, params):
        self.params = tuple(Fraction(t) for t in params)
        if len(self.params) != 10 or len(set(self.params)) != 10 or 0 in self.params:
            raise InputError("need ten distinct nonzero parameters")
        self.on_cubic = [cuspidal_point(t) for t in self.params]
        q = self.on_cubic
        self.red = [join(q[2 * i], q[2 * i + 1]) for i in range(5)]
        self.blue = [join(q[2 * i + 1], q[(2 * i + 2) % 10]) for i in range(5)]
        self.gamma = line_union_intersection(self.red, self.blue)
        self.gamma_cubic = PointSet(q)
        self.gamma_rest = self.gamma.minus(self.gamma_cubic)


def cubic_partition_instance(rng: random.Random, bound: int = 12,
                             max_tries: int = 1000) -> CubicPartitionInstance:
    for _ in range(max_tries):
        vals = rng.sample([v for v in range(-bound, bound + 1) if v], 10)
        try:
            inst = CubicPartitionInstance(vals)
        except (NotTransverse, InputError):
            continue
        if len(inst.gamma_rest) == 15:
            return inst
    raise InputError("no transverse instance found")
