"""Exact dense linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries and never
rounds.  Elimination is carried out on integer rows: each row is cleared of
denominators and divided by its content after every update, which keeps the
integers small for the modest matrices this package builds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/4"`` to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Mat:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        entries = tuple(to_rational(x) for r in rows for x in r)
        return cls(len(rows), cols, entries)

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        v = [to_rational(x) for x in v]
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                     for i in range(self.rows))


class RREF(NamedTuple):
    reduced: Mat
    rank: int
    pivot_cols: list[int]


def _integer_row(row: Iterable) -> list[int]:
    row = [to_rational(x) for x in row]
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    return _divide_content(ints)


def _divide_content(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g <= 1:
        return row
    return [x // g for x in row]


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale to coprime integers with the first nonzero entry positive.

    The zero vector is returned unchanged (as integers).
    """
    ints = _integer_row(vec)
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def _eliminate(int_rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan on integer rows; returns (echelon rows, pivot columns).

    The first nonzero entry in the current column is taken as pivot; there is
    no magnitude pivoting.
    """
    rows = [r[:] for r in int_rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == len(rows):
            break
        src = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            rows[i] = _divide_content([p * a - f * b for a, b in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Mat) -> RREF:
    int_rows = [_integer_row(m.row(i)) for i in range(m.rows)]
    rows, pivots = _eliminate(int_rows, m.cols)
    entries: list[Fraction] = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            p = row[pivots[i]]
            entries.extend(Fraction(x, p) for x in row)
        else:
            entries.extend(Fraction(0) for _ in row)
    return RREF(Mat(m.rows, m.cols, tuple(entries)), len(pivots), pivots)


def rank(m: Mat) -> int:
    int_rows = [_integer_row(m.row(i)) for i in range(m.rows)]
    return len(_eliminate(int_rows, m.cols)[1])


def rank_of_vectors(vectors: Sequence[Sequence]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return rank(Mat.from_rows(vectors))


def nullspace(m: Mat) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : m v = 0}``, one vector per free column.

    Each vector is primitive-integer with a positive first nonzero entry, so
    the output is reproducible.
    """
    red, rk, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i, f]
        basis.append(tuple(Fraction(x) for x in primitive(v)))
    return basis


def row_space_basis(vectors: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Nonzero rows of the reduced echelon form of the stacked vectors."""
    vectors = list(vectors)
    if not vectors:
        return []
    red, rk, _ = rref(Mat.from_rows(vectors))
    return [red.row(i) for i in range(rk)]


class SubspaceDims(NamedTuple):
    dim_u: int
    dim_v: int
    dim_sum: int
    dim_intersection: int


def subspace_dims(basis_u: Sequence[Sequence], basis_v: Sequence[Sequence]) -> SubspaceDims:
    """Dimensions of U, V, U+V and U∩V for spanning sets of U and V."""
    lengths = {len(v) for v in list(basis_u) + list(basis_v)}
    if len(lengths) > 1:
        raise ValueError("vectors of different lengths")
    du = rank_of_vectors(basis_u)
    dv = rank_of_vectors(basis_v)
    ds = rank_of_vectors(list(basis_u) + list(basis_v))
    return SubspaceDims(du, dv, ds, du + dv - ds)
