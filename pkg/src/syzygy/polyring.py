"""Dense homogeneous polynomials in x, y, z over the rationals.

Coefficients are indexed by the graded-lex order with ``x > y > z``; in degree
2 that is ``x^2, xy, xz, y^2, yz, z^2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import DegreeMismatch, DegreeTooLow, InputError, NotDivisible
from .linalg import primitive, to_rational
from .projgeom import ProjLine, ProjPoint

ORDER_NAME = "grlex_xyz"


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of degree ``d`` in decreasing lex order."""
    if d < 0:
        raise InputError("negative degree")
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict[tuple[int, int, int], int]:
    return {m: i for i, m in enumerate(monomials(d))}


def n_monomials(d: int) -> int:
    return (d + 2) * (d + 1) // 2


def monomial_values(d: int, v: Sequence) -> list:
    """Every degree-``d`` monomial evaluated at the triple ``v``."""
    x, y, z = v
    px = [1]
    py = [1]
    pz = [1]
    for _ in range(d):
        px.append(px[-1] * x)
        py.append(py[-1] * y)
        pz.append(pz[-1] * z)
    return [px[a] * py[b] * pz[c] for a, b, c in monomials(d)]


class HomogPoly:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence):
        if degree < 0:
            raise InputError("negative degree")
        coeffs = tuple(to_rational(c) for c in coeffs)
        if len(coeffs) != n_monomials(degree):
            raise InputError(
                f"degree {degree} needs {n_monomials(degree)} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("HomogPoly is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, d: int) -> HomogPoly:
        return cls(d, [0] * n_monomials(d))

    @classmethod
    def from_terms(cls, d: int, terms: Mapping[tuple[int, int, int], object]) -> HomogPoly:
        idx = monomial_index(d)
        coeffs = [Fraction(0)] * n_monomials(d)
        for mono, c in terms.items():
            if sum(mono) != d or mono not in idx:
                raise InputError(f"monomial {mono} is not of degree {d}")
            coeffs[idx[mono]] += to_rational(c)
        return cls(d, coeffs)

    @classmethod
    def linear(cls, l: ProjLine | Sequence) -> HomogPoly:
        return cls(1, tuple(l))

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, HomogPoly) and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"HomogPoly({self.degree}, {self})"

    def __str__(self):
        parts = []
        for (a, b, c), k in zip(monomials(self.degree), self.coeffs):
            if k == 0:
                continue
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip("xyz", (a, b, c)) if e)
            mag = abs(k)
            coef = "" if (mag == 1 and mono) else str(mag)
            sign = "-" if k < 0 else "+"
            parts.append((sign, coef + ("*" if coef and mono else "") + mono))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {t}" for s, t in parts[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def normalized(self) -> HomogPoly:
        """Primitive integer coefficients, first nonzero positive."""
        return HomogPoly(self.degree, primitive(self.coeffs))

    def proportional(self, other: HomogPoly) -> bool:
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized() == other.normalized()

    def terms(self) -> dict[tuple[int, int, int], Fraction]:
        return {m: c for m, c in zip(monomials(self.degree), self.coeffs) if c}

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: HomogPoly):
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other: HomogPoly) -> HomogPoly:
        self._check(other)
        return HomogPoly(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: HomogPoly) -> HomogPoly:
        self._check(other)
        return HomogPoly(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> HomogPoly:
        return HomogPoly(self.degree, [-a for a in self.coeffs])

    def scale(self, k) -> HomogPoly:
        k = to_rational(k)
        return HomogPoly(self.degree, [k * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __call__(self, p) -> Fraction:
        return evaluate(self, p)

    def partial(self, var: int) -> HomogPoly:
        """Formal derivative with respect to x (0), y (1) or z (2)."""
        if self.degree == 0:
            return HomogPoly.zero(0)
        terms: dict[tuple[int, int, int], Fraction] = {}
        for mono, c in self.terms().items():
            e = mono[var]
            if e:
                m = list(mono)
                m[var] -= 1
                terms[tuple(m)] = terms.get(tuple(m), Fraction(0)) + c * e
        return HomogPoly.from_terms(self.degree - 1, terms)

    def gradient(self, p) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(evaluate(self.partial(i), p) for i in range(3))

    def to_json(self) -> dict:
        return {"degree": self.degree, "order": ORDER_NAME,
                "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> HomogPoly:
        try:
            if data.get("order", ORDER_NAME) != ORDER_NAME:
                raise InputError(f"unsupported monomial order {data['order']!r}")
            return cls(int(data["degree"]), [Fraction(str(c)) for c in data["coeffs"]])
        except (KeyError, TypeError, AttributeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed polynomial: {exc}") from None


def evaluate(f: HomogPoly, p) -> Fraction:
    """Value at the canonical representative of ``p`` (or at a raw triple)."""
    v = p.coords if isinstance(p, ProjPoint) else tuple(p)
    return sum((c * m for c, m in zip(f.coeffs, monomial_values(f.degree, v)) if c),
               Fraction(0))


def multiply(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    d = f.degree + g.degree
    idx = monomial_index(d)
    out = [Fraction(0)] * n_monomials(d)
    gt = g.terms()
    for (a, b, c), u in f.terms().items():
        for (a2, b2, c2), w in gt.items():
            out[idx[(a + a2, b + b2, c + c2)]] += u * w
    return HomogPoly(d, out)


def product(polys: Sequence[HomogPoly]) -> HomogPoly:
    out = HomogPoly(0, [1])
    for f in polys:
        out = multiply(out, f)
    return out


def divide_by_linear(f: HomogPoly, l: ProjLine | Sequence) -> HomogPoly:
    """Exact quotient ``f / (a x + b y + c z)``.

    Raises :class:`NotDivisible` when the remainder is nonzero.
    """
    a, b, c = (to_rational(t) for t in l)
    if f.degree == 0:
        raise NotDivisible("a constant is not divisible by a linear form")
    d = f.degree
    rem = dict(f.terms())
    q: dict[tuple[int, int, int], Fraction] = {}
    # Long division on the leading variable of the divisor, in grlex order.
    if a != 0:
        lead, coef = 0, a
    elif b != 0:
        lead, coef = 1, b
    else:
        lead, coef = 2, c
    lin = [(0, a), (1, b), (2, c)]
    for mono in monomials(d):
        k = rem.get(mono, Fraction(0))
        if k == 0 or mono[lead] == 0:
            continue
        qm = list(mono)
        qm[lead] -= 1
        qm = tuple(qm)
        t = k / coef
        q[qm] = q.get(qm, Fraction(0)) + t
        for var, cv in lin:
            if cv == 0:
                continue
            m = list(qm)
            m[var] += 1
            m = tuple(m)
            rem[m] = rem.get(m, Fraction(0)) - t * cv
    if any(rem.values()):
        raise NotDivisible(f"{f} is not divisible by {HomogPoly.linear((a, b, c))}")
    return HomogPoly.from_terms(d - 1, q)


def homogenize(terms: Mapping[tuple[int, int], object], d: int) -> HomogPoly:
    """Lift an affine polynomial ``{(i, j): coeff}`` in x, y to degree ``d`` using z."""
    out = {}
    for (i, j), c in terms.items():
        if i + j > d:
            raise DegreeTooLow(f"term x^{i} y^{j} exceeds degree {d}")
        out[(i, j, d - i - j)] = c
    return HomogPoly.from_terms(d, out)


def dehomogenize(f: HomogPoly) -> dict[tuple[int, int], Fraction]:
    """Set ``z = 1``; returns ``{(i, j): coeff}`` without zero terms."""
    return {(a, b): c for (a, b, _), c in f.terms().items()}


def restrict_to_line(f: HomogPoly, p: Sequence, q: Sequence) -> list[Fraction]:
    """Binary form ``f(s p + t q)`` as coefficients of ``s^(d-i) t^i``, ``i = 0..d``."""
    d = f.degree

    def powers(u, w):
        out = [[Fraction(1)]]
        for _ in range(d):
            prev = out[-1]
            nxt = [Fraction(0)] * (len(prev) + 1)
            for i, k in enumerate(prev):
                nxt[i] += k * u
                nxt[i + 1] += k * w
            out.append(nxt)
        return out

    px, py, pz = (powers(to_rational(p[i]), to_rational(q[i])) for i in range(3))
    res = [Fraction(0)] * (d + 1)
    for (a, b, c), k in f.terms().items():
        # convolve the three binomial expansions
        ab = [Fraction(0)] * (a + b + 1)
        for i, u in enumerate(px[a]):
            if u:
                for j, w in enumerate(py[b]):
                    ab[i + j] += u * w
        for i, u in enumerate(ab):
            if u:
                for j, w in enumerate(pz[c]):
                    res[i + j] += k * u * w
    return res
