"""Planar fixed-point search for polynomial self-maps of a rectangle.

For a map f = (P, Q) with f(rect) inside rect, the displacement map
g = id - f has winding index 1 along the rectangle boundary, so g vanishes
somewhere inside.  Bisecting and following a subrectangle whose boundary
index stays nonzero brackets a fixed point to any desired diameter.

The boundary index of g is computed edge by edge: restricting both
components to an edge gives a pair of univariate real polynomials (u, v),
and the edge contributes half the Cauchy index of u/v.  A common rational
zero of u and v found along the way *is* a fixed point and ends the search
with an exact answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Mapping

from .cauchy_index import cauchy_index
from .exact_arith import GaussianRational, RatLike, gauss
from .poly import RealPoly, real_gcd
from .winding import QuarterInt, Rectangle


class SelfMapViolation(ValueError):
    """The index vanished with no boundary fixed point in sight.

    Under the theorem's hypothesis f(rect) inside rect this cannot happen,
    so the caller's self-map assertion was wrong (or a degenerate boundary
    configuration occurred).
    """


class BiPoly:
    """Polynomial in (X, Y) over the rationals, stored as exponent -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], RatLike] = ()):
        clean = {}
        for (i, j), c in dict(terms).items():
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls({})

    @classmethod
    def const(cls, c: RatLike) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int | float:
        return max((i + j for i, j in self.terms), default=float("-inf"))

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self.terms.values()), default=Fraction(0))

    def __add__(self, other: "BiPoly | RatLike") -> "BiPoly":
        other = _as_bipoly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "BiPoly | RatLike") -> "BiPoly":
        return self + (-_as_bipoly(other))

    def __rsub__(self, other: "BiPoly | RatLike") -> "BiPoly":
        return _as_bipoly(other) + (-self)

    def __mul__(self, other: "BiPoly | RatLike") -> "BiPoly":
        other = _as_bipoly(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def eval(self, x: RatLike, y: RatLike) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def restrict_segment(self, a: GaussianRational, b: GaussianRational) -> RealPoly:
        """The univariate polynomial t -> p(a + t*(b - a)) on the segment."""
        ux = RealPoly([a.re, b.re - a.re])
        uy = RealPoly([a.im, b.im - a.im])
        max_i = max((i for i, _ in self.terms), default=0)
        max_j = max((j for _, j in self.terms), default=0)
        xs = _powers(ux, max_i)
        ys = _powers(uy, max_j)
        out = RealPoly.zero()
        for (i, j), c in self.terms.items():
            out = out + (xs[i] * ys[j]).scale(c)
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"


def _as_bipoly(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    return BiPoly.const(v)


def _powers(p: RealPoly, upto: int) -> list[RealPoly]:
    out = [RealPoly.one()]
    for _ in range(upto):
        out.append(out[-1] * p)
    return out


@dataclass(frozen=True)
class PlaneMap:
    """A polynomial map (x, y) -> (P(x, y), Q(x, y)) of the plane."""

    P: BiPoly
    Q: BiPoly

    def eval(self, x: RatLike, y: RatLike) -> tuple[Fraction, Fraction]:
        return self.P.eval(x, y), self.Q.eval(x, y)


@dataclass(frozen=True)
class FixedPointResult:
    """Either an exact fixed point or a closed cell certified to contain one."""

    point: GaussianRational | None = None
    cell: Rectangle | None = None

    def __post_init__(self):
        if (self.point is None) == (self.cell is None):
            raise ValueError("exactly one of point and cell must be set")

    @property
    def is_exact(self) -> bool:
        return self.point is not None


# ---------------------------------------------------------------------------
# rational zero scan along edges
# ---------------------------------------------------------------------------

_FACTOR_CAP = 10**12


def _divisors(n: int) -> Iterator[int]:
    n = abs(n)
    k = 1
    while k <= isqrt(n):
        if n % k == 0:
            yield k
            if k != n // k:
                yield n // k
        k += 1


def _rational_roots(p: RealPoly) -> list[Fraction]:
    """All rational roots of p, by the rational root theorem.

    Gives up (returns only the detected subset) when the boundary
    coefficients are too large to factor quickly; detection here is a
    shortcut for exact answers, never needed for correctness.
    """
    if p.is_zero():
        return []
    ints = [c for c in p.primitive_part().coeffs]
    roots = []
    low = 0
    while low < len(ints) and not ints[low]:
        low += 1
    if low:
        roots.append(Fraction(0))
    a0 = int(ints[low])
    an = int(ints[-1])
    if abs(a0) > _FACTOR_CAP or abs(an) > _FACTOR_CAP:
        return roots
    for q in _divisors(an):
        for r in _divisors(a0):
            for cand in (Fraction(r, q), Fraction(-r, q)):
                if cand not in roots and p.eval(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


# ---------------------------------------------------------------------------
# boundary index with fixed-point detection
# ---------------------------------------------------------------------------


def _displacement(f: PlaneMap) -> PlaneMap:
    return PlaneMap(BiPoly.x() - f.P, BiPoly.y() - f.Q)


def _boundary_scan(
    g: PlaneMap, rect: Rectangle
) -> tuple[QuarterInt, GaussianRational | None]:
    """Index of g along the boundary, plus any exact boundary zero found."""
    corners = rect.vertices()
    for v in corners:
        if g.P.eval(v.re, v.im) == 0 and g.Q.eval(v.re, v.im) == 0:
            return QuarterInt(0), v
    total = QuarterInt(0)
    for k in range(4):
        a, b = corners[k], corners[(k + 1) % 4]
        u = g.P.restrict_segment(a, b)
        v = g.Q.restrict_segment(a, b)
        if u.is_zero() and v.is_zero():
            return QuarterInt(0), a  # the whole edge is fixed
        w = real_gcd(u, v)
        if w.degree >= 1:
            for t in _rational_roots(w):
                if 0 < t < 1:
                    return QuarterInt(0), a + (b - a) * gauss(t)
        half = cauchy_index(u, v, 0, 1)
        total = total + QuarterInt(half.twice)
    return total, None


def fixed_point_search(
    f: PlaneMap, rect: Rectangle, target_diameter: RatLike
) -> FixedPointResult:
    """Locate a fixed point of f in rect, assuming f maps rect into itself.

    Returns an exact fixed point when one appears on a subdivision boundary
    at a rational point, otherwise a sub-rectangle of diameter at most
    ``target_diameter`` whose boundary index is nonzero (hence containing a
    fixed point).  Raises :class:`SelfMapViolation` when every candidate
    index vanishes, which contradicts the self-map hypothesis.
    """
    target = Fraction(target_diameter)
    if target <= 0:
        raise ValueError("target diameter must be positive")
    g = _displacement(f)
    current = rect
    index, exact = _boundary_scan(g, current)
    if exact is not None:
        return FixedPointResult(point=exact)
    if index == 0:
        raise SelfMapViolation("boundary index of id - f vanished on the start cell")
    while _diameter_sq(current) > target * target:
        xm = (current.x0 + current.x1) / 2
        ym = (current.y0 + current.y1) / 2
        quadrants = (
            Rectangle(current.x0, xm, current.y0, ym),
            Rectangle(xm, current.x1, current.y0, ym),
            Rectangle(current.x0, xm, ym, current.y1),
            Rectangle(xm, current.x1, ym, current.y1),
        )
        chosen = None
        for quad in quadrants:
            index, exact = _boundary_scan(g, quad)
            if exact is not None:
                return FixedPointResult(point=exact)
            if index != 0:
                chosen = quad
                break
        if chosen is None:
            raise SelfMapViolation("no subrectangle kept a nonzero index")
        current = chosen
    return FixedPointResult(cell=current)


def _diameter_sq(rect: Rectangle) -> Fraction:
    return (rect.x1 - rect.x0) ** 2 + (rect.y1 - rect.y0) ** 2
