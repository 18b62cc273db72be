"""Global complex root isolation by exact rectangle bisection.

The algorithm keeps a worklist of disjoint open cells that together contain
every root of a square-free working polynomial:

* a 2-cell is an open rectangle, counted by the winding number of the
  boundary (roots on the closed boundary are subtracted off exactly);
* a 1-cell is an open axis-parallel segment, counted by restricting the
  polynomial to the line, taking the gcd of real and imaginary parts, and
  counting its real roots with a Sturm chain;
* grid points produced by bisection are evaluated exactly; when one turns
  out to be a root, that root is divided out of the working polynomial
  (deflation) and recorded, which keeps every counting theorem applicable.

Each generation bisects every cell at its midpoint, so after j generations
every cell has diameter at most ``3*r*2**-j`` where r is the initial
radius.  The cell list is deterministic: cells are sorted by coordinates.

Once the surviving cells are well separated (the ``3n*delta`` criterion),
Newton iteration from each cell center converges to the root inside, at
least halving the distance every step; iterates are snapped to dyadic
rationals to keep denominators bounded.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cauchy_index import count_real_roots
from .exact_arith import (
    GaussianRational,
    InvariantViolation,
    RatLike,
    gauss,
    modulus_bounds,
)
from .poly import ComplexPoly, real_gcd, square_free_part
from .winding import (
    QuarterInt,
    Rectangle,
    VertexRootError,
    cauchy_radius,
    rectangle_index,
    segment_index,
)


@dataclass(frozen=True)
class Cell:
    """A 0-, 1-, or 2-dimensional open cell with its exact root weight.

    Extent is the box [x0, x1] x [y0, y1]; degenerate coordinates lower the
    dimension (x0 == x1 gives a vertical segment or a point).  All retained
    cells carry weight > 0.
    """

    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    weight: QuarterInt

    def __post_init__(self):
        for name in ("x0", "x1", "y0", "y1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise ValueError("cell bounds must be ordered")

    @property
    def dim(self) -> int:
        return int(self.x0 < self.x1) + int(self.y0 < self.y1)

    def diameter_sq(self) -> Fraction:
        return (self.x1 - self.x0) ** 2 + (self.y1 - self.y0) ** 2

    def center(self) -> GaussianRational:
        return gauss((self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2)

    def radius(self) -> Fraction:
        """Rational bound on the distance from the center to any cell point."""
        return ((self.x1 - self.x0) + (self.y1 - self.y0)) / 2

    def sort_key(self):
        return (self.x0, self.x1, self.y0, self.y1)

    def contains_point(self, z: GaussianRational) -> bool:
        """Membership of an exact point in the open cell."""
        x_ok = self.x0 < z.re < self.x1 if self.x0 < self.x1 else z.re == self.x0
        y_ok = self.y0 < z.im < self.y1 if self.y0 < self.y1 else z.im == self.y0
        return x_ok and y_ok


@dataclass(frozen=True)
class ApproximateRoot:
    """A disk B(center, radius) asserted to contain exactly one root."""

    center: GaussianRational
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("approximation radius must be positive")


@dataclass(frozen=True)
class IsolationState:
    """Result of the bisection loop.

    ``cells`` are the retained open cells of the final generation, sorted;
    ``deflated_roots`` are the exactly-found roots with their multiplicity
    in the original polynomial; ``remainder`` is the square-free working
    polynomial with all deflated roots divided out (its roots are exactly
    the roots still confined to cells).
    """

    generation: int
    cells: tuple[Cell, ...]
    initial_radius: Fraction
    deflated_roots: tuple[tuple[GaussianRational, int], ...]
    remainder: ComplexPoly
    square_free_degree: int

    def approximations(self) -> tuple[ApproximateRoot, ...]:
        return tuple(ApproximateRoot(c.center(), c.radius()) for c in self.cells)

    def total_weight(self) -> QuarterInt:
        total = QuarterInt(0)
        for c in self.cells:
            total = total + c.weight
        return total


# ---------------------------------------------------------------------------
# deflation
# ---------------------------------------------------------------------------


def deflate_vertex_root(f: ComplexPoly, z0: GaussianRational) -> tuple[ComplexPoly, int]:
    """Divide out (Z - z0)^m with maximal m; requires f(z0) = 0.

    Division is exact because z0 is a Gaussian rational.  Returns the
    quotient (nonzero at z0) and the multiplicity m.
    """
    z0 = gauss(z0)
    if f.is_zero() or f.eval(z0):
        raise ValueError(f"{z0} is not a root, nothing to deflate")
    linear = ComplexPoly([-z0, 1])
    m = 0
    q = f
    while not q.is_zero() and not q.eval(z0):
        q = q.exact_div(linear)
        m += 1
    return q, m


# ---------------------------------------------------------------------------
# cell counting helpers
# ---------------------------------------------------------------------------


def _segment_root_count(w: ComplexPoly, key, cache) -> int:
    """Distinct roots of w on an open axis-parallel segment.

    key is ('v', x, y0, y1) or ('h', y, x0, x1).  Both endpoints must be
    known non-roots, so the boundary half-weights vanish and the count is
    an integer.
    """
    cached = cache.get(key)
    if cached is not None:
        return cached
    kind, anchor, lo, hi = key
    if kind == "v":
        restricted = w.compose_affine(gauss(0, 1), gauss(anchor))
    else:
        restricted = w.compose_affine(gauss(1), gauss(0, anchor))
    re, im = restricted.re_im_parts()
    if re.is_zero() and im.is_zero():
        raise InvariantViolation("working polynomial vanished on a line")
    g = real_gcd(re, im)
    if g.degree <= 0:
        count = 0
    else:
        half = count_real_roots(g, lo, hi)
        if not half.is_integer():
            raise InvariantViolation("segment count hit a boundary root")
        count = half.twice // 2
    cache[key] = count
    return count


def _closed_rectangle_count(w: ComplexPoly, rect: Rectangle, cache) -> QuarterInt:
    """count_roots_in_rectangle with per-generation caching of edge indices."""
    for v in rect.vertices():
        if not w.eval(v):
            raise VertexRootError(v)
    a, b, c, d = rect.vertices()
    total = QuarterInt(0)
    for start, end in ((a, b), (b, c), (c, d), (d, a)):
        key = ("seg", start.re, start.im, end.re, end.im)
        got = cache.get(key)
        if got is None:
            got = segment_index(w, start, end)
            cache[key] = got
        total = total + got
    return total


def _edge_keys(rect: Rectangle):
    return (
        ("h", rect.y0, rect.x0, rect.x1),
        ("h", rect.y1, rect.x0, rect.x1),
        ("v", rect.x0, rect.y0, rect.y1),
        ("v", rect.x1, rect.y0, rect.y1),
    )


def _segment_cell(key, count: int) -> Cell:
    kind, anchor, lo, hi = key
    weight = QuarterInt.from_int(count)
    if kind == "h":
        return Cell(lo, hi, anchor, anchor, weight)
    return Cell(anchor, anchor, lo, hi, weight)


def _split_cell(w: ComplexPoly, cell: Cell, cache) -> list[Cell]:
    """Bisect one cell, returning the retained children (weight > 0)."""
    children: list[Cell] = []
    if w.degree <= 0:
        return children
    if cell.dim == 1:
        if cell.x0 == cell.x1:
            mid = (cell.y0 + cell.y1) / 2
            halves = (("v", cell.x0, cell.y0, mid), ("v", cell.x0, mid, cell.y1))
        else:
            mid = (cell.x0 + cell.x1) / 2
            halves = (("h", cell.y0, cell.x0, mid), ("h", cell.y0, mid, cell.x1))
        for key in halves:
            count = _segment_root_count(w, key, cache)
            if count:
                children.append(_segment_cell(key, count))
        return children

    if cell.dim != 2:
        raise InvariantViolation("0-cells are deflated, never split")
    xm = (cell.x0 + cell.x1) / 2
    ym = (cell.y0 + cell.y1) / 2
    quadrants = (
        Rectangle(cell.x0, xm, cell.y0, ym),
        Rectangle(xm, cell.x1, cell.y0, ym),
        Rectangle(cell.x0, xm, ym, cell.y1),
        Rectangle(xm, cell.x1, ym, cell.y1),
    )
    for rect in quadrants:
        closed = _closed_rectangle_count(w, rect, cache)
        boundary = sum(_segment_root_count(w, key, cache) for key in _edge_keys(rect))
        interior = closed - QuarterInt(2 * boundary)  # half a unit per edge root
        if interior < 0 or not interior.is_integer():
            raise InvariantViolation(f"open-cell count came out as {interior}")
        if interior > 0:
            children.append(Cell(rect.x0, rect.x1, rect.y0, rect.y1, interior))
    cross = (
        ("h", ym, cell.x0, xm),
        ("h", ym, xm, cell.x1),
        ("v", xm, cell.y0, ym),
        ("v", xm, ym, cell.y1),
    )
    for key in cross:
        count = _segment_root_count(w, key, cache)
        if count:
            children.append(_segment_cell(key, count))
    return children


def _new_grid_points(cell: Cell) -> list[GaussianRational]:
    if cell.dim == 1:
        return [cell.center()]
    xm = (cell.x0 + cell.x1) / 2
    ym = (cell.y0 + cell.y1) / 2
    return [
        gauss(xm, ym),
        gauss(xm, cell.y0),
        gauss(xm, cell.y1),
        gauss(cell.x0, ym),
        gauss(cell.x1, ym),
    ]


# ---------------------------------------------------------------------------
# the isolation loop
# ---------------------------------------------------------------------------


def isolate_roots(
    f: ComplexPoly, target_diameter: RatLike, jobs: int = 1
) -> IsolationState:
    """Isolate all complex roots of f into cells of diameter <= target.

    Reduces f to its square-free part, confines all roots to the square
    of the Cauchy radius, and bisects.  Roots that land exactly on grid
    points are deflated and reported with their multiplicity in the
    original f; all other roots end up in disjoint open cells whose
    weights sum to the degree of the square-free part minus the number of
    deflated roots.  Output is deterministic.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    target = Fraction(target_diameter)
    if target <= 0:
        raise ValueError("target diameter must be positive")

    w = square_free_part(f)
    n0 = w.degree
    radius = cauchy_radius(w)
    total = rectangle_index(w, Rectangle(-radius, radius, -radius, radius))
    if total != n0:
        raise InvariantViolation(f"initial square counted {total}, expected {n0}")

    found: list[GaussianRational] = []
    cells = [Cell(-radius, radius, -radius, radius, QuarterInt.from_int(n0))]
    generation = 0
    target_sq = target * target

    while cells and max(c.diameter_sq() for c in cells) > target_sq:
        points: set[GaussianRational] = set()
        for cell in cells:
            points.update(_new_grid_points(cell))
        for z in sorted(points, key=lambda p: (p.re, p.im)):
            if not w.eval(z):
                w, _ = deflate_vertex_root(w, z)
                found.append(z)

        while True:
            cache: dict = {}
            try:
                if jobs > 1 and len(cells) > 1:
                    with ThreadPoolExecutor(max_workers=jobs) as pool:
                        parts = list(pool.map(lambda c: _split_cell(w, c, cache), cells))
                else:
                    parts = [_split_cell(w, c, cache) for c in cells]
            except VertexRootError as exc:
                # All grid points were pre-checked, so this is unexpected;
                # deflate and recount rather than give a wrong answer.
                w, _ = deflate_vertex_root(w, exc.vertex)
                found.append(exc.vertex)
                continue
            break

        cells = sorted((c for part in parts for c in part), key=Cell.sort_key)
        generation += 1

        recovered = sum(c.weight.as_fraction() for c in cells) + len(found)
        if recovered != n0:
            raise InvariantViolation(
                f"generation {generation}: {recovered} roots accounted, expected {n0}"
            )

    deflated = tuple((z, deflate_vertex_root(f, z)[1]) for z in found)
    return IsolationState(
        generation=generation,
        cells=tuple(cells),
        initial_radius=radius,
        deflated_roots=deflated,
        remainder=w,
        square_free_degree=n0,
    )


# ---------------------------------------------------------------------------
# Newton refinement
# ---------------------------------------------------------------------------


def newton_switch_ready(approx: Sequence[ApproximateRoot]) -> bool:
    """Separation test: 3n * delta_k <= |u_k - u_j| for every pair j != k.

    Uses the rational lower bound of the modulus, so a True answer is a
    rigorous certificate that Newton from each center converges to the one
    root in its disk, gaining at least one bit per step.
    """
    if not approx:
        raise ValueError("need at least one approximation")
    n = len(approx)
    for k, ak in enumerate(approx):
        for j, aj in enumerate(approx):
            if j == k:
                continue
            lower, _ = modulus_bounds(ak.center - aj.center)
            if 3 * n * ak.radius > lower:
                return False
    return True


def newton_step(
    f: ComplexPoly, z: GaussianRational, rounding_denominator: int | None = None
) -> GaussianRational:
    """One Newton step z - f(z)/f'(z), exactly, then optionally snapped.

    With ``rounding_denominator = k`` both components are rounded to the
    nearest multiple of 2**-k, which keeps iterates' denominators bounded;
    the snap moves each component by at most 2**-k.
    """
    z = gauss(z)
    dv = f.derivative().eval(z)
    if not dv:
        raise ZeroDivisionError("derivative vanishes at the iterate")
    step = f.eval(z) / dv
    result = z - step
    if rounding_denominator is None:
        return result
    scale = 1 << rounding_denominator
    return gauss(
        Fraction(round(result.re * scale), scale),
        Fraction(round(result.im * scale), scale),
    )


def smale_check(f: ComplexPoly, u0: GaussianRational) -> bool:
    """Sufficient separation test at a single point, after Smale.

    Shifts f to u0, bounds the initial Newton displacement eta =
    |f(u0)/f'(u0)| from above by a rational, and verifies
    ``|c_k| <= (8*eta)**(1-k) * |c_1|`` for all k >= 2 using the modulus
    sandwich (upper bounds on the left, a lower bound on the right).
    True certifies a unique root within twice the displacement and fast
    Newton convergence; False is inconclusive.
    """
    u0 = gauss(u0)
    shifted = f.compose_affine(gauss(1), u0)
    c1 = shifted.coeff(1)
    if not c1:
        raise ZeroDivisionError("derivative vanishes at the starting point")
    c0 = shifted.coeff(0)
    if not c0:
        return True  # u0 already is the root; Newton stays put
    _, eta_upper = modulus_bounds(c0 / c1)
    c1_lower, _ = modulus_bounds(c1)
    growth = 8 * eta_upper
    power = Fraction(1)
    for k in range(2, shifted.degree + 1):
        power *= growth
        _, ck_upper = modulus_bounds(shifted.coeff(k))
        if ck_upper * power > c1_lower:
            return False
    return True
