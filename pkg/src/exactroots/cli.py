"""Command line front end.

Subcommands: real-roots, complex-roots, winding, routh, fixed-point, plot.
Polynomials are given as expressions like ``Z^5 - 5*Z^4 + (1/2)*Z + i``;
results are JSON with every exact value serialized as a rational string
("p/q"), Gaussian rationals as {"re": ..., "im": ...}, and winding indices
as quarter-integer fraction strings.  Plot output (csv or svg) converts to
floating point only at emission; everything upstream is exact.

Exit codes: 0 success, 2 parse error, 3 precondition violation
(zero polynomial, vertex root, non-self-map, ...), 4 internal invariant
breach.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .brouwer import BiPoly, PlaneMap, fixed_point_search
from .cauchy_index import count_real_roots
from .exact_arith import GaussianRational, InvariantViolation, gauss
from .isolate import isolate_roots, newton_step, newton_switch_ready
from .poly import ComplexPoly, RealPoly
from .stability import half_plane_count, routh_index
from .winding import Rectangle, VertexRootError, count_roots_in_rectangle


class ParseError(ValueError):
    """Polynomial expression syntax error, with position information."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------
#
# Grammar:  expr   := term (('+'|'-') term)*
#           term   := factor (('*'|'/')? factor)*       (juxtaposition = *)
#           factor := ('+'|'-')* power
#           power  := atom (('^'|'**') nonneg-int)?
#           atom   := integer | 'i' | variable | '(' expr ')'
#
# Variables: Z or X (slot 0) and Y (slot 1); lower case accepted.  Division
# is only defined by nonzero constants, which covers rational literals a/b.

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z])|(\*\*|[-+*/^()])|(\S)")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        pos = m.start()
        if m.group(1):
            tokens.append(("num", int(m.group(1)), pos))
        elif m.group(2):
            tokens.append(("sym", m.group(2), pos))
        elif m.group(3):
            tokens.append(("op", m.group(3), pos))
        else:
            raise ParseError(f"unexpected character {m.group(4)!r}", pos)
    tokens.append(("end", "", len(text)))
    return tokens


class _Terms:
    """Polynomial in two slots with Gaussian-rational coefficients."""

    __slots__ = ("data",)

    def __init__(self, data=None):
        self.data = {e: c for e, c in (data or {}).items() if c}

    @classmethod
    def const(cls, c: GaussianRational):
        return cls({(0, 0): c})

    @classmethod
    def var(cls, slot: int):
        e = (1, 0) if slot == 0 else (0, 1)
        return cls({e: gauss(1)})

    def add(self, other):
        out = dict(self.data)
        for e, c in other.data.items():
            out[e] = out.get(e, gauss(0)) + c
        return _Terms(out)

    def neg(self):
        return _Terms({e: -c for e, c in self.data.items()})

    def mul(self, other):
        out: dict = {}
        for (i1, j1), c1 in self.data.items():
            for (i2, j2), c2 in other.data.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, gauss(0)) + c1 * c2
        return _Terms(out)

    def pow(self, n: int):
        result = _Terms.const(gauss(1))
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    def constant_value(self):
        if not self.data:
            return gauss(0)
        if set(self.data) == {(0, 0)}:
            return self.data[(0, 0)]
        return None


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.seen_vars: set[str] = set()

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> _Terms:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return value

    def expr(self) -> _Terms:
        value = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                value = value.add(rhs if text == "+" else rhs.neg())
            else:
                return value

    def term(self) -> _Terms:
        value = self.factor()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in ("*", "/"):
                self.advance()
                rhs = self.factor()
                if text == "*":
                    value = value.mul(rhs)
                else:
                    c = rhs.constant_value()
                    if c is None:
                        raise ParseError("division only by nonzero constants", pos)
                    if not c:
                        raise ParseError("division by zero", pos)
                    value = value.mul(_Terms.const(c.inv()))
            elif kind in ("num", "sym") or (kind == "op" and text == "("):
                value = value.mul(self.factor())
            else:
                return value

    def factor(self) -> _Terms:
        negate = False
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                negate ^= text == "-"
            else:
                break
        value = self.power()
        return value.neg() if negate else value

    def power(self) -> _Terms:
        value = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text in ("^", "**"):
            self.advance()
            kind, text, pos = self.peek()
            if kind == "op" and text == "-":
                raise ParseError("negative exponent", pos)
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            self.advance()
            return value.pow(text)
        return value

    def atom(self) -> _Terms:
        kind, text, pos = self.advance()
        if kind == "num":
            return _Terms.const(gauss(text))
        if kind == "sym":
            if text == "i":
                return _Terms.const(gauss(0, 1))
            name = text.upper()
            if name in ("Z", "X"):
                self.seen_vars.add(name)
                return _Terms.var(0)
            if name == "Y":
                self.seen_vars.add(name)
                return _Terms.var(1)
            raise ParseError(f"unknown symbol {text!r}", pos)
        if kind == "op" and text == "(":
            value = self.expr()
            kind, text, pos = self.advance()
            if not (kind == "op" and text == ")"):
                raise ParseError("expected ')'", pos)
            return value
        raise ParseError(f"unexpected {text!r}" if text else "unexpected end of input", pos)


@dataclass(frozen=True)
class PolyExpr:
    """A parsed univariate polynomial plus its normalized source form."""

    source: str
    variable: str
    poly: ComplexPoly

    @property
    def normalized(self) -> str:
        return format_complex_poly(self.poly, self.variable)


def parse_poly(text: str) -> PolyExpr:
    """Parse a univariate polynomial in Z or X with Gaussian coefficients."""
    parser = _Parser(text)
    terms = parser.parse()
    if "Y" in parser.seen_vars:
        raise ParseError("Y is not allowed in a univariate polynomial", 0)
    if parser.seen_vars == {"Z", "X"}:
        raise ParseError("mixed variables Z and X", 0)
    variable = next(iter(parser.seen_vars), "Z")
    degree = max((e[0] for e in terms.data), default=0)
    coeffs = [gauss(0)] * (degree + 1)
    for (k, _), c in terms.data.items():
        coeffs[k] = c
    return PolyExpr(source=text, variable=variable, poly=ComplexPoly(coeffs))


def parse_real_poly(text: str) -> tuple[RealPoly, str]:
    expr = parse_poly(text)
    for c in expr.poly.coeffs:
        if c.im:
            raise ParseError("polynomial must have real coefficients", 0)
    return RealPoly([c.re for c in expr.poly.coeffs]), expr.variable


def parse_map_component(text: str) -> BiPoly:
    """Parse a real bivariate polynomial in X and Y (one map component)."""
    parser = _Parser(text)
    terms = parser.parse()
    if "Z" in parser.seen_vars:
        raise ParseError("map components use the variables X and Y", 0)
    out = {}
    for e, c in terms.data.items():
        if c.im:
            raise ParseError("map components must have real coefficients", 0)
        out[e] = c.re
    return BiPoly(out)


# ---------------------------------------------------------------------------
# printing and serialization
# ---------------------------------------------------------------------------


def _coeff_str(c: GaussianRational) -> tuple[str, bool]:
    """Render a coefficient; second value tells whether it is '1'-like."""
    if not c.im:
        return str(c.re), abs(c.re) == 1 and c.re.denominator == 1
    if not c.re:
        if c.im == 1:
            return "i", False
        if c.im == -1:
            return "-i", False
        return f"{c.im}*i", False
    op = "+" if c.im > 0 else "-"
    im = abs(c.im)
    im_str = "i" if im == 1 else f"{im}*i"
    return f"({c.re}{op}{im_str})", False


def format_complex_poly(p: ComplexPoly, var: str = "Z") -> str:
    """Normalized text form; parsing it back reproduces the polynomial."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs, is_unit = _coeff_str(c)
        if mono and is_unit:
            parts.append(mono if not cs.startswith("-") else f"-{mono}")
        elif mono:
            parts.append(f"{cs}*{mono}")
        else:
            parts.append(cs)
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out


def _rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def _gauss_obj(z: GaussianRational) -> dict:
    return {"re": _rat_str(z.re), "im": _rat_str(z.im)}


def _rect_obj(rect: Rectangle) -> dict:
    return {
        "x0": _rat_str(rect.x0),
        "x1": _rat_str(rect.x1),
        "y0": _rat_str(rect.y0),
        "y1": _rat_str(rect.y1),
    }


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    """Parsed command options shared by the subcommands."""

    precision_bits: int = 10
    rectangle: Rectangle | None = None
    output_format: str = "json"
    samples: int = 64
    newton_steps: int | None = None
    jobs: int = 1
    interval: tuple[Fraction, Fraction] | None = None

    def __post_init__(self):
        if self.precision_bits <= 0:
            raise ValueError("precision must be positive")
        if self.samples < 4:
            raise ValueError("need at least 4 samples per edge (16 total)")

    @property
    def target(self) -> Fraction:
        return Fraction(1, 2**self.precision_bits)


def _parse_rect(text: str) -> Rectangle:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected x0,x1,y0,y1")
    try:
        x0, x1, y0, y1 = (Fraction(p.strip()) for p in parts)
        return Rectangle(x0, x1, y0, y1)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_interval(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected a,b")
    try:
        a, b = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not a < b:
        raise argparse.ArgumentTypeError("interval needs a < b")
    return a, b


def _read_source(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _isolate_real(p: RealPoly, a: Fraction, b: Fraction, target: Fraction):
    """1-D bisection: exact points (with weight) and isolating intervals."""
    points = []
    for endpoint in (a, b):
        if p.eval(endpoint) == 0:
            points.append((endpoint, Fraction(1, 2)))
    work = [(a, b)]
    intervals = []
    while work:
        lo, hi = work.pop()
        inside = count_real_roots(p, lo, hi).as_fraction()
        if p.eval(lo) == 0:
            inside -= Fraction(1, 2)
        if p.eval(hi) == 0:
            inside -= Fraction(1, 2)
        if inside == 0:
            continue
        if inside == 1 and hi - lo <= target:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p.eval(mid) == 0:
            points.append((mid, Fraction(1)))
        work.append((lo, mid))
        work.append((mid, hi))
    return sorted(points), sorted(intervals)


def cmd_real_roots(args) -> dict:
    poly, variable = parse_real_poly(_read_source(args.poly))
    if poly.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    config = _config_from(args)
    if config.interval is not None:
        a, b = config.interval
    else:
        lead = abs(poly.leading_coeff())
        bound = (
            1 + max(abs(c) for c in poly.coeffs[:-1]) / lead
            if poly.degree >= 1
            else Fraction(1)
        )
        a, b = -bound, bound
    points, intervals = _isolate_real(poly, a, b, config.target)
    total = count_real_roots(poly, a, b)
    return {
        "polynomial": format_complex_poly(poly.to_complex(), variable),
        "interval": [_rat_str(a), _rat_str(b)],
        "precision": _rat_str(config.target),
        "count": str(total),
        "points": [{"x": _rat_str(x), "weight": _rat_str(w)} for x, w in points],
        "intervals": [
            {"lo": _rat_str(lo), "hi": _rat_str(hi), "count": 1} for lo, hi in intervals
        ],
    }


def cmd_complex_roots(args) -> dict:
    expr = parse_poly(_read_source(args.poly))
    config = _config_from(args)
    if expr.poly.is_zero() or expr.poly.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    state = isolate_roots(expr.poly, config.target, jobs=config.jobs)
    approx = state.approximations()
    ready = bool(approx) and newton_switch_ready(approx)
    payload = {
        "polynomial": expr.normalized,
        "precision": _rat_str(config.target),
        "square_free_degree": state.square_free_degree,
        "generation": state.generation,
        "initial_radius": _rat_str(state.initial_radius),
        "exact_roots": [
            {"root": _gauss_obj(z), "multiplicity": m} for z, m in state.deflated_roots
        ],
        "cells": [
            {
                "x0": _rat_str(c.x0),
                "x1": _rat_str(c.x1),
                "y0": _rat_str(c.y0),
                "y1": _rat_str(c.y1),
                "dim": c.dim,
                "weight": str(c.weight),
                "center": _gauss_obj(c.center()),
                "radius": _rat_str(c.radius()),
            }
            for c in state.cells
        ],
        "newton_ready": ready,
    }
    if config.newton_steps and approx:
        if not ready:
            payload["newton_refined"] = None
        else:
            rounding = config.precision_bits + 2
            refined = []
            for cell in state.cells:
                z = cell.center()
                for _ in range(config.newton_steps):
                    z = newton_step(state.remainder, z, rounding)
                refined.append(_gauss_obj(z))
            payload["newton_refined"] = refined
    return payload


def cmd_winding(args) -> dict:
    expr = parse_poly(_read_source(args.poly))
    if expr.poly.is_zero():
        raise ValueError("the zero polynomial has no winding index")
    index = count_roots_in_rectangle(expr.poly, args.rect)
    return {
        "polynomial": expr.normalized,
        "rectangle": _rect_obj(args.rect),
        "index": str(index),
    }


def cmd_routh(args) -> dict:
    expr = parse_poly(_read_source(args.poly))
    if expr.poly.is_zero() or expr.poly.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    counts = half_plane_count(expr.poly)
    return {
        "polynomial": expr.normalized,
        "routh_index": str(routh_index(expr.poly)),
        "p": counts.p,
        "q": counts.q,
        "imaginary_axis": counts.imaginary_axis,
        "hurwitz_stable": counts.q == expr.poly.degree,
    }


def cmd_fixed_point(args) -> dict:
    p = parse_map_component(args.map_p)
    q = parse_map_component(args.map_q)
    rect = args.rect if args.rect is not None else Rectangle(-1, 1, -1, 1)
    config = _config_from(args)
    result = fixed_point_search(PlaneMap(p, q), rect, config.target)
    if result.is_exact:
        outcome = {"kind": "point", "point": _gauss_obj(result.point)}
    else:
        outcome = {"kind": "cell", "cell": _rect_obj(result.cell)}
    return {
        "rectangle": _rect_obj(rect),
        "precision": _rat_str(config.target),
        "result": outcome,
    }


def _boundary_samples(poly: ComplexPoly, rect: Rectangle, samples: int):
    """Per edge: `samples` equally spaced parameters t in [0, 1[."""
    corners = rect.vertices()
    rows = []
    for k in range(4):
        a, b = corners[k], corners[(k + 1) % 4]
        edge = []
        for j in range(samples):
            t = Fraction(j, samples)
            z = a + (b - a) * gauss(t)
            w = poly.eval(z)
            edge.append((t, w.re, w.im))
        rows.append(edge)
    return rows


def cmd_plot(args) -> str:
    expr = parse_poly(_read_source(args.poly))
    config = _config_from(args)
    edges = _boundary_samples(expr.poly, args.rect, config.samples)
    if config.output_format == "svg":
        return _render_svg(edges)
    lines = ["t,re,im"]
    for edge in edges:
        for t, re_val, im_val in edge:
            lines.append(f"{float(t)!r},{float(re_val)!r},{float(im_val)!r}")
    return "\n".join(lines) + "\n"


def _render_svg(edges) -> str:
    # floats only here, at the emission boundary
    pts = [(float(re_v), float(im_v)) for edge in edges for _, re_v, im_v in edge]
    pts.append(pts[0])
    xs = [p[0] for p in pts] + [0.0]
    ys = [p[1] for p in pts] + [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = 0.05 * span
    x_lo, y_lo = min(xs) - pad, min(ys) - pad
    scale = 600.0 / (span + 2 * pad)

    def to_screen(x, y):
        return (x - x_lo) * scale, 600.0 - (y - y_lo) * scale

    polyline = " ".join(f"{sx:.3f},{sy:.3f}" for sx, sy in (to_screen(*p) for p in pts))
    ox, oy = to_screen(0.0, 0.0)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" '
        'viewBox="0 0 600 600">\n'
        f'  <polyline points="{polyline}" fill="none" stroke="black" stroke-width="1"/>\n'
        f'  <circle cx="{ox:.3f}" cy="{oy:.3f}" r="4" fill="red"/>\n'
        "</svg>\n"
    )


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------


def _config_from(args) -> RunConfig:
    return RunConfig(
        precision_bits=getattr(args, "precision", 10),
        rectangle=getattr(args, "rect", None),
        output_format=getattr(args, "format", "json"),
        samples=getattr(args, "samples", 64),
        newton_steps=getattr(args, "newton", None),
        jobs=getattr(args, "jobs", 1),
        interval=getattr(args, "interval", None),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactroots",
        description="Exact polynomial root counting and location.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, poly=True):
        if poly:
            p.add_argument("poly", nargs="?", help="polynomial expression or '-' for stdin")
        p.add_argument("--precision", type=int, default=10, metavar="K",
                       help="target diameter 2^-K (default 10)")
        p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="worker threads for cell refinement")

    p = sub.add_parser("real-roots", help="count and isolate real roots on an interval")
    add_common(p)
    p.add_argument("--interval", type=_parse_interval, metavar="A,B",
                   help="interval [a,b] (default: a Cauchy root window)")
    p.set_defaults(func=cmd_real_roots)

    p = sub.add_parser("complex-roots", help="isolate all complex roots")
    add_common(p)
    p.add_argument("--newton", type=int, metavar="M",
                   help="run M Newton steps per cell when separation permits")
    p.set_defaults(func=cmd_complex_roots)

    p = sub.add_parser("winding", help="roots in a rectangle by boundary index")
    add_common(p)
    p.add_argument("--rect", type=_parse_rect, required=True, metavar="X0,X1,Y0,Y1")
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("routh", help="half-plane root counts and stability")
    add_common(p)
    p.set_defaults(func=cmd_routh)

    p = sub.add_parser("fixed-point", help="locate a fixed point of a planar map")
    p.add_argument("map_p", help="first component P(X,Y)")
    p.add_argument("map_q", help="second component Q(X,Y)")
    p.add_argument("--rect", type=_parse_rect, metavar="X0,X1,Y0,Y1",
                   help="search rectangle (default -1,1,-1,1)")
    p.add_argument("--precision", type=int, default=10, metavar="K")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fixed_point)

    p = sub.add_parser("plot", help="sample the boundary image curve")
    add_common(p)
    p.add_argument("--rect", type=_parse_rect, required=True, metavar="X0,X1,Y0,Y1")
    p.add_argument("--samples", type=int, default=64, metavar="N",
                   help="samples per edge (default 64)")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.set_defaults(func=cmd_plot)

    return parser


def _emit_error(payload: dict) -> None:
    print(json.dumps(payload), file=sys.stderr)


def _merge_flag_values(argv: list[str]) -> list[str]:
    # let --rect -1,1,-1,1 work even though the value starts with a dash
    merged = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--rect", "--interval") and k + 1 < len(argv):
            merged.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            merged.append(tok)
    return merged


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_merge_flag_values(list(argv)))
    try:
        result = args.func(args)
    except ParseError as exc:
        _emit_error({"error": "parse", "message": str(exc), "position": exc.position})
        return 2
    except VertexRootError as exc:
        _emit_error({"error": "vertex_root", "vertex": _gauss_obj(exc.vertex)})
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        _emit_error({"error": "precondition", "message": str(exc)})
        return 3
    except InvariantViolation as exc:
        _emit_error({"error": "internal_invariant", "message": str(exc)})
        return 4
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
