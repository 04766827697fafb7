# Copyright (C) 2026 The curvelotus authors
#
# You can copy, redistribute or modify this Program under the terms of
# the GNU General Public License version 2 as published by the Free
# Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# version 2 along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA
# 02110-1301, USA.

"""Newton polygons, tropical functions and edge restrictions.

A monomial ``x^a y^b`` is the point ``(a, b)``. Polygons are kept as the
chain of vertices of the compact boundary, from the end on the vertical
axis side (smallest ``a``) to the end on the horizontal axis side
(smallest ``b``).
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from tokenize import TokenError
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import parse_expr

from curvelotus.core.errors import DomainError, ParseError, UnsupportedCoefficientError
from curvelotus.core.lattice import INF, Extended, LatticeVector, as_rational, format_rational
from curvelotus.core.puiseux import Branch, PhasedRational, PuiseuxSeries, coincidence_order

logger = logging.getLogger("curvelotus.polygon")

Point = Tuple[Fraction, Fraction]

_POLYNOMIAL_CHARS = re.compile(r"^[0-9xy+\-*/^()\s]+$")
_POLYNOMIAL_GLOBALS = {"Integer": sympy.Integer, "Rational": sympy.Rational, "Symbol": sympy.Symbol}


def _point(value) -> Point:
    a, b = value
    return Fraction(a), Fraction(b)


class Support:
    """Exponents of a bivariate series, optionally with coefficients."""

    def __init__(self, points: Union[Dict, Iterable]):
        if isinstance(points, dict):
            items = [(_point(k), v) for k, v in points.items()]
        else:
            items = [(_point(k), None) for k in points]
        self.points = {}
        for point, coefficient in items:
            if point[0] < 0 or point[1] < 0:
                raise DomainError("negative exponent in %s" % (point,))
            if coefficient is not None and not isinstance(coefficient, PhasedRational):
                coefficient = PhasedRational.from_rational(coefficient)
            if coefficient is not None and coefficient.is_zero:
                continue
            self.points[point] = coefficient

    @classmethod
    def from_polynomial(cls, text: str) -> "Support":
        """Read a polynomial in ``x`` and ``y`` with rational coefficients.

        Only integers, ``x``, ``y``, parentheses and ``+ - * / ^`` are
        accepted; anything else is a ``ParseError``.
        """
        if not _POLYNOMIAL_CHARS.match(text):
            raise ParseError("malformed polynomial %r: only x, y, integers and + - * / ^ ( ) "
                             "are allowed" % text)
        x, y = sympy.symbols("x y")
        try:
            expr = parse_expr(text.replace("^", "**"), local_dict={"x": x, "y": y},
                              global_dict=dict(_POLYNOMIAL_GLOBALS))
            poly = sympy.Poly(sympy.expand(expr), x, y)
        except (sympy.SympifyError, sympy.PolynomialError, TokenError, TypeError, ValueError,
                SyntaxError, ZeroDivisionError, RecursionError) as err:
            raise ParseError("malformed polynomial %r: %s" % (text, err))
        points = {}
        for (a, b), coefficient in poly.terms():
            if not coefficient.is_Rational:
                raise UnsupportedCoefficientError("non rational coefficient %s" % coefficient)
            points[(a, b)] = Fraction(int(coefficient.p), int(coefficient.q))
        return cls(points)

    def coefficient(self, point) -> Optional[PhasedRational]:
        return self.points.get(_point(point))

    @property
    def has_coefficients(self) -> bool:
        return all(c is not None for c in self.points.values())

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(_point(v) for v in self.vertices))
        if not self.vertices:
            raise DomainError("a Newton polygon has at least one vertex")

    @property
    def edges(self) -> List[Tuple[Point, Point]]:
        return list(zip(self.vertices, self.vertices[1:]))

    @property
    def is_lattice(self) -> bool:
        return all(a.denominator == 1 and b.denominator == 1 for a, b in self.vertices)

    def __str__(self):
        return " ".join("(%s,%s)" % (format_rational(a), format_rational(b))
                        for a, b in self.vertices)


def polygon_from_support(support: Union[Support, Iterable]) -> NewtonPolygon:
    """Vertices of the compact boundary of conv(support + first quadrant)."""
    if not isinstance(support, Support):
        support = Support(support)
    points = sorted(support.points)
    if not points:
        raise DomainError("empty support")
    lower = []
    for p in points:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    lowest = min(b for _, b in lower)
    chain = []
    for p in lower:
        chain.append(p)
        if p[1] == lowest:
            break
    return NewtonPolygon(tuple(chain))


def trop_eval(support: Union[Support, NewtonPolygon, Iterable], weight) -> Fraction:
    """``min`` over the support of the pairing with ``weight = (c, d)``."""
    if isinstance(weight, LatticeVector):
        c, d = weight.c, weight.d
    else:
        c, d = weight
    if c < 0 or d < 0:
        raise DomainError("weight %s is outside the first quadrant" % (weight,))
    if isinstance(support, NewtonPolygon):
        points = support.vertices
    elif isinstance(support, Support):
        points = list(support.points)
    else:
        points = [_point(p) for p in support]
    if not points:
        raise DomainError("empty support")
    return min(c * a + d * b for a, b in points)


def edge_slope(edge: Tuple[Point, Point]) -> Fraction:
    (a1, b1), (a2, b2) = edge
    return (a2 - a1) / (b1 - b2)


def newton_fan(polygon: NewtonPolygon) -> List[Fraction]:
    """Slopes of the rays orthogonal to the compact edges, increasing."""
    return [edge_slope(edge) for edge in polygon.edges]


def integral_length(edge: Tuple[Point, Point]) -> int:
    (a1, b1), (a2, b2) = edge
    deltas = (a2 - a1, b2 - b1)
    if any(v.denominator != 1 for v in deltas):
        raise DomainError("edge %s is not a lattice segment" % (edge,))
    return gcd(abs(int(deltas[0])), abs(int(deltas[1])))


def _real(coefficient: Optional[PhasedRational], point) -> Fraction:
    if coefficient is None:
        raise DomainError("no coefficient at %s" % (point,))
    if not coefficient.is_real:
        raise UnsupportedCoefficientError("coefficient %s at %s is not real" % (coefficient, point))
    return coefficient.to_rational()


def edge_restriction(support: Support, edge) -> List[Fraction]:
    """Coefficients ``[c0, c1, ...]`` of the restriction to a compact edge.

    ``c_k`` is the coefficient at ``m0 + k * phi`` where ``m0`` is the end of
    the edge with the larger first coordinate and ``phi`` the primitive
    step towards the other end.
    """
    p, q = _point(edge[0]), _point(edge[1])
    polygon = polygon_from_support(support)
    if (p, q) not in polygon.edges and (q, p) not in polygon.edges:
        raise DomainError("%s is not a compact edge of %s" % ((p, q), polygon))
    start, end = (p, q) if p[0] > q[0] else (q, p)
    length = integral_length((start, end))
    step = ((end[0] - start[0]) / length, (end[1] - start[1]) / length)
    coefficients = []
    for k in range(length + 1):
        point = (start[0] + k * step[0], start[1] + k * step[1])
        if point in support.points:
            coefficients.append(_real(support.points[point], point))
        else:
            coefficients.append(Fraction(0))
    return coefficients


def is_squarefree(coefficients: Sequence[Fraction]) -> bool:
    v = sympy.Symbol("v")
    poly = sympy.Poly.from_list([sympy.Rational(c.numerator, c.denominator) for c in reversed(coefficients)], v)
    return sympy.gcd(poly, poly.diff(v)).degree() == 0


def is_newton_nondegenerate(support: Support) -> bool:
    """Every edge restriction has only simple roots."""
    if not support.has_coefficients:
        raise DomainError("non degeneracy needs coefficients on every point")
    for point, coefficient in support.points.items():
        _real(coefficient, point)
    polygon = polygon_from_support(support)
    for edge in polygon.edges:
        restriction = edge_restriction(support, edge)
        if not is_squarefree(restriction):
            logger.debug("edge %s has restriction %s with a multiple root", edge, restriction)
            return False
    return True


@dataclass(frozen=True)
class ElementaryPolygon:
    """The polygon of ``x^a + y^b``; an infinite side drops that monomial."""

    a: Extended
    b: Extended

    def __post_init__(self):
        a, b = as_rational(self.a), as_rational(self.b)
        if a is INF and b is INF:
            raise DomainError("elementary polygon with both sides infinite")
        for side in (a, b):
            if side is not INF and side <= 0:
                raise DomainError("elementary polygon sides must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def inclination(self) -> Extended:
        if self.a is INF:
            return INF
        if self.b is INF:
            return Fraction(0)
        return self.a / self.b

    @property
    def polygon(self) -> NewtonPolygon:
        vertices = []
        if self.b is not INF:
            vertices.append((0, self.b))
        if self.a is not INF:
            vertices.append((self.a, 0))
        return NewtonPolygon(tuple(vertices))

    def scale(self, factor) -> "ElementaryPolygon":
        return ElementaryPolygon(self.a if self.a is INF else self.a * factor,
                                 self.b if self.b is INF else self.b * factor)

    def __str__(self):
        return "[%s,%s]" % (format_rational(self.a), format_rational(self.b))


def _as_polygon(value) -> NewtonPolygon:
    if isinstance(value, ElementaryPolygon):
        return value.polygon
    return value


def minkowski_sum(first, second) -> NewtonPolygon:
    """Sum of two polygons, merging parallel edges."""
    first, second = _as_polygon(first), _as_polygon(second)
    start = (first.vertices[0][0] + second.vertices[0][0],
             first.vertices[0][1] + second.vertices[0][1])
    steps = {}
    for polygon in (first, second):
        for edge in polygon.edges:
            slope = edge_slope(edge)
            (a1, b1), (a2, b2) = edge
            da, db = steps.get(slope, (0, 0))
            steps[slope] = (da + a2 - a1, db + b2 - b1)
    vertices = [start]
    for slope in sorted(steps):
        da, db = steps[slope]
        last = vertices[-1]
        vertices.append((last[0] + da, last[1] + db))
    return NewtonPolygon(tuple(vertices))


def elementary_decomposition(polygon: NewtonPolygon) -> List[ElementaryPolygon]:
    """Elementary summands of a polygon, ordered by inclination.

    The translation part is carried by ``[a, inf]`` and ``[inf, b]``
    summands.
    """
    parts = []
    first, last = polygon.vertices[0], polygon.vertices[-1]
    if first[0] > 0:
        parts.append(ElementaryPolygon(first[0], INF))
    for (a1, b1), (a2, b2) in polygon.edges:
        parts.append(ElementaryPolygon(a2 - a1, b1 - b2))
    if last[1] > 0:
        parts.append(ElementaryPolygon(INF, last[1]))
    return parts


def sum_of(parts: Iterable) -> NewtonPolygon:
    total = NewtonPolygon(((0, 0),))
    for part in parts:
        total = minkowski_sum(total, part)
    return total


def polygon_from_branches(branches: Sequence, aux=None) -> NewtonPolygon:
    """Newton polygon of a reduced curve relative to the cross ``(L, aux)``.

    ``aux`` defaults to the zero series, that is the axis ``Z(y)``.
    """
    aux_series = PuiseuxSeries() if aux is None else (aux.series if isinstance(aux, Branch) else aux)
    if not aux_series.is_zero and (aux_series.index != 1 or aux_series.order < 1):
        raise DomainError("auxiliary branch %s is not smooth and transversal to L" % aux_series)
    parts = []
    for branch in branches:
        series = branch.series if isinstance(branch, Branch) else branch
        contact = coincidence_order(series, aux_series)
        if contact is INF:
            raise DomainError("branch %s equals the auxiliary branch" % series)
        parts.append(ElementaryPolygon(contact, 1).scale(series.index))
    return sum_of(parts)
