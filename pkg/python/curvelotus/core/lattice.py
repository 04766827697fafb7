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

"""Exact rational and rank two lattice primitives.

Slopes, exponents and contact values are ``fractions.Fraction`` values.
The extended value infinity is the ``INF`` singleton, which compares
greater than every rational. A lattice vector ``(c, d)`` has slope
``d / c``, so that ``e1 = (1, 0)`` has slope 0 and ``e2 = (0, 1)`` has
slope ``INF``.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from curvelotus.core.errors import DomainError, ParseError

logger = logging.getLogger("curvelotus.lattice")


class Infinity:
    """The extended value at the end of the non-negative rationals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Infinity, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("curvelotus.INF")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

Extended = Union[Fraction, Infinity]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value) -> Extended:
    """Coerce an int, a Fraction or a ``"p/q"`` string to an exact value.

    The strings ``"inf"`` and ``"oo"`` give ``INF``.
    """
    if value is INF:
        return INF
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if value.strip() in ("inf", "oo", "∞"):
            return INF
        matched = _RATIONAL_RE.match(value)
        if not matched:
            raise ParseError("malformed rational: %r" % value)
        den = int(matched.group(2)) if matched.group(2) else 1
        if den == 0:
            raise ParseError("zero denominator: %r" % value)
        return Fraction(int(matched.group(1)), den)
    raise DomainError("not an exact rational: %r" % (value,))


def format_rational(value: Extended) -> str:
    if value is INF:
        return "inf"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


@dataclass(frozen=True, order=True)
class LatticeVector:
    """A vector ``c * e1 + d * e2`` of the lattice of weights."""

    c: int
    d: int

    def __add__(self, other):
        return LatticeVector(self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return LatticeVector(self.c - other.c, self.d - other.d)

    def scale(self, factor: int) -> "LatticeVector":
        return LatticeVector(factor * self.c, factor * self.d)

    def is_primitive(self) -> bool:
        return gcd(abs(self.c), abs(self.d)) == 1

    def det(self, other: "LatticeVector") -> int:
        return self.c * other.d - self.d * other.c

    @property
    def slope(self) -> Extended:
        if self.c == 0:
            return INF
        return Fraction(self.d, self.c)

    def __str__(self):
        return "(%d,%d)" % (self.c, self.d)


E1 = LatticeVector(1, 0)
E2 = LatticeVector(0, 1)


@dataclass(frozen=True)
class ContinuedFraction:
    """Terms ``[a1, ..., ak]`` of a finite continued fraction.

    The first term may vanish, the others are positive. Expansions are
    canonical: the last term exceeds 1 unless the value is 1 or there is
    a single term.
    """

    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise DomainError("empty continued fraction")
        if terms[0] < 0 or any(t <= 0 for t in terms[1:]):
            raise DomainError("invalid continued fraction terms %s" % (list(terms),))
        if len(terms) > 1 and terms[-1] == 1 and self.value != 1:
            raise DomainError("non canonical continued fraction %s" % (list(terms),))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, index):
        return self.terms[index]

    @property
    def value(self) -> Fraction:
        return _evaluate(self.terms)

    @property
    def petal_count(self) -> int:
        return sum(self.terms)

    def __str__(self):
        return "[%s]" % ",".join(str(t) for t in self.terms)


def _evaluate(terms: Sequence[int]) -> Fraction:
    value = Fraction(terms[-1])
    for term in reversed(terms[:-1]):
        value = term + 1 / value
    return value


def _positive(value, what="value") -> Fraction:
    value = as_rational(value)
    if value is INF or value <= 0:
        raise DomainError("%s must be a positive rational, got %s" %
                          (what, format_rational(value)))
    return value


def cf_expand(value) -> ContinuedFraction:
    """Canonical continued fraction expansion of a positive rational."""
    value = _positive(value)
    num, den = value.numerator, value.denominator
    terms = []
    while den:
        term = num // den
        terms.append(term)
        num, den = den, num - term * den
    return ContinuedFraction(tuple(terms))


def cf_value(cf: Union[ContinuedFraction, Sequence[int]]) -> Fraction:
    terms = list(cf)
    if not terms:
        raise DomainError("empty continued fraction")
    if terms[0] < 0 or any(t <= 0 for t in terms[1:]):
        raise DomainError("invalid continued fraction terms %s" % terms)
    return _evaluate(terms)


def wedge(lam, mu) -> Fraction:
    """The largest rational whose lotus lies in the lotuses of both inputs."""
    a = list(cf_expand(lam))
    b = list(cf_expand(mu))
    j = 0
    while j < min(len(a), len(b)) and a[j] == b[j]:
        j += 1
    if j == len(a):
        return _evaluate(a)
    if j == len(b):
        return _evaluate(b)
    if a[j] > b[j]:
        a, b = b, a
    if len(a) == j + 1:
        return _evaluate(a)
    return _evaluate(a[:j] + [a[j] + 1])


def primitive_of_slope(value) -> LatticeVector:
    """The primitive vector ``p(value)`` on the ray of the given slope."""
    value = as_rational(value)
    if value is INF:
        return E2
    if value < 0:
        raise DomainError("negative slope %s" % format_rational(value))
    return LatticeVector(value.denominator, value.numerator)


def _check_primitive(*vectors: LatticeVector):
    for v in vectors:
        if not v.is_primitive():
            raise DomainError("vector %s is not primitive" % v)


def is_regular_pair(u: LatticeVector, v: LatticeVector) -> bool:
    _check_primitive(u, v)
    return abs(u.det(v)) == 1


@dataclass(frozen=True)
class Cone:
    """The strictly convex cone spanned by ``u`` and ``v``, in this order."""

    u: LatticeVector
    v: LatticeVector

    def __post_init__(self):
        _check_primitive(self.u, self.v)
        if self.u.det(self.v) <= 0:
            raise DomainError("cone %s, %s is not positively oriented" % (self.u, self.v))

    @classmethod
    def between(cls, low, high) -> "Cone":
        return cls(primitive_of_slope(low), primitive_of_slope(high))

    @property
    def determinant(self) -> int:
        return self.u.det(self.v)

    @property
    def is_regular(self) -> bool:
        return self.determinant == 1

    @property
    def quotient_type(self) -> Tuple[int, int]:
        return cone_type(self.u, self.v)


def petal_bases(value) -> List[Tuple[LatticeVector, LatticeVector]]:
    """Bases of the petals of the lotus of a single slope.

    The petals are listed from the base petal ``(e1, e2)`` down to the
    petal whose apex is ``p(value)``. Slopes 0 and infinity have no petals.
    """
    value = as_rational(value)
    if value is INF or value == 0:
        return []
    value = _positive(value, "slope")
    target = primitive_of_slope(value)
    left, right = E1, E2
    bases = []
    while True:
        bases.append((left, right))
        apex = left + right
        if apex == target:
            return bases
        if value < apex.slope:
            right = apex
        else:
            left = apex


def slow_approximations(value) -> List[Fraction]:
    """Slopes of the successive petal apexes of the lotus of ``value``."""
    return [(left + right).slope for left, right in petal_bases(value)]


def regularize(slopes: Iterable) -> List[Fraction]:
    """Interior rays of the minimal regular refinement of a fan.

    The refinement is read off the union of the slow approximation
    sequences of the slopes, which are the apexes of the Newton lotus.
    """
    rays = set()
    for slope in slopes:
        rays.update(slow_approximations(_positive(slope, "slope")))
    return sorted(rays)


def cone_type(u: LatticeVector, v: LatticeVector) -> Tuple[int, int]:
    """Type ``(n, q)`` of the cyclic quotient singularity of cone(u, v).

    ``n`` is the determinant and ``q`` the integer in ``[0, n)`` such that
    ``(v + q u) / n`` is a lattice vector. Regular cones have type (1, 0).
    """
    _check_primitive(u, v)
    n = u.det(v)
    if n <= 0:
        raise DomainError("cone %s, %s is not positively oriented" % (u, v))
    for q in range(n):
        if (v.c + q * u.c) % n == 0 and (v.d + q * u.d) % n == 0:
            return n, q
    raise DomainError("no quotient type for cone %s, %s" % (u, v))


def hj_expand(n: int, q: int) -> List[int]:
    """Hirzebruch-Jung expansion ``n/q = b1 - 1/(b2 - ...)``, all ``bi >= 2``."""
    if n <= 0 or q < 0 or q >= n or (q and gcd(n, q) != 1):
        raise DomainError("invalid quotient type (%d, %d)" % (n, q))
    terms = []
    while q:
        b = -(-n // q)
        terms.append(b)
        n, q = q, b * q - n
    return terms
