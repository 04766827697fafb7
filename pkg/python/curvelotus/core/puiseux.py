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

"""Newton-Puiseux series with exact phased rational coefficients."""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple, Union

from curvelotus.core.errors import DomainError, ParseError
from curvelotus.core.lattice import INF, Extended, format_rational

logger = logging.getLogger("curvelotus.puiseux")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class PhasedRational:
    """The complex number ``magnitude * exp(2 pi i phase)``.

    Magnitudes are positive rationals and phases live in [0, 1). The
    zero value has magnitude 0 and phase 0. Products, powers and
    equality are exact. There is deliberately no addition.
    """

    magnitude: Fraction
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        magnitude = Fraction(self.magnitude)
        phase = Fraction(self.phase)
        if magnitude < 0:
            raise DomainError("negative magnitude %s" % magnitude)
        phase = Fraction(0) if magnitude == 0 else phase - (phase.numerator // phase.denominator)
        object.__setattr__(self, "magnitude", magnitude)
        object.__setattr__(self, "phase", phase)

    @classmethod
    def from_rational(cls, value) -> "PhasedRational":
        value = Fraction(value)
        if value < 0:
            return cls(-value, Fraction(1, 2))
        return cls(value)

    @property
    def is_zero(self) -> bool:
        return self.magnitude == 0

    @property
    def is_real(self) -> bool:
        return self.phase in (0, Fraction(1, 2))

    def to_rational(self) -> Fraction:
        if not self.is_real:
            raise DomainError("coefficient %s is not real" % self)
        return -self.magnitude if self.phase else self.magnitude

    def __mul__(self, other):
        if not isinstance(other, PhasedRational):
            other = PhasedRational.from_rational(other)
        return PhasedRational(self.magnitude * other.magnitude, self.phase + other.phase)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if self.is_zero:
            if exponent <= 0:
                raise DomainError("zero to a non-positive power")
            return self
        return PhasedRational(self.magnitude ** exponent, self.phase * exponent)

    def __neg__(self):
        return self.rotate(Fraction(1, 2))

    def rotate(self, turn) -> "PhasedRational":
        """Multiply by ``exp(2 pi i turn)``."""
        return PhasedRational(self.magnitude, self.phase + Fraction(turn))

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.phase, self.magnitude)

    def __str__(self):
        if self.is_real:
            return format_rational(self.to_rational())
        return "%s*e(%s)" % (format_rational(self.magnitude), format_rational(self.phase))


ZERO = PhasedRational(Fraction(0))
ONE = PhasedRational(Fraction(1))

Coefficient = Union[PhasedRational, int, Fraction]


def _as_coefficient(value: Coefficient) -> PhasedRational:
    if isinstance(value, PhasedRational):
        return value
    return PhasedRational.from_rational(value)


class PuiseuxSeries:
    """A finite sum of terms ``a * x^e`` with rational exponents ``e >= 0``."""

    __slots__ = ("_terms", "_index")

    def __init__(self, terms: Union[Dict, Iterable[Tuple]] = ()):
        if isinstance(terms, dict):
            terms = terms.items()
        collected = {}
        for exponent, coefficient in terms:
            exponent = Fraction(exponent)
            coefficient = _as_coefficient(coefficient)
            if exponent < 0:
                raise DomainError("negative exponent %s" % exponent)
            if coefficient.is_zero:
                raise DomainError("zero coefficient at exponent %s" % exponent)
            if exponent in collected:
                raise DomainError("duplicate exponent %s" % exponent)
            collected[exponent] = coefficient
        self._terms = tuple(sorted(collected.items()))
        self._index = reduce(_lcm, (e.denominator for e, _ in self._terms), 1)

    @property
    def terms(self) -> Tuple[Tuple[Fraction, PhasedRational], ...]:
        return self._terms

    @property
    def exponents(self) -> List[Fraction]:
        return [e for e, _ in self._terms]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def order(self) -> Extended:
        if not self._terms:
            return INF
        return self._terms[0][0]

    @property
    def index(self) -> int:
        """Least common multiple of the exponent denominators."""
        return self._index

    @property
    def leading_coefficient(self) -> PhasedRational:
        if not self._terms:
            return ZERO
        return self._terms[0][1]

    def coefficient(self, exponent) -> PhasedRational:
        exponent = Fraction(exponent)
        for e, a in self._terms:
            if e == exponent:
                return a
        return ZERO

    def truncated(self, count: int) -> "PuiseuxSeries":
        """The series of the first ``count`` terms."""
        return PuiseuxSeries(self._terms[:count])

    def below(self, exponent) -> "PuiseuxSeries":
        return PuiseuxSeries([(e, a) for e, a in self._terms if e < exponent])

    def conjugate(self, shift) -> "PuiseuxSeries":
        """Apply ``x^(1/n) -> exp(2 pi i shift / n) x^(1/n)``.

        The coefficient of ``x^e`` is rotated by ``shift * e`` turns; for
        an integer shift this is a Galois conjugate of the series.
        """
        shift = Fraction(shift)
        return PuiseuxSeries([(e, a.rotate(shift * e)) for e, a in self._terms])

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return "PuiseuxSeries(%r)" % (str(self),)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, a in self._terms:
            if a.is_real:
                value = a.to_rational()
                sign = "-" if value < 0 else "+"
                magnitude = abs(value)
                coeff = "" if magnitude == 1 else format_rational(magnitude)
            else:
                sign = "+"
                coeff = "(%s)" % a
            if e == 0:
                monomial = coeff or "1"
            elif e == 1:
                monomial = coeff + "x"
            elif e.denominator == 1:
                monomial = "%sx^%d" % (coeff, e.numerator)
            else:
                monomial = "%sx^(%d/%d)" % (coeff, e.numerator, e.denominator)
            parts.append((sign, monomial))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, monomial in parts[1:]:
            text += " %s %s" % (sign, monomial)
        return text


_TERM_RE = re.compile(
    r"(?P<coeff>\d+(?:/\d+)?)?\*?x"
    r"(?:\^(?:(?P<int>\d+)|\((?P<num>\d+)/(?P<den>\d+)\)))?")


def parse_series(text: str) -> PuiseuxSeries:
    """Parse ``term (("+"|"-") term)*`` where a term is ``coeff? x power?``.

    ``"0"`` denotes the zero series.
    """
    source = re.sub(r"\s+", "", text)
    if not source:
        raise ParseError("empty series")
    if source == "0":
        return PuiseuxSeries()
    if "i" in source:
        raise ParseError("imaginary coefficients are not supported: %r" % text)
    terms = []
    seen = set()
    pos = 0
    while pos < len(source):
        negative = False
        if source[pos] in "+-":
            negative = source[pos] == "-"
            pos += 1
        elif pos:
            raise ParseError("offset %d: expected '+' or '-' in %r" % (pos, text))
        matched = _TERM_RE.match(source, pos)
        if not matched or matched.end() == pos:
            raise ParseError("offset %d: expected a term in %r" % (pos, text))
        coeff = Fraction(1)
        if matched.group("coeff"):
            num, _, den = matched.group("coeff").partition("/")
            if den and int(den) == 0:
                raise ParseError("offset %d: zero denominator in %r" % (pos, text))
            coeff = Fraction(int(num), int(den) if den else 1)
            if coeff == 0:
                raise ParseError("offset %d: zero coefficient in %r" % (pos, text))
        if matched.group("int") is not None:
            exponent = Fraction(int(matched.group("int")))
        elif matched.group("num") is not None:
            if int(matched.group("den")) == 0:
                raise ParseError("offset %d: zero denominator in %r" % (pos, text))
            exponent = Fraction(int(matched.group("num")), int(matched.group("den")))
        else:
            exponent = Fraction(1)
        if exponent in seen:
            raise ParseError("duplicate exponent %s in %r" % (format_rational(exponent), text))
        seen.add(exponent)
        terms.append((exponent, PhasedRational.from_rational(-coeff if negative else coeff)))
        pos = matched.end()
    return PuiseuxSeries(terms)


def order(series: PuiseuxSeries) -> Extended:
    return series.order


class Branch:
    """A labelled Newton-Puiseux root standing for one branch.

    The zero series is accepted and stands for the axis ``Z(y)``.
    """

    __slots__ = ("label", "series")

    def __init__(self, label: str, series: Union[PuiseuxSeries, str]):
        if isinstance(series, str):
            series = parse_series(series)
        if not series.is_zero and series.order <= 0:
            raise DomainError("branch %s must have positive order" % label)
        self.label = label
        self.series = series

    @property
    def index(self) -> int:
        return self.series.index

    @property
    def order(self) -> Extended:
        return self.series.order

    def __eq__(self, other):
        if not isinstance(other, Branch):
            return NotImplemented
        return self.label == other.label and self.series == other.series

    def __hash__(self):
        return hash((self.label, self.series))

    def __repr__(self):
        return "Branch(%r, %r)" % (self.label, str(self.series))


def _series_of(value) -> PuiseuxSeries:
    if isinstance(value, Branch):
        return value.series
    if isinstance(value, str):
        return parse_series(value)
    return value


def characteristic_exponents(branch) -> List[Fraction]:
    """Exponents at which the running lcm of denominators jumps."""
    series = _series_of(branch)
    result = []
    running = 1
    for e, _ in series.terms:
        grown = _lcm(running, e.denominator)
        if grown > running:
            result.append(e)
            running = grown
    return result


def index_below(branch, exponent) -> int:
    """lcm of the denominators of the characteristic exponents below ``exponent``."""
    running = 1
    for e in characteristic_exponents(branch):
        if e >= exponent:
            break
        running = _lcm(running, e.denominator)
    return running


def difference_order(first, second) -> Extended:
    """Order of ``first - second`` computed term by term."""
    a = dict(_series_of(first).terms)
    b = dict(_series_of(second).terms)
    for e in sorted(set(a) | set(b)):
        if a.get(e, ZERO) != b.get(e, ZERO):
            return e
    return INF


def _solve_linear(a: int, t: Fraction, b: int) -> Optional[int]:
    """Residue ``j`` mod ``b`` with ``j * a / b == t`` mod 1, if any."""
    rhs = t * b
    if rhs.denominator != 1:
        return None
    return (int(rhs) * pow(a, -1, b)) % b if b > 1 else 0


def _merge_congruence(r1: int, m1: int, r2: int, m2: int) -> Optional[Tuple[int, int]]:
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    step = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * step) % lcm, lcm


def coincidence_order(first, second) -> Extended:
    """Maximal order of ``first - g(second)`` over the Galois conjugates g.

    The admissible conjugation shifts ``j`` form a coset ``j = r mod m``
    which is narrowed at each common exponent. The answer is the first
    exponent at which no admissible shift survives.
    """
    a = dict(_series_of(first).terms)
    b = dict(_series_of(second).terms)
    residue, modulus = 0, 1
    for e in sorted(set(a) | set(b)):
        if e not in a or e not in b:
            return e
        alpha, beta = a[e], b[e]
        if alpha.magnitude != beta.magnitude:
            return e
        r = _solve_linear(e.numerator, alpha.phase - beta.phase, e.denominator)
        if r is None:
            return e
        merged = _merge_congruence(residue, modulus, r, e.denominator)
        if merged is None:
            return e
        residue, modulus = merged
    return INF


def newton_pairs(branch) -> List[Tuple[int, int]]:
    """Pairs ``(c_j, d_j)`` encoding the characteristic exponents."""
    pairs = []
    running = 1
    previous = 0
    for e in characteristic_exponents(branch):
        grown = _lcm(running, e.denominator)
        n = grown // running
        m = e * grown
        if m.denominator != 1:
            raise DomainError("inconsistent characteristic exponent %s" % e)
        m = int(m)
        pairs.append((n, m - n * previous))
        running, previous = grown, m
    return pairs


def _check_slope(slope) -> Tuple[int, int]:
    slope = Fraction(slope)
    if slope <= 0:
        raise DomainError("slope must be positive, got %s" % format_rational(slope))
    return slope.denominator, slope.numerator


def normalizing_shift(leading: PhasedRational, slope, alpha: PhasedRational) -> int:
    """Smallest ``j >= 0`` rotating ``leading`` onto ``alpha`` at ``slope``.

    The conjugation by ``j`` multiplies the term ``x^(d/c)`` by
    ``exp(2 pi i j d / c)``.
    """
    c, d = _check_slope(slope)
    if leading.magnitude != alpha.magnitude:
        raise DomainError("coefficients %s and %s are not in the same orbit" % (leading, alpha))
    r = _solve_linear(d, alpha.phase - leading.phase, c)
    if r is None:
        raise DomainError("coefficients %s and %s are not in the same orbit" % (leading, alpha))
    return r


def same_orbit(first: PhasedRational, second: PhasedRational, slope) -> bool:
    """``first^c == second^c`` for ``slope = d/c``."""
    c, _ = _check_slope(slope)
    return first ** c == second ** c


def orbit_representative(coefficient: PhasedRational, slope) -> PhasedRational:
    """The element of the orbit with the smallest phase."""
    c, _ = _check_slope(slope)
    reduced = coefficient.phase * c
    return PhasedRational(coefficient.magnitude,
                          Fraction(reduced - reduced.numerator // reduced.denominator, c))


def renormalize(series, slope, alpha: Coefficient) -> PuiseuxSeries:
    """Series of the strict transform after the Newton map of ``slope = d/c``.

    The series is first conjugated so that its leading coefficient is
    ``alpha``; the leading term is then dropped and every exponent ``e``
    becomes ``c e - d``. Coefficients are kept.
    """
    series = _series_of(series)
    alpha = _as_coefficient(alpha)
    c, d = _check_slope(slope)
    if series.order != Fraction(d, c):
        raise DomainError("series %s does not have order %s" % (series, format_rational(Fraction(d, c))))
    shift = normalizing_shift(series.leading_coefficient, Fraction(d, c), alpha)
    normalized = series.conjugate(shift)
    return PuiseuxSeries([(c * e - d, a) for e, a in normalized.terms[1:]])


def exceptional_data(branch, slope) -> Tuple[int, int]:
    """Order of vanishing along ``E`` and multiplicity of the strict transform."""
    series = _series_of(branch)
    c, d = _check_slope(slope)
    if series.order != Fraction(d, c):
        raise DomainError("branch of order %s does not meet the divisor of slope %s" %
                          (format_rational(series.order), format_rational(Fraction(d, c))))
    n = series.index
    return d * n, n // c
