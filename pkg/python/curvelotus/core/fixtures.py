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

"""Reference curves and seeded random generators shared by the tests."""

import random
from fractions import Fraction
from math import gcd
from typing import Dict, List

from curvelotus.core.lattice import INF
from curvelotus.core.puiseux import Branch, PuiseuxSeries, coincidence_order, parse_series

# Seven branches resolved over three levels of Newton modifications.
RUNNING_EXAMPLE = {
    "C1": "x^(5/2)",
    "C2": "x^2",
    "C3": "-x^2",
    "C4": "x^(3/5) + x^(3/4)",
    "C5": "x^(3/5) + x^(11/15)",
    "C6": "2x^(3/5) + x^(6/5)",
    "C7": "2x^(3/5) + x^(14/15) + x^(29/30)",
}

RUNNING_AUXILIARIES = ["0", "x^(3/5)", "2x^(3/5)", "2x^(3/5) + x^(14/15)"]

EGGERS_WALL_EXAMPLE = {
    "C1": "x^(7/2) - x^4 + 2x^(17/4) + x^(14/3)",
    "C2": "x^(5/2) + x^(8/3)",
    "C3": "x^2",
}

# Roots of y^2 - 4x^3 and y^3 - x^7.
TWO_BRANCH_EXAMPLE = {
    "C1": "2x^(3/2)",
    "C2": "x^(7/3)",
}

CUSP = {"C1": "x^(3/2)"}

# -x^12 + x^14 + x^7y^2 + 2x^5y^3 - x^10y^3 + x^3y^4 + 3x^7y^4 + y^9
DEGENERATE_SUPPORT = {
    (12, 0): -1, (14, 0): 1, (7, 2): 1, (5, 3): 2,
    (10, 3): -1, (3, 4): 1, (7, 4): 3, (0, 9): 1,
}

# (y^2 - 4x^3)(y^3 - x^7)
PRODUCT_SUPPORT = {(0, 5): 1, (3, 3): -4, (7, 2): -1, (10, 0): 4}


def branches(table: Dict[str, str]) -> List[Branch]:
    return [Branch(label, parse_series(text)) for label, text in table.items()]


def _coefficient(rng: random.Random) -> Fraction:
    return rng.choice([Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2)])


def random_normal_form(rng: random.Random, max_pairs=3, max_index=12) -> PuiseuxSeries:
    """A branch all of whose terms are characteristic, of non integral order."""
    terms = []
    exponent = Fraction(0)
    index = 1
    for step in range(rng.randint(1, max_pairs)):
        choices = [c for c in range(2, 5) if index * c <= max_index]
        if not choices:
            break
        c = rng.choice(choices)
        d = rng.choice([d for d in range(1, 2 * c + 2) if gcd(d, c) == 1])
        index *= c
        exponent += Fraction(d, index)
        terms.append((exponent, _coefficient(rng)))
    return PuiseuxSeries(terms)


def random_series(rng: random.Random, max_index=6, max_terms=4) -> PuiseuxSeries:
    n = rng.randint(1, max_index)
    count = rng.randint(1, max_terms)
    numerators = rng.sample(range(1, 3 * n + 1), min(count, 3 * n))
    return PuiseuxSeries([(Fraction(k, n), _coefficient(rng)) for k in numerators])


def random_relative(rng: random.Random, series: PuiseuxSeries, max_index=6) -> PuiseuxSeries:
    """A series sharing a random initial part with ``series``."""
    keep = rng.randint(0, len(series))
    head = list(series.truncated(keep).terms)
    start = head[-1][0] if head else Fraction(0)
    n = rng.randint(1, max_index)
    tail = []
    for k in sorted(rng.sample(range(1, 2 * n + 1), rng.randint(1, 2))):
        tail.append((start + Fraction(k, n), _coefficient(rng)))
    return PuiseuxSeries(head + tail)


def random_curve(rng: random.Random, size=4, max_index=6) -> List[Branch]:
    """Pairwise distinct branches, most of them sharing initial parts."""
    pool = [random_series(rng, max_index=max_index)]
    attempts = 0
    while len(pool) < size and attempts < 50 * size:
        attempts += 1
        if rng.random() < 0.7:
            candidate = random_relative(rng, rng.choice(pool), max_index=max_index)
        else:
            candidate = random_series(rng, max_index=max_index)
        if candidate.index > max_index * max_index:
            continue
        if all(coincidence_order(candidate, other) is not INF for other in pool):
            pool.append(candidate)
    return [Branch("C%d" % (k + 1), s) for k, s in enumerate(pool)]
