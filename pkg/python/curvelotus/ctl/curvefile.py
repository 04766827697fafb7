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

"""Reader for ``.curve`` files.

A curve file is line oriented; ``#`` starts a comment::

    reference Z(x)
    branch C1 = 2x^(3/2)
    branch C2 = x^(7/3)
    fan 3/5 2 5/2
    polynomial y^5 - 4*x^3*y^3 - x^7*y^2 + 4*x^10
    support
        (12,0) -1
        (7,2) 1
    end

The support block and the polynomial line are two spellings of the same
data; a file carries at most one of them.
"""

import hashlib
import logging
import re
from dataclasses import dataclass, field
from typing import List, Optional

from curvelotus.config.defaults import REFERENCE_DISPLAY, REFERENCE_LABEL, RESERVED_LABEL_PATTERN
from curvelotus.core.errors import DomainError, DuplicateBranchError, ParseError
from curvelotus.core.lattice import INF, as_rational
from curvelotus.core.polygon import Support
from curvelotus.core.puiseux import Branch

logger = logging.getLogger("curvelotus.curvefile")

BRANCH_PATTERN = re.compile(r"^branch\s+(?P<label>[A-Za-z][A-Za-z0-9_]*)\s*=\s*(?P<series>.+)$")
REFERENCE_PATTERN = re.compile(r"^reference\s+(?P<name>\S+)$")
FAN_PATTERN = re.compile(r"^fan(?:\s+(?P<slopes>.+))?$")
POLYNOMIAL_PATTERN = re.compile(r"^polynomial\s+(?P<text>.+)$")
POINT_PATTERN = re.compile(r"^\(\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*\)(?:\s+(?P<coeff>\S+))?$")
RESERVED_PATTERN = re.compile(RESERVED_LABEL_PATTERN)


@dataclass
class CurveFile:
    name: str
    text: str
    branches: List[Branch] = field(default_factory=list)
    support: Optional[Support] = None
    fan: Optional[List] = None
    polynomial: Optional[str] = None

    @property
    def digest(self) -> str:
        return "sha256:" + hashlib.sha256(self.text.encode("utf-8")).hexdigest()

    def require_branches(self) -> List[Branch]:
        if not self.branches:
            raise DomainError("%s: no branch declared" % self.name)
        return self.branches

    def require_support(self) -> Support:
        if self.support is None:
            raise DomainError("%s: no support block or polynomial" % self.name)
        return self.support

    def branch(self, label: str) -> Branch:
        for branch in self.branches:
            if branch.label == label:
                return branch
        raise DomainError("%s: no branch labelled %s" % (self.name, label))


class _Reader:

    def __init__(self, name: str, text: str):
        self.curve = CurveFile(name, text)
        self.lineno = 0
        self.points = None
        self.closed = False

    def error(self, message: str) -> ParseError:
        return ParseError("%s:%d: %s" % (self.curve.name, self.lineno, message))

    def read(self) -> CurveFile:
        for self.lineno, raw in enumerate(self.curve.text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if self.points is not None and not self.closed:
                if line == "end":
                    self.closed = True
                    continue
                matched = POINT_PATTERN.match(line)
                if matched:
                    self.point(matched)
                    continue
                self.closed = True
            self.statement(line)
        if self.points is not None:
            self.finish_support()
        return self.curve

    def statement(self, line: str):
        matched = BRANCH_PATTERN.match(line)
        if matched:
            return self.branch(matched.group("label"), matched.group("series"))
        matched = REFERENCE_PATTERN.match(line)
        if matched:
            if matched.group("name") not in (REFERENCE_LABEL, REFERENCE_DISPLAY[REFERENCE_LABEL]):
                raise self.error("the reference branch is always %s" % REFERENCE_DISPLAY[REFERENCE_LABEL])
            return
        matched = FAN_PATTERN.match(line)
        if matched:
            if self.curve.fan is not None:
                raise self.error("fan declared twice")
            self.curve.fan = [self.slope(s) for s in (matched.group("slopes") or "").split()]
            return
        matched = POLYNOMIAL_PATTERN.match(line)
        if matched:
            if self.curve.support is not None or self.points is not None:
                raise self.error("support given twice")
            self.curve.polynomial = matched.group("text")
            self.curve.support = Support.from_polynomial(self.curve.polynomial)
            return
        if line == "support":
            if self.curve.support is not None or self.points is not None:
                raise self.error("support given twice")
            self.points = {}
            return
        raise self.error("cannot parse %r" % line)

    def branch(self, label: str, series: str):
        if RESERVED_PATTERN.match(label):
            raise DuplicateBranchError("%s:%d: %s is reserved for generated names"
                                       % (self.curve.name, self.lineno, label))
        if any(b.label == label for b in self.curve.branches):
            raise DuplicateBranchError("%s:%d: branch %s declared twice" % (self.curve.name, self.lineno, label))
        try:
            self.curve.branches.append(Branch(label, series))
        except ParseError as err:
            raise self.error(str(err))

    def slope(self, text: str):
        try:
            value = as_rational(text)
        except ParseError as err:
            raise self.error(str(err))
        if value is INF or value <= 0:
            raise self.error("slope %s is not positive" % text)
        return value

    def point(self, matched):
        point = (int(matched.group("a")), int(matched.group("b")))
        if point in self.points:
            raise self.error("point %s listed twice" % (point,))
        coefficient = matched.group("coeff")
        if coefficient is None:
            self.points[point] = None
            return
        try:
            value = as_rational(coefficient)
        except ParseError as err:
            raise self.error(str(err))
        if value is INF:
            raise self.error("infinite coefficient")
        self.points[point] = value

    def finish_support(self):
        values = set(v is None for v in self.points.values())
        if len(values) > 1:
            raise ParseError("%s: support mixes points with and without coefficients" % self.curve.name)
        if not self.points:
            raise ParseError("%s: empty support block" % self.curve.name)
        if values == {True}:
            self.curve.support = Support(list(self.points))
        else:
            self.curve.support = Support(self.points)


def parse_curve_file(text: str, name: str = "<string>") -> CurveFile:
    curve = _Reader(name, text).read()
    logger.debug("%s: %d branches, support %s, fan %s", name, len(curve.branches),
                 "yes" if curve.support is not None else "no",
                 "yes" if curve.fan is not None else "no")
    return curve


def load_curve_file(path: str) -> CurveFile:
    try:
        with open(path, encoding="utf-8") as fileobj:
            text = fileobj.read()
    except (OSError, UnicodeDecodeError) as err:
        raise ParseError("cannot read %s: %s" % (path, err))
    return parse_curve_file(text, path)
