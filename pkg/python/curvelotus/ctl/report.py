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

"""Reports produced by the commands and their text and JSON renderings.

JSON output is wrapped in an envelope carrying the schema version, the
command, the library version and a digest of the input file. Exact values
travel as ``"p/q"`` strings.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List

try:
    import simplejson as json
except ImportError:
    import json

from curvelotus.config.defaults import REPORT_SCHEMA, VERSION
from curvelotus.core.errors import DomainError, InvariantViolation
from curvelotus.core.lattice import INF, format_rational
from curvelotus.ctl.dot import emit_dot
from curvelotus.ctl.svg import emit_svg


def rational(value) -> str:
    return format_rational(value)


def rationals(values) -> List[str]:
    return [format_rational(v) for v in values]


def _check_exact(value, where="result"):
    if isinstance(value, float):
        raise InvariantViolation("inexact value %r in %s" % (value, where))
    if isinstance(value, Fraction) or value is INF:
        raise InvariantViolation("unformatted rational %s in %s" % (value, where))
    if isinstance(value, dict):
        for key, item in value.items():
            _check_exact(item, "%s.%s" % (where, key))
    elif isinstance(value, (list, tuple)):
        for n, item in enumerate(value):
            _check_exact(item, "%s[%d]" % (where, n))


@dataclass
class Report:
    """Result of one command.

    ``artifact`` holds the object the DOT and SVG emitters draw.
    """

    command: str
    digest: str
    result: dict
    text: List[str] = field(default_factory=list)
    artifact: Any = None
    version: str = VERSION

    def envelope(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "version": self.version,
            "input_digest": self.digest,
            "result": self.result,
        }

    def to_json(self) -> str:
        envelope = self.envelope()
        _check_exact(envelope)
        return json.dumps(envelope, indent=2, sort_keys=True, separators=(",", ": ")) + "\n"

    def to_text(self) -> str:
        return "".join(line + "\n" for line in self.text)


def render(report: Report, emit: str) -> str:
    if emit == "text":
        return report.to_text()
    if emit == "json":
        return report.to_json()
    if emit == "dot":
        return emit_dot(report.artifact)
    if emit == "svg":
        return emit_svg(report.artifact)
    raise DomainError("unknown output format %s" % emit)
