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

# Install-time defaults. Command line flags override the ones that are
# exposed as flags.

VERSION = "1.0.0"

# Bumped whenever the layout of JSON reports changes.
REPORT_SCHEMA = 1

EMIT_FORMATS = ("text", "json", "dot", "svg")
DEFAULT_EMIT = "text"

# Strategies for choosing the auxiliary smooth branch at each point
# blown up by a Newton modification.
AUX_STRATEGIES = ("truncation",)
DEFAULT_AUX_STRATEGY = "truncation"

# Names of the two germs of the initial cross.
REFERENCE_LABEL = "L"
REFERENCE_DUAL_LABEL = "L1"

# Generated names: reference and auxiliary branches, exceptional divisors
# and regularization rays. Curve branches may not use them.
RESERVED_LABEL_PATTERN = r"^(L|E|R)\d*$"

REFERENCE_DISPLAY = {
    "L": "Z(x)",
    "L1": "Z(y)",
}

SVG_SCALE = 120.0
SVG_PETAL_HEIGHT = 0.8
