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

# Command table of the curvelotus tool. Entries without "val" are
# positional arguments; entries with "val" are switches storing that
# value. "emit" lists the output formats a command can produce.

from curvelotus.config.defaults import EMIT_FORMATS

REPORT_EMIT = EMIT_FORMATS[:2]
GRAPH_EMIT = EMIT_FORMATS[:3]
LOTUS_EMIT = REPORT_EMIT + ("svg",)

CURVE = {
    "name": "curve",
    "required": 1,
    "help": "curve file",
}

TRUNCATE = {
    "name": "truncate",
    "val": True,
    "required": 0,
    "help": "keep only the part independent of the auxiliary branches",
}

argsd = {
    "newton-polygon": {
        "help": "Newton polygon of the curve or of its support block",
        "emit": REPORT_EMIT,
        "args": [CURVE],
    },
    "fan": {
        "help": "Newton fan of the curve or of its support block",
        "emit": REPORT_EMIT,
        "args": [CURVE],
    },
    "check-ndeg": {
        "help": "test the support block for Newton non-degeneracy",
        "emit": REPORT_EMIT,
        "args": [CURVE],
    },
    "resolve": {
        "help": "toroidal pseudo-resolution record",
        "emit": REPORT_EMIT,
        "args": [CURVE],
    },
    "fan-tree": {
        "help": "fan tree of the pseudo-resolution",
        "emit": GRAPH_EMIT,
        "args": [
            CURVE,
            {
                "name": "regularized",
                "val": True,
                "required": 0,
                "help": "insert the rays of the regularized fans",
            },
        ],
    },
    "eggers-wall": {
        "help": "Eggers-Wall tree relative to Z(x)",
        "emit": GRAPH_EMIT,
        "args": [
            CURVE,
            {
                "name": "from-fan-tree",
                "val": True,
                "required": 0,
                "help": "compute the tree from the fan tree of the resolution",
            },
        ],
    },
    "lotus": {
        "help": "lotus of the pseudo-resolution or of a fan",
        "emit": LOTUS_EMIT,
        "args": [CURVE, TRUNCATE],
    },
    "dual-graph": {
        "help": "weighted dual graph of the total transform",
        "emit": GRAPH_EMIT,
        "args": [CURVE, TRUNCATE],
    },
    "enriques": {
        "help": "Enriques diagram of the blown up points",
        "emit": GRAPH_EMIT,
        "args": [CURVE],
    },
    "proximity": {
        "help": "proximity graph of the blown up points",
        "emit": GRAPH_EMIT,
        "args": [CURVE],
    },
    "intersect": {
        "help": "intersection number of two branches",
        "emit": REPORT_EMIT,
        "args": [
            CURVE,
            {
                "name": "first",
                "required": 1,
                "help": "branch label, or L for Z(x)",
            },
            {
                "name": "second",
                "required": 1,
                "help": "branch label, or L for Z(x)",
            },
        ],
    },
    "regularize": {
        "help": "minimal regular refinement of a fan",
        "emit": REPORT_EMIT,
        "args": [CURVE],
    },
}
