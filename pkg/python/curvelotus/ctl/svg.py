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

"""SVG drawings of lotuses.

Each membrane is drawn in its own frame: the lattice vector ``(c, d)`` sits
at ``d / (c + d)`` along the base and at a height growing with ``c + d``,
so every petal is a proper triangle above its base. Membranes created at
a vertex fan out around it, each at half the size of the membrane holding
that vertex.
"""

import logging
import math
import xml.etree.ElementTree as ET
from typing import Dict, Hashable, Tuple, Union

from curvelotus.config.defaults import REFERENCE_DISPLAY, SVG_PETAL_HEIGHT, SVG_SCALE
from curvelotus.core.lattice import LatticeVector
from curvelotus.core.lotus import Lotus, TruncatedLotus

logger = logging.getLogger("curvelotus.svg")

SVG_NAMESPACE = "http://www.w3.org/2000/svg"

Point = Tuple[float, float]


class _Frame:

    def __init__(self, origin: Point, angle: float, length: float):
        self.origin = origin
        self.angle = angle
        self.length = length

    def place(self, vector: LatticeVector) -> Point:
        total = vector.c + vector.d
        x = vector.d / total
        y = SVG_PETAL_HEIGHT * (1 - 1 / total)
        cos, sin = math.cos(self.angle), math.sin(self.angle)
        return (self.origin[0] + self.length * (x * cos - y * sin),
                self.origin[1] + self.length * (x * sin + y * cos))


def _layout(lotus: Lotus):
    positions: Dict[Hashable, Point] = {}
    frames = {}
    placed_by = {}
    children = {}
    for membrane in lotus.membranes[1:]:
        children.setdefault(membrane.a, []).append(membrane.id)

    for membrane in lotus.membranes:
        if membrane.id == 0:
            frame = _Frame((0.0, 0.0), 0.0, 4 * SVG_SCALE)
        else:
            parent = frames[placed_by[membrane.a]]
            siblings = children[membrane.a]
            spread = math.pi / (2 * len(siblings))
            offset = siblings.index(membrane.id) - (len(siblings) - 1) / 2
            frame = _Frame(positions[membrane.a], parent.angle + math.pi / 2 + offset * spread,
                           parent.length / 2)
        frames[membrane.id] = frame
        for key, vector in membrane.coords.items():
            if key not in positions:
                positions[key] = frame.place(vector)
                placed_by[key] = membrane.id
    return positions


def _points(positions, keys) -> str:
    # SVG grows downwards
    return " ".join("%.2f,%.2f" % (positions[k][0], -positions[k][1]) for k in keys)


def _midpoint(positions, u, v) -> Point:
    return ((positions[u][0] + positions[v][0]) / 2, (positions[u][1] + positions[v][1]) / 2)


def _line(parent, start: Point, end: Point, css: str):
    ET.SubElement(parent, "line", {
        "class": css,
        "x1": "%.2f" % start[0], "y1": "%.2f" % -start[1],
        "x2": "%.2f" % end[0], "y2": "%.2f" % -end[1],
        "stroke": "black",
    })


def emit_svg(drawing: Union[Lotus, TruncatedLotus]) -> str:
    truncated = drawing if isinstance(drawing, TruncatedLotus) else None
    lotus = truncated.lotus if truncated else drawing
    positions = _layout(lotus)

    xs = [p[0] for p in positions.values()]
    ys = [-p[1] for p in positions.values()]
    margin = SVG_SCALE / 4
    left, top = min(xs) - margin, min(ys) - margin
    width, height = max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin
    root = ET.Element("svg", {
        "xmlns": SVG_NAMESPACE,
        "version": "1.1",
        "width": "%.0f" % width,
        "height": "%.0f" % height,
        "viewBox": "%.2f %.2f %.2f %.2f" % (left, top, width, height),
    })

    shown = set()
    for membrane in lotus.newton_membranes:
        group = ET.SubElement(root, "g", {"class": "membrane", "id": "membrane-%d" % membrane.id})
        petals = lotus.petals_of(membrane.id)
        if truncated is None:
            if not petals:
                _line(group, positions[membrane.a], positions[membrane.b], "base")
                shown.update((membrane.a, membrane.b))
            for petal in petals:
                ET.SubElement(group, "polygon", {
                    "class": "petal",
                    "points": _points(positions, petal.vertices),
                    "fill": "none",
                    "stroke": "black",
                })
                shown.update(petal.vertices)
            continue
        ids = {p.id for p in petals}
        for piece in truncated.pieces:
            if piece.petal not in ids:
                continue
            petal = lotus.petals[piece.petal]
            middle = _midpoint(positions, petal.left, petal.right)
            if piece.kind == "axis":
                _line(group, positions[petal.apex], middle, "axis")
            else:
                corners = _points(positions, piece.vertices)
                if piece.kind == "semipetal":
                    corners += " %.2f,%.2f" % (middle[0], -middle[1])
                ET.SubElement(group, "polygon", {
                    "class": piece.kind,
                    "points": corners,
                    "fill": "none",
                    "stroke": "black",
                })
            shown.update(piece.vertices)

    for membrane in lotus.arrows:
        _line(root, positions[membrane.a], positions[membrane.b], "arrow")
        shown.update((membrane.a, membrane.b))

    for key in positions:
        if key not in shown:
            continue
        vertex = lotus.vertices[key]
        x, y = positions[key]
        if vertex.marked:
            ET.SubElement(root, "circle", {"cx": "%.2f" % x, "cy": "%.2f" % -y, "r": "3", "fill": "black"})
        text = ET.SubElement(root, "text", {"x": "%.2f" % (x + 4), "y": "%.2f" % (-y - 4), "font-size": "10"})
        text.text = REFERENCE_DISPLAY.get(vertex.label, vertex.label)

    logger.debug("drew %d vertices of %d membranes", len(shown), len(lotus.membranes))
    return ET.tostring(root, encoding="unicode") + "\n"
