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

"""Toroidal pseudo-resolution of a curve by iterated Newton modifications.

The curve is given by its branches. Each level blows up, through a Newton
modification, the points where strict transforms still meet the boundary
in a non toroidal way. Only the combinatorics are kept: crosses, their
Newton fans, the auxiliary smooth branches and the renormalized series.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from curvelotus.config.defaults import (
    AUX_STRATEGIES, DEFAULT_AUX_STRATEGY, REFERENCE_DUAL_LABEL, REFERENCE_LABEL,
    RESERVED_LABEL_PATTERN,
)
from curvelotus.core.errors import DomainError, DuplicateBranchError, InvariantViolation
from curvelotus.core.ewtree import EWTree, check_distinct
from curvelotus.core.lattice import (
    INF, Cone, Extended, format_rational, hj_expand, regularize,
)
from curvelotus.core.puiseux import (
    Branch, PuiseuxSeries, coincidence_order, normalizing_shift, orbit_representative,
    renormalize, same_orbit,
)

logger = logging.getLogger("curvelotus.engine")


@dataclass(frozen=True)
class Cross:
    """Two transversal smooth germs ``(a, b)`` through a point of ``host``."""

    id: int
    a: str
    b: str
    host: Optional[str]
    level: int
    terminal: bool = False


@dataclass(frozen=True)
class Trunk:
    """The segment ``[a, b]`` of a cross marked by the slopes of its fan."""

    id: int
    cross: int
    a: str
    b: str
    marks: Tuple[Tuple[Fraction, str], ...] = ()

    @property
    def slopes(self) -> List[Fraction]:
        return [slope for slope, _ in self.marks]

    @property
    def labels(self) -> List[str]:
        return [label for _, label in self.marks]


@dataclass(frozen=True)
class TraceStep:
    cross: int
    slope: Fraction
    divisor: str
    shift: int


@dataclass
class ResolutionRecord:
    branches: Tuple[Branch, ...]
    strategy: str = DEFAULT_AUX_STRATEGY
    auxiliaries: Dict[str, PuiseuxSeries] = field(default_factory=dict)
    crosses: List[Cross] = field(default_factory=list)
    trunks: List[Trunk] = field(default_factory=list)
    fans: Dict[int, Tuple[Fraction, ...]] = field(default_factory=dict)
    active: Dict[int, Tuple[Tuple[str, PuiseuxSeries], ...]] = field(default_factory=dict)
    traces: Dict[str, List[TraceStep]] = field(default_factory=dict)
    divisors: Dict[str, Tuple[int, Fraction]] = field(default_factory=dict)

    @property
    def levels(self) -> int:
        return 1 + max(c.level for c in self.crosses if not c.terminal)

    @property
    def membranes(self) -> List[Cross]:
        return [c for c in self.crosses if not c.terminal]

    @property
    def arrows(self) -> List[Cross]:
        return [c for c in self.crosses if c.terminal]

    def trunk_of(self, cross_id: int) -> Trunk:
        for trunk in self.trunks:
            if trunk.cross == cross_id:
                return trunk
        raise DomainError("no trunk for cross %d" % cross_id)

    def add_cross(self, a, b, host, level, terminal=False) -> Cross:
        cross = Cross(len(self.crosses), a, b, host, level, terminal)
        self.crosses.append(cross)
        return cross


class _State:
    """Progress of one branch through the levels."""

    __slots__ = ("label", "original", "current", "product", "consumed")

    def __init__(self, branch: Branch):
        self.label = branch.label
        self.original = branch.series
        self.current = branch.series
        self.product = 1
        self.consumed = 0


def _orbit_groups(states: List[_State], slope: Fraction) -> List[List[_State]]:
    groups = []
    for state in states:
        for group in groups:
            if same_orbit(group[0].current.leading_coefficient, state.current.leading_coefficient, slope):
                group.append(state)
                break
        else:
            groups.append([state])
    groups.sort(key=lambda g: orbit_representative(g[0].current.leading_coefficient, slope).sort_key())
    return groups


def pseudo_resolve(branches: Sequence[Branch], strategy: str = DEFAULT_AUX_STRATEGY) -> ResolutionRecord:
    """Run the Newton modification algorithm on the curve with these branches.

    The crosses are processed level by level. At each cross the fan is
    made of the orders of the active series, branches sharing a ray are
    split by their leading coefficient orbit, and every group that is not
    yet toroidal gets a new cross made of the exceptional divisor and an
    auxiliary smooth branch.
    """
    branches = list(branches)
    if not branches:
        raise DomainError("a curve needs at least one branch")
    if strategy not in AUX_STRATEGIES:
        raise DomainError("unknown auxiliary branch strategy %r" % strategy)
    for branch in branches:
        if re.match(RESERVED_LABEL_PATTERN, branch.label):
            raise DuplicateBranchError("branch label %s is reserved for generated names" % branch.label)
    check_distinct(branches)

    record = ResolutionRecord(branches=tuple(branches), strategy=strategy)
    record.traces = {b.label: [] for b in branches}
    axis = next((b.label for b in branches if b.series.is_zero), None)
    if axis is None:
        axis = REFERENCE_DUAL_LABEL
        record.auxiliaries[axis] = PuiseuxSeries()
    aux_count = 1

    root = record.add_cross(REFERENCE_LABEL, axis, None, 0)
    queue = deque([(root, [_State(b) for b in branches if not b.series.is_zero])])
    divisor_count = 0
    while queue:
        cross, states = queue.popleft()
        slopes = sorted({s.current.order for s in states})
        record.active[cross.id] = tuple((s.label, s.current) for s in states)
        record.fans[cross.id] = tuple(slopes)
        marks = []
        for slope in slopes:
            divisor_count += 1
            marks.append((slope, "E%d" % divisor_count))
        record.trunks.append(Trunk(len(record.trunks), cross.id, cross.a, cross.b, tuple(marks)))
        logger.debug("cross %d (%s, %s) at level %d has fan %s", cross.id, cross.a, cross.b,
                     cross.level, " ".join(format_rational(s) for s in slopes))

        by_slope = {slope: [s for s in states if s.current.order == slope] for slope, _ in marks}
        for slope, divisor in marks:
            record.divisors[divisor] = (cross.id, slope)
            for group in _orbit_groups(by_slope[slope], slope):
                alpha = group[0].current.leading_coefficient
                for state in group:
                    shift = normalizing_shift(state.current.leading_coefficient, slope, alpha)
                    state.original = state.original.conjugate(shift * state.product)
                    state.current = renormalize(state.current, slope, alpha)
                    state.product *= slope.denominator
                    state.consumed += 1
                    record.traces[state.label].append(TraceStep(cross.id, slope, divisor, shift))

                if len(group) == 1 and (group[0].current.is_zero or group[0].current.index == 1):
                    arrow = record.add_cross(divisor, group[0].label, divisor, cross.level + 1, terminal=True)
                    record.trunks.append(Trunk(len(record.trunks), arrow.id, arrow.a, arrow.b))
                    continue

                finished = [s for s in group if s.current.is_zero]
                if finished:
                    other = finished[0].label
                else:
                    aux_count += 1
                    other = "L%d" % aux_count
                    record.auxiliaries[other] = group[0].original.truncated(group[0].consumed)
                child = record.add_cross(divisor, other, divisor, cross.level + 1)
                queue.append((child, [s for s in group if not s.current.is_zero]))

    logger.info("resolved %d branches in %d levels with %d auxiliary branches",
                len(branches), record.levels, len(record.auxiliaries))
    return record


def depth(record: ResolutionRecord, label: str) -> int:
    """Number of crosses met by a branch, its terminal one included."""
    return len(record.traces[label]) + 1


def verify_record(record: ResolutionRecord):
    """Raise ``InvariantViolation`` when the record is not consistent."""
    for trunk in record.trunks:
        slopes = trunk.slopes
        if any(s <= 0 for s in slopes) or slopes != sorted(set(slopes)):
            raise InvariantViolation("trunk %d has marks out of order" % trunk.id)
    endpoints = {c.b for c in record.crosses}
    for branch in record.branches:
        if branch.label not in endpoints:
            raise InvariantViolation("branch %s does not terminate" % branch.label)
        if not branch.series.is_zero and not record.traces[branch.label]:
            raise InvariantViolation("branch %s was never modified" % branch.label)
    for label, series in record.auxiliaries.items():
        if series.is_zero:
            continue
        if not any(coincidence_order(series, b.series) > series.exponents[-1] for b in record.branches):
            raise InvariantViolation("auxiliary %s is not a truncation of a branch" % label)


class FanTree:
    """Trunks glued along their common labels, rooted at ``L``.

    Node attributes: ``slope`` on the trunk the node belongs to, ``trunk``
    and ``kind`` (reference, divisor, regularization, auxiliary or
    branch). Edges carry the trunk they lie on.
    """

    def __init__(self, graph: nx.DiGraph, trunks: Sequence[Trunk]):
        self.graph = graph
        self.trunks = list(trunks)
        self.root = REFERENCE_LABEL

    def slope(self, node) -> Extended:
        return self.graph.nodes[node]["slope"]

    def kind(self, node) -> str:
        return self.graph.nodes[node]["kind"]

    def trunk(self, node) -> Optional[int]:
        return self.graph.nodes[node]["trunk"]

    def path(self, node) -> List[str]:
        return nx.shortest_path(self.graph, self.root, node)

    def path_slopes(self, node) -> List[Fraction]:
        """Slopes of the points where the geodesic from ``L`` changes trunk."""
        path = self.path(node)
        slopes = []
        for before, here, after in zip(path, path[1:], path[2:]):
            if self.graph.edges[before, here]["trunk"] != self.graph.edges[here, after]["trunk"]:
                slopes.append(self.slope(here))
        return slopes

    def __len__(self):
        return self.graph.number_of_nodes()


def _kind(record: ResolutionRecord, label: str) -> str:
    if label == REFERENCE_LABEL:
        return "reference"
    if label in record.auxiliaries:
        return "auxiliary"
    if label in record.traces:
        return "branch"
    return "divisor"


def regularized_trunks(record: ResolutionRecord) -> List[Trunk]:
    """Trunks with the rays of the regularization of each fan inserted.

    New points are named ``R1, R2, ...`` in order of cross and slope.
    """
    trunks = []
    count = 0
    for trunk in record.trunks:
        named = dict(trunk.marks)
        marks = []
        for slope in regularize(trunk.slopes):
            if slope not in named:
                count += 1
                named[slope] = "R%d" % count
            marks.append((slope, named[slope]))
        trunks.append(Trunk(trunk.id, trunk.cross, trunk.a, trunk.b, tuple(marks)))
    return trunks


def fan_tree(record: ResolutionRecord, regularized: bool = False) -> FanTree:
    trunks = regularized_trunks(record) if regularized else list(record.trunks)
    graph = nx.DiGraph()
    graph.add_node(REFERENCE_LABEL, slope=Fraction(0), trunk=None, kind="reference")
    for trunk in trunks:
        previous = trunk.a
        for slope, label in trunk.marks:
            kind = "divisor" if label in record.divisors else "regularization"
            graph.add_node(label, slope=slope, trunk=trunk.id, kind=kind)
            graph.add_edge(previous, label, trunk=trunk.id)
            previous = label
        graph.add_node(trunk.b, slope=INF, trunk=trunk.id, kind=_kind(record, trunk.b))
        graph.add_edge(previous, trunk.b, trunk=trunk.id)
    if not nx.is_arborescence(graph):
        raise InvariantViolation("the glued trunks do not form a rooted tree")
    return FanTree(graph, trunks)


def ew_from_fan_tree(tree: FanTree) -> EWTree:
    """The Eggers-Wall tree carried by the fan tree.

    On the trunk starting at ``A`` a point of slope ``s`` gets
    ``e = e(A) + s / I``, ``c = c(A) + s / I^2`` and ``i = I``, where ``I``
    is the product of the denominators of the slopes at which the geodesic
    from ``L`` changes trunk before reaching it.
    """
    scale = {}

    def trunk_scale(trunk: Trunk) -> int:
        if trunk.id not in scale:
            if trunk.a == tree.root:
                scale[trunk.id] = 1
            else:
                owner = tree.trunks[tree.trunk(trunk.a)]
                scale[trunk.id] = trunk_scale(owner) * Fraction(tree.slope(trunk.a)).denominator
        return scale[trunk.id]

    graph = nx.DiGraph()
    graph.add_node(tree.root, e=Fraction(0), i=1, c=Fraction(0), labels=[tree.root])
    for node in nx.topological_sort(tree.graph):
        if node == tree.root:
            continue
        trunk = tree.trunks[tree.trunk(node)]
        start = graph.nodes[trunk.a]
        factor = trunk_scale(trunk)
        slope = tree.slope(node)
        if slope is INF:
            e = c = INF
        else:
            e = start["e"] + slope / factor
            c = start["c"] + slope / (factor * factor)
        graph.add_node(node, e=e, i=factor, c=c, labels=[node])
    graph.add_edges_from(tree.graph.edges)
    return EWTree(graph, tree.root)


@dataclass(frozen=True)
class SingularPoint:
    trunk: int
    slopes: Tuple[Extended, Extended]
    determinant: int
    hj: Tuple[int, ...]


def singular_points(record: ResolutionRecord) -> List[SingularPoint]:
    """Non regular cones between consecutive rays of each trunk."""
    points = []
    for trunk in record.trunks:
        rays = [Fraction(0)] + trunk.slopes + [INF]
        for low, high in zip(rays, rays[1:]):
            cone = Cone.between(low, high)
            if not cone.is_regular:
                n, q = cone.quotient_type
                points.append(SingularPoint(trunk.id, (low, high), n, tuple(hj_expand(n, q))))
    return points


def fold_slopes(slopes: Sequence[Fraction]) -> List[Tuple[int, int]]:
    """Merge the steps of integral slope into the following step.

    The result is comparable with the Newton pairs of the branch.
    """
    pairs = []
    carry = Fraction(0)
    for slope in slopes:
        c, d = slope.denominator, slope.numerator
        if c == 1:
            carry += d
            continue
        pairs.append((c, d + int(c * carry)))
        carry = Fraction(0)
    return pairs
