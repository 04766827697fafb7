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

"""Newton lotuses, glued lotuses and the graphs read off them.

A lotus is kept combinatorially: petals are triples ``(left, right, apex)``
of vertex keys with ``apex = left + right`` in the lattice coordinates of
their membrane. Vertices of a Newton lotus are keyed by their lattice
vectors; vertices of a glued lotus are keyed by their labels.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from curvelotus.config.defaults import REFERENCE_DUAL_LABEL, REFERENCE_LABEL
from curvelotus.core.engine import ResolutionRecord, regularized_trunks
from curvelotus.core.errors import DomainError, InvariantViolation
from curvelotus.core.lattice import E1, E2, LatticeVector, as_rational, petal_bases, primitive_of_slope

logger = logging.getLogger("curvelotus.lotus")


@dataclass(frozen=True)
class Petal:
    id: int
    membrane: int
    left: Hashable
    right: Hashable
    apex: Hashable
    parent: Optional[int]

    @property
    def vertices(self) -> Tuple[Hashable, Hashable, Hashable]:
        return (self.left, self.right, self.apex)


@dataclass
class Membrane:
    """A Newton lotus in the basis ``(a, b)`` or an arrow ``[a, b]``."""

    id: int
    a: Hashable
    b: Hashable
    kind: str
    slopes: Tuple = ()
    cross: Optional[int] = None
    coords: Dict[Hashable, LatticeVector] = field(default_factory=dict)


@dataclass
class Vertex:
    key: Hashable
    label: str
    kind: str
    basic: bool = False
    marked: bool = False


class Lotus:

    def __init__(self):
        self.vertices: Dict[Hashable, Vertex] = {}
        self.petals: List[Petal] = []
        self.membranes: List[Membrane] = []

    @property
    def base(self) -> Tuple[Hashable, Hashable]:
        return self.membranes[0].a, self.membranes[0].b

    def add_vertex(self, key, label, kind, basic=False, marked=False) -> Vertex:
        vertex = self.vertices.get(key)
        if vertex is None:
            vertex = self.vertices[key] = Vertex(key, label, kind, basic, marked)
        else:
            vertex.basic = vertex.basic or basic
            vertex.marked = vertex.marked or marked
        return vertex

    def petals_of(self, membrane: int) -> List[Petal]:
        return [p for p in self.petals if p.membrane == membrane]

    def is_basic(self, key) -> bool:
        return self.vertices[key].basic

    def is_arrowhead(self, key) -> bool:
        return self.vertices[key].kind == "branch" and not self.vertices[key].basic

    @property
    def apexes(self) -> List[Hashable]:
        return [p.apex for p in self.petals]

    @property
    def arrows(self) -> List[Membrane]:
        return [m for m in self.membranes if m.kind == "arrow"]

    @property
    def newton_membranes(self) -> List[Membrane]:
        return [m for m in self.membranes if m.kind == "newton"]

    def skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for petal in self.petals:
            graph.add_edge(petal.left, petal.right)
            graph.add_edge(petal.left, petal.apex)
            graph.add_edge(petal.right, petal.apex)
        for membrane in self.membranes:
            if not self.petals_of(membrane.id):
                graph.add_edge(membrane.a, membrane.b)
        return graph

    def label(self, key) -> str:
        return self.vertices[key].label


def _add_newton_membrane(lotus: Lotus, slopes: Iterable, a, b,
                         name: Callable[[LatticeVector], Hashable],
                         describe: Callable[[Hashable, LatticeVector], Tuple[str, str]],
                         cross: Optional[int] = None) -> Membrane:
    slopes = sorted({as_rational(s) for s in slopes})
    membrane = Membrane(len(lotus.membranes), a, b, "newton", tuple(slopes), cross)
    lotus.membranes.append(membrane)

    bases = set()
    for slope in slopes:
        bases.update(petal_bases(slope))
    marked = {primitive_of_slope(s) for s in slopes}
    vectors = {E1, E2}
    for left, right in bases:
        vectors.update((left, right, left + right))
    for vector in sorted(vectors, key=lambda v: (v.c + v.d, v.c)):
        key = name(vector)
        label, kind = describe(key, vector)
        lotus.add_vertex(key, label, kind, marked=vector in marked)
        membrane.coords[key] = vector

    apex_petal = {}
    for left, right in sorted(bases, key=lambda p: ((p[0] + p[1]).c + (p[0] + p[1]).d, (p[0] + p[1]).c)):
        apex = left + right
        if (left, right) == (E1, E2):
            parent = None
        else:
            newer = left if left.c + left.d > right.c + right.d else right
            parent = apex_petal[newer]
        petal = Petal(len(lotus.petals), membrane.id, name(left), name(right), name(apex), parent)
        lotus.petals.append(petal)
        apex_petal[apex] = petal.id
    return membrane


def build_newton_lotus(slopes: Iterable) -> Lotus:
    """The union of the lotuses of the given slopes, keyed by lattice vectors."""
    lotus = Lotus()

    def describe(key, vector):
        if vector == E1:
            return REFERENCE_LABEL, "reference"
        if vector == E2:
            return REFERENCE_DUAL_LABEL, "auxiliary"
        return str(vector), "divisor"

    _add_newton_membrane(lotus, slopes, E1, E2, lambda v: v, describe)
    lotus.vertices[E1].basic = True
    lotus.vertices[E2].basic = True
    logger.debug("Newton lotus with %d petals", len(lotus.petals))
    return lotus


def glue_lotuses(record: ResolutionRecord) -> Lotus:
    """The lotus of a pseudo-resolution.

    Every cross contributes the Newton lotus of its fan, drawn in the basis
    of the cross, or an arrow when it is terminal. Vertices with the same
    label are identified.
    """
    lotus = Lotus()
    trunks = {t.cross: t for t in regularized_trunks(record)}
    for cross in record.crosses:
        trunk = trunks[cross.id]
        if cross.terminal:
            lotus.add_vertex(cross.a, cross.a, _kind(record, cross.a))
            lotus.add_vertex(cross.b, cross.b, "branch")
            lotus.membranes.append(Membrane(len(lotus.membranes), cross.a, cross.b, "arrow",
                                            cross=cross.id,
                                            coords={cross.a: E1, cross.b: E2}))
            continue
        names = {primitive_of_slope(s): label for s, label in trunk.marks}
        names[E1], names[E2] = cross.a, cross.b

        def name(vector, names=names):
            try:
                return names[vector]
            except KeyError:
                raise InvariantViolation("vertex %s of cross %d has no label" % (vector, cross.id))

        def describe(key, vector):
            return key, _kind(record, key)

        _add_newton_membrane(lotus, record.fans[cross.id], cross.a, cross.b, name, describe, cross.id)
        lotus.vertices[cross.b].basic = True
        if cross.id == 0:
            lotus.vertices[cross.a].basic = True
    logger.debug("glued lotus with %d membranes and %d petals", len(lotus.membranes), len(lotus.petals))
    return lotus


def _kind(record: ResolutionRecord, label: str) -> str:
    if label == REFERENCE_LABEL:
        return "reference"
    if label in record.auxiliaries:
        return "auxiliary"
    if label in record.traces:
        return "branch"
    if label in record.divisors:
        return "divisor"
    return "regularization"


def lateral_boundary(lotus: Lotus) -> nx.Graph:
    """Edges of the boundary of the lotus except the open base edges.

    A petal edge is lateral unless it is the base of a petal of the same
    membrane; arrows and membranes without petals contribute a segment.
    """
    graph = nx.Graph()
    for membrane in lotus.membranes:
        petals = lotus.petals_of(membrane.id)
        if not petals:
            graph.add_edge(membrane.a, membrane.b)
            continue
        bases = {frozenset((p.left, p.right)) for p in petals}
        for petal in petals:
            for edge in ((petal.left, petal.apex), (petal.apex, petal.right)):
                if frozenset(edge) not in bases:
                    graph.add_edge(*edge)
    return graph


def boundary_chain(lotus: Lotus, membrane: int = 0) -> List[Hashable]:
    """Lateral vertices of a Newton membrane from ``a`` to ``b``."""
    m = lotus.membranes[membrane]
    return sorted(m.coords, key=lambda key: m.coords[key].slope)


def self_intersections(lotus: Lotus) -> Dict[Hashable, int]:
    """Minus the number of petals containing each weighted vertex."""
    counts = {}
    for petal in lotus.petals:
        for key in petal.vertices:
            counts[key] = counts.get(key, 0) + 1
    boundary = lateral_boundary(lotus)
    return {key: -counts.get(key, 0) for key in lotus.vertices
            if key in boundary and not lotus.is_basic(key) and not lotus.is_arrowhead(key)}


class DualGraph:
    """Weighted dual graph of the boundary divisor.

    Node attributes: ``label``, ``kind`` and ``weight`` (``None`` on basic
    vertices and arrowheads).
    """

    def __init__(self, graph: nx.Graph):
        self.graph = graph

    def weight(self, node) -> Optional[int]:
        return self.graph.nodes[node]["weight"]

    def label(self, node) -> str:
        return self.graph.nodes[node]["label"]

    @property
    def arrowheads(self) -> List[Hashable]:
        return [n for n, d in self.graph.nodes(data=True) if d["arrow"]]

    @property
    def weighted(self) -> List[Hashable]:
        return [n for n, d in self.graph.nodes(data=True) if d["weight"] is not None]

    def carriers(self, node) -> List[Hashable]:
        """Arrowheads attached to a node."""
        return [n for n in self.graph.neighbors(node) if self.graph.nodes[n]["arrow"]]

    def chain(self) -> Optional[List[Hashable]]:
        """The nodes in order when the graph minus arrowheads is a path."""
        core = self.graph.subgraph(n for n in self.graph.nodes if not self.graph.nodes[n]["arrow"])
        if core.number_of_nodes() == 1:
            return list(core.nodes)
        ends = [n for n in core.nodes if core.degree(n) == 1]
        if not nx.is_tree(core) or len(ends) != 2:
            return None
        return nx.shortest_path(core, ends[0], ends[1])

    def __len__(self):
        return self.graph.number_of_nodes()


def _dual_graph(lotus: Lotus, boundary: nx.Graph, weights: Dict[Hashable, int],
                keep: Callable[[Hashable], bool], arrow: Callable[[Hashable], bool]) -> DualGraph:
    graph = nx.Graph()
    order = [key for key in lotus.vertices if key in boundary and keep(key)]
    for key in order:
        vertex = lotus.vertices[key]
        graph.add_node(key, label=vertex.label, kind=vertex.kind,
                       weight=weights.get(key), arrow=arrow(key))
    for u, v in boundary.edges:
        if u in graph and v in graph:
            graph.add_edge(u, v)
    return DualGraph(graph)


def dual_graph(lotus: Lotus) -> DualGraph:
    return _dual_graph(lotus, lateral_boundary(lotus), self_intersections(lotus),
                       keep=lambda key: True, arrow=lambda key: lotus.vertices[key].kind == "branch")


def enriques_tree(lotus: Lotus) -> nx.DiGraph:
    """Apexes of the petals joined to the apex of their parent.

    The base petal of a membrane other than the first one is joined to
    the ``a`` vertex of its membrane.
    """
    tree = nx.DiGraph()
    for petal in lotus.petals:
        tree.add_node(petal.apex)
    for petal in lotus.petals:
        if petal.parent is not None:
            tree.add_edge(lotus.petals[petal.parent].apex, petal.apex)
        elif petal.membrane != 0:
            tree.add_edge(lotus.membranes[petal.membrane].a, petal.apex)
    if tree.number_of_nodes() and not nx.is_arborescence(tree):
        raise InvariantViolation("Enriques edges do not form a rooted tree")
    return tree


def proximity_graph(lotus: Lotus) -> nx.Graph:
    return lotus.skeleton().subgraph(lotus.apexes).copy()


def orientation(lotus: Lotus, membrane: int = 0) -> nx.DiGraph:
    """Edges of a Newton membrane oriented from each apex to its base."""
    graph = nx.DiGraph()
    for petal in lotus.petals_of(membrane):
        graph.add_edge(petal.apex, petal.left)
        graph.add_edge(petal.apex, petal.right)
    return graph


def count_paths(lotus: Lotus, source, target, membrane: int = 0) -> int:
    """Number of oriented paths from ``source`` to ``target``."""
    graph = orientation(lotus, membrane)
    if source not in graph or target not in graph:
        raise DomainError("%s or %s is not a vertex of membrane %d" % (source, target, membrane))
    paths = {node: 0 for node in graph}
    paths[target] = 1
    for node in reversed(list(nx.topological_sort(graph))):
        if node != target:
            paths[node] = sum(paths[s] for s in graph.successors(node))
    return paths[source]


@dataclass(frozen=True)
class Piece:
    """A part of a truncated lotus: ``axis``, ``semipetal`` or ``petal``."""

    kind: str
    petal: int
    vertices: Tuple[Hashable, ...]


class TruncatedLotus:
    """The lotus with everything touching basic vertices cut away.

    Each petal is split by its axis into two semipetals; a semipetal is
    kept when its base vertex is not basic. The base petal of the first
    membrane only keeps its axis.
    """

    def __init__(self, lotus: Lotus):
        self.lotus = lotus
        self.pieces: List[Piece] = []
        for petal in lotus.petals:
            left_basic = lotus.is_basic(petal.left)
            right_basic = lotus.is_basic(petal.right)
            if not left_basic and not right_basic:
                self.pieces.append(Piece("petal", petal.id, petal.vertices))
                continue
            if petal.parent is None and petal.membrane == 0:
                self.pieces.append(Piece("axis", petal.id, (petal.apex,)))
                continue
            if not left_basic:
                self.pieces.append(Piece("semipetal", petal.id, (petal.left, petal.apex)))
            if not right_basic:
                self.pieces.append(Piece("semipetal", petal.id, (petal.right, petal.apex)))
        self.arrows = [m for m in lotus.arrows]

    def weights(self) -> Dict[Hashable, int]:
        counts = {}
        for piece in self.pieces:
            for key in piece.vertices:
                counts[key] = counts.get(key, 0) + 1
        return {key: -count for key, count in counts.items() if not self.lotus.is_basic(key)}

    def dual_graph(self) -> DualGraph:
        lotus = self.lotus

        def keep(key):
            return not lotus.is_basic(key) or lotus.vertices[key].kind == "branch"

        def arrow(key):
            return lotus.vertices[key].kind == "branch"

        return _dual_graph(lotus, lateral_boundary(lotus), self.weights(), keep, arrow)


def truncate_lotus(lotus: Lotus) -> TruncatedLotus:
    return TruncatedLotus(lotus)
