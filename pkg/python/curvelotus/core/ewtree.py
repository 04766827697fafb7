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

"""Eggers-Wall trees relative to the reference branch ``L = Z(x)``."""

import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from curvelotus.config.defaults import REFERENCE_LABEL
from curvelotus.core.errors import DomainError, DuplicateBranchError
from curvelotus.core.lattice import INF, Extended, format_rational
from curvelotus.core.puiseux import (
    Branch, characteristic_exponents, coincidence_order, index_below,
)

logger = logging.getLogger("curvelotus.ewtree")


class _Reference:
    """Stands for ``L`` itself in intersection queries."""

    def __repr__(self):
        return "REFERENCE"


REFERENCE = _Reference()


class EWTree:
    """A rooted tree whose nodes carry exponent, index and contact values.

    Node attributes: ``e`` and ``c`` (Fraction or ``INF``), ``i`` (int) and
    ``labels`` (list of names). Leaves carry the branch label first.
    """

    def __init__(self, graph: nx.DiGraph, root: Hashable):
        self.graph = graph
        self.root = root
        self._by_label = {}
        for node in nx.topological_sort(graph):
            for label in graph.nodes[node]["labels"]:
                self._by_label.setdefault(label, node)

    def node(self, label: str) -> Hashable:
        try:
            return self._by_label[label]
        except KeyError:
            raise DomainError("no node labelled %s" % label)

    def has_label(self, label: str) -> bool:
        return label in self._by_label

    def add_label(self, node: Hashable, label: str):
        labels = self.graph.nodes[node]["labels"]
        if label not in labels:
            labels.append(label)
        self._by_label.setdefault(label, node)

    def exponent(self, node) -> Extended:
        return self.graph.nodes[node]["e"]

    def index(self, node) -> int:
        return self.graph.nodes[node]["i"]

    def contact(self, node) -> Extended:
        return self.graph.nodes[node]["c"]

    def labels(self, node) -> List[str]:
        return self.graph.nodes[node]["labels"]

    @property
    def leaves(self) -> List[Hashable]:
        return [n for n in self.graph.nodes if self.graph.out_degree(n) == 0 and n != self.root]

    def parent(self, node) -> Optional[Hashable]:
        for p in self.graph.predecessors(node):
            return p
        return None

    def meet(self, first: str, second: str) -> Hashable:
        """The node ``first ^ second`` where the two geodesics to ``L`` join."""
        return nx.lowest_common_ancestor(self.graph, self.node(first), self.node(second))

    def marked_exponents(self) -> List[Fraction]:
        return sorted({self.exponent(n) for n in self.graph.nodes
                       if n != self.root and self.exponent(n) is not INF})

    def path(self, node) -> List[Hashable]:
        return nx.shortest_path(self.graph, self.root, node)

    def describe(self, labels: Optional[Iterable[str]] = None):
        """Label-independent summary: one ``(leaf set, e, i, c)`` per node.

        Restricting to ``labels`` keeps the meets and leaves of those
        labels only.
        """
        if labels is None:
            keep = [l for n in self.leaves for l in self.labels(n)[:1]]
        else:
            keep = list(labels)
        nodes = {self.node(l) for l in keep}
        for a in keep:
            for b in keep:
                if a < b:
                    nodes.add(self.meet(a, b))
        summary = set()
        for n in nodes:
            below = {n} | nx.descendants(self.graph, n)
            leafset = frozenset(l for l in keep if self.node(l) in below)
            summary.add((leafset, self.exponent(n), self.index(n), self.contact(n)))
        return summary

    def __len__(self):
        return self.graph.number_of_nodes()


def contact_at(branch, exponent) -> Extended:
    """Integral of ``de / i`` along the branch from 0 up to ``exponent``."""
    if exponent is INF:
        return INF
    total = Fraction(0)
    previous = Fraction(0)
    running = 1
    for e in characteristic_exponents(branch):
        if e >= exponent:
            break
        total += (e - previous) / running
        previous = e
        running = running * e.denominator // gcd(running, e.denominator)
    return total + (Fraction(exponent) - previous) / running


def check_distinct(branches: Sequence[Branch]) -> Dict[Tuple[str, str], Extended]:
    seen = set()
    for branch in branches:
        if branch.label in seen or branch.label == REFERENCE_LABEL:
            raise DuplicateBranchError("branch label %s is used twice" % branch.label)
        seen.add(branch.label)
    orders = {}
    for n, a in enumerate(branches):
        for b in branches[n + 1:]:
            k = coincidence_order(a.series, b.series)
            if k is INF:
                raise DuplicateBranchError("branches %s and %s are equal" % (a.label, b.label))
            orders[(a.label, b.label)] = orders[(b.label, a.label)] = k
    return orders


def build_ew_tree(branches: Sequence[Branch]) -> EWTree:
    """The Eggers-Wall tree of the curve with the given branches.

    The geodesic of each branch is marked at its characteristic exponents
    and at its orders of coincidence with the others; two geodesics are
    identified up to their order of coincidence.
    """
    branches = list(branches)
    orders = check_distinct(branches)
    graph = nx.DiGraph()
    root = (REFERENCE_LABEL, Fraction(0))
    graph.add_node(root, e=Fraction(0), i=1, c=Fraction(0), labels=[REFERENCE_LABEL])
    for n, branch in enumerate(branches):
        marks = set(characteristic_exponents(branch))
        marks.update(orders[(branch.label, other.label)] for other in branches if other is not branch)
        previous = root
        for e in sorted(marks):
            rep = next(other.label for other in branches[:n + 1]
                       if other is branch or orders[(branch.label, other.label)] >= e)
            key = (rep, e)
            if key not in graph:
                graph.add_node(key, e=e, i=index_below(branch, e), c=contact_at(branch, e), labels=[])
            graph.add_edge(previous, key)
            previous = key
        leaf = (branch.label, INF)
        graph.add_node(leaf, e=INF, i=branch.index, c=INF, labels=[branch.label])
        graph.add_edge(previous, leaf)
    logger.debug("Eggers-Wall tree with %d nodes for %d branches", graph.number_of_nodes(), len(branches))
    return EWTree(graph, root)


def contact(tree: EWTree, node) -> Extended:
    return tree.contact(node)


def intersection_number(first, second) -> int:
    """Intersection multiplicity of two distinct branches.

    Either argument may be ``REFERENCE`` for ``L`` itself.
    """
    if first is REFERENCE and second is REFERENCE:
        raise DomainError("L meets itself")
    if first is REFERENCE or second is REFERENCE:
        other = second if first is REFERENCE else first
        return other.index
    k = coincidence_order(first.series, second.series)
    if k is INF:
        raise DomainError("%s and %s are the same branch" % (first.label, second.label))
    value = contact_at(first, k) * first.index * second.index
    if value.denominator != 1:
        raise DomainError("non integral intersection number %s" % format_rational(value))
    return int(value)


def multiplicity(branch) -> int:
    n = branch.index
    if branch.order is INF:
        return n
    return int(min(n, n * branch.order))


def tree_intersection_number(tree: EWTree, first: str, second: str) -> int:
    """Intersection number read off the tree as ``c(A ^ B) i(A) i(B)``."""
    meet = tree.meet(first, second)
    value = tree.contact(meet) * tree.index(tree.node(first)) * tree.index(tree.node(second))
    return int(value)
