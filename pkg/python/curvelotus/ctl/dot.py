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

"""DOT output for trees and graphs, and a small DOT checker.

Nodes are written in creation order, then edges in creation order, so
equal inputs give identical files.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx

from curvelotus.config.defaults import REFERENCE_DISPLAY
from curvelotus.core.engine import FanTree
from curvelotus.core.errors import ParseError
from curvelotus.core.ewtree import EWTree
from curvelotus.core.lattice import format_rational
from curvelotus.core.lotus import DualGraph


class DotSyntaxError(ParseError):
    pass


def quote(text) -> str:
    return '"%s"' % str(text).replace('"', '\\"')


def _fan_tree_nodes(tree: FanTree):
    for node in tree.graph.nodes:
        yield node, "%s\\n%s" % (node, format_rational(tree.slope(node))), {}


def _ew_tree_nodes(tree: EWTree):
    for node in tree.graph.nodes:
        values = "e=%s,i=%d" % (format_rational(tree.exponent(node)), tree.index(node))
        name = ",".join(tree.labels(node))
        yield node, "%s\\n%s" % (name, values) if name else values, {}


def _dual_graph_nodes(graph: DualGraph):
    for node in graph.graph.nodes:
        label = REFERENCE_DISPLAY.get(graph.label(node), graph.label(node))
        weight = graph.weight(node)
        if weight is not None:
            yield node, "%s\\n%d" % (label, weight), {}
        elif node in graph.arrowheads:
            yield node, label, {"shape": "plaintext"}
        else:
            yield node, label, {"shape": "box"}


def _plain_nodes(graph: nx.Graph):
    for node, data in graph.nodes(data=True):
        yield node, data.get("label", str(node)), {}


def emit_dot(result, name: str = "G") -> str:
    """DOT text for a fan tree, an Eggers-Wall tree, a dual graph or a
    networkx graph whose nodes may carry a ``label`` attribute."""
    if isinstance(result, FanTree):
        graph, nodes = result.graph, _fan_tree_nodes(result)
    elif isinstance(result, EWTree):
        graph, nodes = result.graph, _ew_tree_nodes(result)
    elif isinstance(result, DualGraph):
        graph, nodes = result.graph, _dual_graph_nodes(result)
    elif isinstance(result, nx.Graph):
        graph, nodes = result, _plain_nodes(result)
    else:
        raise TypeError("cannot draw %s as DOT" % type(result).__name__)

    if all(isinstance(node, str) for node in graph.nodes):
        ids = {node: quote(node) for node in graph.nodes}
    else:
        ids = {node: "n%d" % n for n, node in enumerate(graph.nodes)}
    directed = graph.is_directed()
    lines = ["%s %s {" % ("digraph" if directed else "graph", name)]
    for node, label, attrs in nodes:
        extra = "".join(", %s=%s" % (key, quote(value)) for key, value in attrs.items())
        lines.append("    %s [label=%s%s];" % (ids[node], quote(label), extra))
    edgeop = "->" if directed else "--"
    for u, v in graph.edges:
        lines.append("    %s %s %s;" % (ids[u], edgeop, ids[v]))
    lines.append("}")
    return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"""
    \s*(?:
        (?P<string>"(?:[^"\\]|\\.)*")
      | (?P<edgeop>->|--)
      | (?P<number>-?(?:\.\d+|\d+(?:\.\d*)?))
      | (?P<id>[A-Za-z_\u0080-\uffff][A-Za-z_0-9\u0080-\uffff]*)
      | (?P<punct>[{}\[\];,=:])
    )""", re.VERBOSE)

KEYWORDS = ("strict", "graph", "digraph", "node", "edge", "subgraph")


@dataclass
class DotGraph:
    directed: bool
    name: str = ""
    nodes: List[str] = field(default_factory=list)
    edges: List[Tuple[str, str]] = field(default_factory=list)
    attributes: dict = field(default_factory=dict)
    node_attributes: Dict[str, dict] = field(default_factory=dict)


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = re.sub(r"//[^\n]*|/\*.*?\*/", " ", text, flags=re.S)
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        matched = _TOKEN.match(text, pos)
        if not matched or matched.end() == pos:
            raise DotSyntaxError("unexpected input at offset %d: %r" % (pos, text[pos:pos + 10]))
        kind = matched.lastgroup
        value = matched.group(kind)
        if kind == "string":
            value = value[1:-1].replace('\\"', '"')
        elif kind == "id" and value.lower() in KEYWORDS:
            kind = value.lower()
        tokens.append((kind, value))
        pos = matched.end()
    return tokens


class _Parser:

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, *kinds):
        kind, value = self.peek()
        if kind in kinds or (kind == "punct" and value in kinds):
            self.pos += 1
            return value
        raise DotSyntaxError("expected %s, got %r" % (" or ".join(kinds), value))

    def accept(self, *kinds):
        kind, value = self.peek()
        if kind in kinds or (kind == "punct" and value in kinds):
            self.pos += 1
            return True
        return False

    def ident(self):
        return self.take("id", "string", "number")

    def parse(self) -> DotGraph:
        self.accept("strict")
        kind, _ = self.peek()
        if kind not in ("graph", "digraph"):
            raise DotSyntaxError("a DOT file starts with graph or digraph")
        self.pos += 1
        graph = DotGraph(directed=kind == "digraph")
        if self.peek()[0] in ("id", "string", "number"):
            graph.name = self.ident()
        self.take("{")
        self.statements(graph)
        self.take("}")
        if self.pos != len(self.tokens):
            raise DotSyntaxError("trailing input after the closing brace")
        return graph

    def statements(self, graph: DotGraph):
        while self.peek()[1] != "}":
            if self.peek()[0] is None:
                raise DotSyntaxError("missing closing brace")
            self.statement(graph)
            self.accept(";")

    def attr_list(self) -> dict:
        attrs = {}
        while self.accept("["):
            while not self.accept("]"):
                key = self.ident()
                self.take("=")
                attrs[key] = self.ident()
                self.accept(",", ";")
        return attrs

    def statement(self, graph: DotGraph):
        kind, _ = self.peek()
        if kind in ("graph", "node", "edge"):
            self.pos += 1
            self.attr_list()
            return
        if kind == "subgraph":
            raise DotSyntaxError("subgraphs are not supported")
        first = self.ident()
        if self.accept("="):
            graph.attributes[first] = self.ident()
            return
        if first not in graph.nodes:
            graph.nodes.append(first)
        previous = first
        is_edge = False
        while self.peek()[0] == "edgeop":
            op = self.take("edgeop")
            if (op == "->") != graph.directed:
                raise DotSyntaxError("edge operator %s in a %s" % (op, "digraph" if graph.directed else "graph"))
            target = self.ident()
            if target not in graph.nodes:
                graph.nodes.append(target)
            graph.edges.append((previous, target))
            previous = target
            is_edge = True
        attrs = self.attr_list()
        if not is_edge:
            graph.node_attributes.setdefault(first, {}).update(attrs)


def validate_dot(text: str) -> DotGraph:
    """Parse DOT text, raising ``DotSyntaxError`` when it is malformed."""
    return _Parser(_tokenize(text)).parse()
