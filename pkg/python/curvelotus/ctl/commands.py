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

"""The commands of the curvelotus tool.

Every command takes the parsed arguments and the curve file and returns a
``Report``; rendering is left to the caller.
"""

import logging

import networkx as nx

from curvelotus.config.defaults import REFERENCE_DISPLAY, REFERENCE_DUAL_LABEL, REFERENCE_LABEL
from curvelotus.core import engine, ewtree, lattice, lotus, polygon
from curvelotus.core.errors import DomainError, InvariantViolation
from curvelotus.ctl.curvefile import CurveFile
from curvelotus.ctl.report import Report, rational, rationals

logger = logging.getLogger("curvelotus.commands")


def _point(point):
    return [rational(point[0]), rational(point[1])]


def _polygon(curve: CurveFile):
    if curve.support is not None:
        return "support", polygon.polygon_from_support(curve.support)
    return "branches", polygon.polygon_from_branches(curve.require_branches())


def _fan(curve: CurveFile):
    if curve.fan is not None:
        return list(curve.fan)
    return polygon.newton_fan(_polygon(curve)[1])


def _record(args, curve: CurveFile) -> engine.ResolutionRecord:
    record = engine.pseudo_resolve(curve.require_branches(), args.aux_strategy)
    engine.verify_record(record)
    return record


def _lotus(args, curve: CurveFile) -> lotus.Lotus:
    if curve.branches:
        return lotus.glue_lotuses(_record(args, curve))
    if curve.fan is not None or curve.support is not None:
        return lotus.build_newton_lotus(_fan(curve))
    raise DomainError("%s: no branch, fan or support to build a lotus from" % curve.name)


def _display(label: str) -> str:
    return REFERENCE_DISPLAY.get(label, label)


def cmd_newton_polygon(args, curve: CurveFile) -> Report:
    source, poly = _polygon(curve)
    edges = [{
        "from": _point(p),
        "to": _point(q),
        "slope": rational(polygon.edge_slope((p, q))),
        "length": polygon.integral_length((p, q)) if poly.is_lattice else None,
    } for p, q in poly.edges]
    parts = polygon.elementary_decomposition(poly)
    result = {
        "source": source,
        "vertices": [_point(v) for v in poly.vertices],
        "edges": edges,
        "elementary": [str(p) for p in parts],
    }
    text = ["vertices: %s" % poly]
    if parts:
        text.append("elementary: %s" % " + ".join(str(p) for p in parts))
    return Report(args.command, curve.digest, result, text)


def cmd_fan(args, curve: CurveFile) -> Report:
    _, poly = _polygon(curve)
    fan = polygon.newton_fan(poly)
    return Report(args.command, curve.digest, {"fan": rationals(fan)}, [" ".join(rationals(fan))])


def cmd_check_ndeg(args, curve: CurveFile) -> Report:
    support = curve.require_support()
    nondegenerate = polygon.is_newton_nondegenerate(support)
    edges = []
    text = ["true" if nondegenerate else "false"]
    for p, q in polygon.polygon_from_support(support).edges:
        restriction = polygon.edge_restriction(support, (p, q))
        squarefree = polygon.is_squarefree(restriction)
        edges.append({
            "from": _point(p),
            "to": _point(q),
            "restriction": rationals(restriction),
            "squarefree": squarefree,
        })
        text.append("  (%s) (%s): %s%s" % (",".join(_point(p)), ",".join(_point(q)),
                                         " ".join(rationals(restriction)),
                                         "" if squarefree else " (multiple root)"))
    return Report(args.command, curve.digest, {"nondegenerate": nondegenerate, "edges": edges}, text)


def cmd_resolve(args, curve: CurveFile) -> Report:
    record = _record(args, curve)
    points = engine.singular_points(record)
    result = {
        "strategy": record.strategy,
        "levels": record.levels,
        "crosses": [{
            "id": c.id, "a": c.a, "b": c.b, "host": c.host, "level": c.level, "terminal": c.terminal,
        } for c in record.crosses],
        "fans": [{
            "cross": c.id, "a": c.a, "b": c.b, "slopes": rationals(record.fans[c.id]),
        } for c in record.membranes],
        "auxiliaries": {label: str(series) for label, series in record.auxiliaries.items()},
        "divisors": {label: {"cross": cross, "slope": rational(slope)}
                     for label, (cross, slope) in record.divisors.items()},
        "traces": {label: [{
            "cross": step.cross, "slope": rational(step.slope), "divisor": step.divisor, "shift": step.shift,
        } for step in steps] for label, steps in record.traces.items()},
        "depths": {b.label: engine.depth(record, b.label) for b in record.branches},
        "singular_points": [{
            "trunk": p.trunk, "slopes": rationals(p.slopes), "determinant": p.determinant, "hj": list(p.hj),
        } for p in points],
    }
    text = ["levels: %d" % record.levels]
    for cross in record.membranes:
        trunk = record.trunk_of(cross.id)
        text.append("cross %d (%s, %s) level %d: %s" % (
            cross.id, cross.a, cross.b, cross.level,
            " ".join("%s=%s" % (label, rational(slope)) for slope, label in trunk.marks)))
    for cross in record.arrows:
        text.append("branch %s at %s" % (cross.b, cross.a))
    for label, series in record.auxiliaries.items():
        text.append("auxiliary %s = %s" % (label, series))
    text.append("singular points: %d" % len(points))
    for p in points:
        text.append("  trunk %d %s..%s: %d [%s]" % (p.trunk, rational(p.slopes[0]), rational(p.slopes[1]),
                                                   p.determinant, ",".join(str(b) for b in p.hj)))
    return Report(args.command, curve.digest, result, text)


def cmd_fan_tree(args, curve: CurveFile) -> Report:
    tree = engine.fan_tree(_record(args, curve), regularized=args.regularized)
    nodes = [{
        "name": node, "slope": rational(tree.slope(node)), "trunk": tree.trunk(node), "kind": tree.kind(node),
    } for node in tree.graph.nodes]
    edges = [[u, v] for u, v in tree.graph.edges]
    text = []
    for trunk in tree.trunks:
        marks = " ".join("%s(%s)" % (label, rational(slope)) for slope, label in trunk.marks)
        text.append("%s [%s] %s" % (trunk.a, marks, trunk.b) if marks else "%s [] %s" % (trunk.a, trunk.b))
    return Report(args.command, curve.digest, {"nodes": nodes, "edges": edges}, text, tree)


def cmd_eggers_wall(args, curve: CurveFile) -> Report:
    if args.from_fan_tree:
        tree = engine.ew_from_fan_tree(engine.fan_tree(_record(args, curve)))
    else:
        tree = ewtree.build_ew_tree(curve.require_branches())
    ids = {node: n for n, node in enumerate(tree.graph.nodes)}
    nodes = [{
        "id": ids[node],
        "labels": list(tree.labels(node)),
        "e": rational(tree.exponent(node)),
        "i": tree.index(node),
        "c": rational(tree.contact(node)),
    } for node in tree.graph.nodes]
    edges = [[ids[u], ids[v]] for u, v in tree.graph.edges]
    result = {"nodes": nodes, "edges": edges, "marked_exponents": rationals(tree.marked_exponents())}
    text = []
    for node, level in _walk(tree.graph, tree.root):
        text.append("%s%s e=%s i=%d c=%s" % ("  " * level, ",".join(tree.labels(node)) or "*",
                                             rational(tree.exponent(node)), tree.index(node),
                                             rational(tree.contact(node))))
    return Report(args.command, curve.digest, result, text, tree)


def _walk(graph: nx.DiGraph, root):
    stack = [(root, 0)]
    while stack:
        node, level = stack.pop()
        yield node, level
        for child in reversed(list(graph.successors(node))):
            stack.append((child, level + 1))


def cmd_lotus(args, curve: CurveFile) -> Report:
    built = _lotus(args, curve)
    weights = lotus.self_intersections(built)
    result = {
        "membranes": [{
            "id": m.id, "a": built.label(m.a), "b": built.label(m.b), "kind": m.kind,
            "slopes": rationals(m.slopes), "cross": m.cross,
        } for m in built.membranes],
        "petals": [{
            "id": p.id, "membrane": p.membrane, "parent": p.parent,
            "vertices": [built.label(k) for k in p.vertices],
        } for p in built.petals],
        "vertices": [{
            "label": v.label, "kind": v.kind, "basic": v.basic, "marked": v.marked, "weight": weights.get(key),
        } for key, v in built.vertices.items()],
    }
    text = ["membranes: %d newton, %d arrows" % (len(built.newton_membranes), len(built.arrows)),
            "petals: %d" % len(built.petals)]
    artifact = built
    if args.truncate:
        truncated = lotus.truncate_lotus(built)
        weights = truncated.weights()
        result["pieces"] = [{
            "kind": p.kind, "petal": p.petal, "vertices": [built.label(k) for k in p.vertices],
        } for p in truncated.pieces]
        result["truncated_weights"] = {built.label(k): w for k, w in weights.items()}
        text.append("pieces: %d" % len(truncated.pieces))
        artifact = truncated
    for key, weight in weights.items():
        text.append("  %s %d" % (built.label(key), weight))
    return Report(args.command, curve.digest, result, text, artifact)


def chain_text(graph: lotus.DualGraph):
    """The dual graph on one line, from the ``Z(y)`` end, when it is a chain."""
    chain = graph.chain()
    if chain is None:
        return None
    if graph.label(chain[-1]) == REFERENCE_DUAL_LABEL or graph.label(chain[0]) == REFERENCE_LABEL:
        chain.reverse()
    items = []
    for node in chain:
        weight = graph.weight(node)
        if weight is None:
            items.append(_display(graph.label(node)))
        else:
            items.append("%d%s" % (weight, "*" if graph.carriers(node) else ""))
    return " ".join(items)


def cmd_dual_graph(args, curve: CurveFile) -> Report:
    built = _lotus(args, curve)
    graph = lotus.truncate_lotus(built).dual_graph() if args.truncate else lotus.dual_graph(built)
    nodes = [{
        "name": graph.label(node),
        "kind": graph.graph.nodes[node]["kind"],
        "weight": graph.weight(node),
        "arrows": [graph.label(a) for a in graph.carriers(node)],
    } for node in graph.graph.nodes if node not in graph.arrowheads]
    edges = [[graph.label(u), graph.label(v)] for u, v in graph.graph.edges
             if u not in graph.arrowheads and v not in graph.arrowheads]
    chain = chain_text(graph)
    result = {"nodes": nodes, "edges": edges, "chain": chain}
    if chain is not None:
        text = [chain]
    else:
        text = []
        for node in nodes:
            weight = "" if node["weight"] is None else " %d" % node["weight"]
            arrows = " -> %s" % ",".join(node["arrows"]) if node["arrows"] else ""
            text.append("%s%s%s" % (_display(node["name"]), weight, arrows))
        text.extend("%s -- %s" % (u, v) for u, v in edges)
    return Report(args.command, curve.digest, result, text, graph)


def _labelled(built: lotus.Lotus, graph):
    relabelled = nx.relabel_nodes(graph, {k: built.label(k) for k in graph.nodes})
    for node in relabelled.nodes:
        relabelled.nodes[node]["label"] = node
    return relabelled


def cmd_enriques(args, curve: CurveFile) -> Report:
    built = _lotus(args, curve)
    tree = _labelled(built, lotus.enriques_tree(built))
    roots = [n for n in tree.nodes if tree.in_degree(n) == 0]
    result = {"nodes": list(tree.nodes), "edges": [[u, v] for u, v in tree.edges], "roots": roots}
    text = []
    for root in roots:
        text.extend("%s%s" % ("  " * level, node) for node, level in _walk(tree, root))
    return Report(args.command, curve.digest, result, text, tree)


def cmd_proximity(args, curve: CurveFile) -> Report:
    built = _lotus(args, curve)
    graph = _labelled(built, lotus.proximity_graph(built))
    result = {"nodes": list(graph.nodes), "edges": [[u, v] for u, v in graph.edges]}
    text = list(graph.nodes) + ["%s -- %s" % (u, v) for u, v in graph.edges]
    return Report(args.command, curve.digest, result, text, graph)


def _intersection_argument(curve: CurveFile, label: str):
    if label == REFERENCE_LABEL:
        return ewtree.REFERENCE
    return curve.branch(label)


def cmd_intersect(args, curve: CurveFile) -> Report:
    branches = curve.require_branches()
    ewtree.check_distinct(branches)
    if args.first == args.second:
        raise DomainError("%s meets itself" % args.first)
    first = _intersection_argument(curve, args.first)
    second = _intersection_argument(curve, args.second)
    value = ewtree.intersection_number(first, second)
    if first is not ewtree.REFERENCE and second is not ewtree.REFERENCE:
        tree = ewtree.build_ew_tree(branches)
        if ewtree.tree_intersection_number(tree, args.first, args.second) != value:
            raise InvariantViolation("the Eggers-Wall tree disagrees on (%s . %s)" % (args.first, args.second))
    logger.debug("(%s . %s) = %d", args.first, args.second, value)
    result = {"first": args.first, "second": args.second, "intersection": value}
    return Report(args.command, curve.digest, result, [str(value)])


def cmd_regularize(args, curve: CurveFile) -> Report:
    fan = sorted(set(_fan(curve)))
    regular = lattice.regularize(fan)
    rays = [lattice.as_rational(0)] + fan + [lattice.INF]
    pairs = [[rational(lo), rational(hi)] for lo, hi in zip(rays, rays[1:])
             if lattice.Cone.between(lo, hi).is_regular]
    result = {"fan": rationals(fan), "regularized": rationals(regular), "regular_pairs": pairs}
    return Report(args.command, curve.digest, result, [" ".join(rationals(regular))])


COMMANDS = {
    "newton-polygon": cmd_newton_polygon,
    "fan": cmd_fan,
    "check-ndeg": cmd_check_ndeg,
    "resolve": cmd_resolve,
    "fan-tree": cmd_fan_tree,
    "eggers-wall": cmd_eggers_wall,
    "lotus": cmd_lotus,
    "dual-graph": cmd_dual_graph,
    "enriques": cmd_enriques,
    "proximity": cmd_proximity,
    "intersect": cmd_intersect,
    "regularize": cmd_regularize,
}
