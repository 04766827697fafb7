import unittest
from fractions import Fraction

import networkx as nx

from curvelotus.core import engine, ewtree, fixtures, lotus
from curvelotus.core.lattice import INF
from curvelotus.ctl import dot


def cusp_record():
    return engine.pseudo_resolve(fixtures.branches(fixtures.CUSP))


class EmitDotTestCase(unittest.TestCase):

    def test_truncated_cusp_dual_graph(self):
        graph = lotus.truncate_lotus(lotus.glue_lotuses(cusp_record())).dual_graph()
        parsed = dot.validate_dot(dot.emit_dot(graph))
        self.assertFalse(parsed.directed)
        labels = {n: a["label"] for n, a in parsed.node_attributes.items()}
        self.assertEqual(labels, {"R1": "R1\\n-3", "E1": "E1\\n-1", "R2": "R2\\n-2", "C1": "C1"})
        self.assertEqual(parsed.node_attributes["C1"]["shape"], "plaintext")
        self.assertEqual({frozenset(e) for e in parsed.edges},
                         {frozenset(("R1", "E1")), frozenset(("E1", "R2")), frozenset(("E1", "C1"))})

    def test_cusp_dual_graph(self):
        graph = lotus.dual_graph(lotus.glue_lotuses(cusp_record()))
        parsed = dot.validate_dot(dot.emit_dot(graph))
        weighted = [n for n, a in parsed.node_attributes.items() if "\\n-" in a["label"]]
        arrows = [n for n, a in parsed.node_attributes.items() if a.get("shape") == "plaintext"]
        self.assertEqual(len(weighted), 3)
        self.assertEqual(arrows, ["C1"])
        self.assertEqual(parsed.node_attributes["L"]["label"], "Z(x)")

    def test_eggers_wall_tree(self):
        tree = ewtree.build_ew_tree(fixtures.branches(fixtures.EGGERS_WALL_EXAMPLE))
        parsed = dot.validate_dot(dot.emit_dot(tree))
        self.assertTrue(parsed.directed)
        self.assertEqual(len(parsed.nodes), len(tree))
        self.assertEqual(len(parsed.edges), len(tree) - 1)
        labels = [a["label"] for a in parsed.node_attributes.values()]
        self.assertIn("L\\ne=0,i=1", labels)
        self.assertIn("e=2,i=1", labels)
        self.assertIn("C1\\ne=inf,i=12", labels)
        self.assertIn("C2\\ne=inf,i=6", labels)
        self.assertIn("C3\\ne=inf,i=1", labels)

    def test_empty_trunk(self):
        graph = nx.DiGraph()
        graph.add_node("L", slope=Fraction(0), trunk=None, kind="reference")
        graph.add_node("L1", slope=INF, trunk=0, kind="auxiliary")
        graph.add_edge("L", "L1", trunk=0)
        tree = engine.FanTree(graph, [engine.Trunk(0, 0, "L", "L1")])
        parsed = dot.validate_dot(dot.emit_dot(tree))
        self.assertEqual(parsed.nodes, ["L", "L1"])
        self.assertEqual(parsed.edges, [("L", "L1")])
        self.assertEqual(parsed.node_attributes["L1"]["label"], "L1\\ninf")

    def test_fan_tree(self):
        record = engine.pseudo_resolve(fixtures.branches(fixtures.RUNNING_EXAMPLE))
        tree = engine.fan_tree(record)
        text = dot.emit_dot(tree)
        parsed = dot.validate_dot(text)
        self.assertEqual(parsed.nodes, list(tree.graph.nodes))
        self.assertEqual(parsed.edges, list(tree.graph.edges))
        self.assertEqual(text, dot.emit_dot(engine.fan_tree(engine.pseudo_resolve(
            fixtures.branches(fixtures.RUNNING_EXAMPLE)))))

    def test_plain_graphs(self):
        l = lotus.build_newton_lotus([Fraction(3, 2)])
        graph = nx.relabel_nodes(lotus.proximity_graph(l), str)
        parsed = dot.validate_dot(dot.emit_dot(graph))
        self.assertFalse(parsed.directed)
        self.assertEqual(len(parsed.edges), 3)
        tree = lotus.enriques_tree(l)
        parsed = dot.validate_dot(dot.emit_dot(tree))
        self.assertEqual(parsed.nodes, ["n0", "n1", "n2"])
        self.assertEqual(len(parsed.edges), 2)

    def test_unsupported(self):
        with self.assertRaises(TypeError):
            dot.emit_dot([1, 2])


class ValidateDotTestCase(unittest.TestCase):

    def test_accepts(self):
        parsed = dot.validate_dot(
            'strict digraph "x y" {\n'
            '  // comment\n'
            '  rankdir=LR;\n'
            '  node [shape=box];\n'
            '  a [label="a\\"b", color=red] ;\n'
            '  a -> b -> c [weight=2]\n'
            '  /* block */ d\n'
            '}\n')
        self.assertTrue(parsed.directed)
        self.assertEqual(parsed.name, "x y")
        self.assertEqual(parsed.nodes, ["a", "b", "c", "d"])
        self.assertEqual(parsed.edges, [("a", "b"), ("b", "c")])
        self.assertEqual(parsed.node_attributes["a"]["label"], 'a"b')
        self.assertEqual(parsed.attributes, {"rankdir": "LR"})

    def test_rejects(self):
        for text in ("graph G { a -> b; }",
                     "digraph G { a -- b; }",
                     "digraph G { a -> b;",
                     "digraph G { a [label=]; }",
                     "tree G { a; }",
                     "graph G { a; } b",
                     "graph G { a @ b; }"):
            with self.assertRaises(dot.DotSyntaxError, msg=text):
                dot.validate_dot(text)
