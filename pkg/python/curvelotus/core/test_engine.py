import random
import unittest
from fractions import Fraction

from curvelotus.core import engine, ewtree, fixtures, polygon, puiseux
from curvelotus.core.errors import DomainError, DuplicateBranchError, InvariantViolation
from curvelotus.core.lattice import INF
from curvelotus.core.puiseux import Branch, parse_series

F = Fraction


def running_record():
    return engine.pseudo_resolve(fixtures.branches(fixtures.RUNNING_EXAMPLE))


def normal_form_curve(rng, size):
    pool = []
    for _ in range(20 * size):
        if len(pool) == size:
            break
        candidate = fixtures.random_normal_form(rng)
        if all(puiseux.coincidence_order(candidate, other) is not INF for other in pool):
            pool.append(candidate)
    return [Branch("C%d" % (n + 1), s) for n, s in enumerate(pool)]


class PseudoResolveTestCase(unittest.TestCase):

    def test_running_example(self):
        record = running_record()
        fans = [record.fans[c.id] for c in record.membranes]
        self.assertEqual(fans, [(F(3, 5), F(2), F(5, 2)), (F(2, 3), F(3, 4)), (F(5, 3), F(3)), (F(1, 2),)])
        self.assertEqual(record.levels, 3)
        self.assertEqual([str(s) for s in record.auxiliaries.values()],
                         fixtures.RUNNING_AUXILIARIES)
        self.assertEqual(list(record.auxiliaries), ["L1", "L2", "L3", "L4"])
        self.assertEqual(len(record.membranes), 4)
        self.assertEqual(len(record.arrows), 7)
        self.assertEqual([(c.a, c.b) for c in record.membranes],
                         [("L", "L1"), ("E1", "L2"), ("E1", "L3"), ("E6", "L4")])
        self.assertEqual(record.divisors["E6"][1], F(5, 3))
        self.assertEqual(record.divisors["E8"][1], F(1, 2))
        engine.verify_record(record)

    def test_divisor_naming(self):
        record = running_record()
        names = [label for c in record.membranes for label in record.trunk_of(c.id).labels]
        self.assertEqual(names, ["E%d" % n for n in range(1, 9)])
        arrows = {c.b: c.a for c in record.arrows}
        self.assertEqual(arrows, {"C1": "E3", "C2": "E2", "C3": "E2", "C4": "E5",
                                  "C5": "E4", "C6": "E7", "C7": "E8"})

    def test_two_branches(self):
        record = engine.pseudo_resolve(fixtures.branches(fixtures.TWO_BRANCH_EXAMPLE))
        self.assertEqual(record.levels, 1)
        self.assertEqual(record.fans[0], (F(3, 2), F(7, 3)))
        self.assertEqual(list(record.auxiliaries), ["L1"])
        self.assertEqual(len(record.arrows), 2)

    def test_smooth_branch(self):
        record = engine.pseudo_resolve([Branch("C1", "x^2")])
        self.assertEqual(record.levels, 1)
        self.assertEqual(record.fans[0], (F(2),))
        self.assertEqual(record.arrows[0].a, "E1")
        self.assertEqual(engine.depth(record, "C1"), 2)

    def test_terminal_on_integral_series(self):
        record = engine.pseudo_resolve([Branch("C1", "x^(3/2) + x^2"), Branch("C2", "x^(3/2) + x^(9/4)")])
        self.assertEqual([record.fans[c.id] for c in record.membranes], [(F(3, 2),), (F(1), F(3, 2))])
        self.assertEqual(record.auxiliaries["L2"], parse_series("x^(3/2)"))
        engine.verify_record(record)

    def test_branch_as_second_axis(self):
        record = engine.pseudo_resolve([Branch("C1", "x^(3/2)"), Branch("C2", "x^(3/2) + x^(7/4)")])
        self.assertEqual([(c.a, c.b) for c in record.membranes], [("L", "L1"), ("E1", "C1")])
        self.assertEqual(list(record.auxiliaries), ["L1"])
        record = engine.pseudo_resolve([Branch("Y", "0"), Branch("C1", "x^(3/2)")])
        self.assertEqual((record.crosses[0].a, record.crosses[0].b), ("L", "Y"))
        self.assertEqual(record.auxiliaries, {})
        engine.verify_record(record)

    def test_conjugate_groups(self):
        record = engine.pseudo_resolve([Branch("C1", "x^(3/2) + x^(7/4)"),
                                        Branch("C2", "-x^(3/2) + 2x^(7/4)")])
        self.assertEqual(len(record.membranes), 2)
        self.assertEqual(record.auxiliaries["L2"], parse_series("x^(3/2)"))
        self.assertEqual(record.traces["C2"][0].shift, 1)

    def test_renormalized_order_on_a_later_slope(self):
        curve = [Branch("C1", "x^(1/4) + x^(3/8)"), Branch("C2", "x^(1/2)")]
        record = engine.pseudo_resolve(curve)
        self.assertEqual(record.fans, {0: (F(1, 4), F(1, 2)), 1: (F(1, 2),)})
        self.assertEqual([(c.a, c.b) for c in record.membranes], [("L", "L1"), ("E1", "L2")])
        self.assertEqual(record.auxiliaries["L2"], parse_series("x^(1/4)"))
        self.assertEqual({c.b: c.a for c in record.arrows}, {"C1": "E3", "C2": "E2"})
        self.assertEqual([step.cross for step in record.traces["C1"]], [0, 1])
        self.assertEqual([step.cross for step in record.traces["C2"]], [0])
        self.assertEqual((engine.depth(record, "C1"), engine.depth(record, "C2")), (3, 2))
        engine.verify_record(record)

    def test_renormalized_orders_with_three_branches(self):
        curve = [Branch("C1", "1/2x^(5/2) - x^(17/6)"), Branch("C2", "1/2x^(1/4) - x^(3/8)"),
                 Branch("C3", "2x^(1/2)")]
        record = engine.pseudo_resolve(curve)
        self.assertEqual(record.fans, {0: (F(1, 4), F(1, 2), F(5, 2)), 1: (F(1, 2),), 3: (F(2, 3),)})
        self.assertEqual(record.auxiliaries["L2"], parse_series("1/2x^(1/4)"))
        self.assertEqual(record.auxiliaries["L3"], parse_series("1/2x^(5/2)"))
        self.assertEqual({c.b: c.a for c in record.arrows}, {"C1": "E5", "C2": "E4", "C3": "E2"})
        for branch in curve:
            crosses = [step.cross for step in record.traces[branch.label]]
            self.assertEqual(len(crosses), len(set(crosses)))
            self.assertEqual(engine.depth(record, branch.label),
                             1 + len(puiseux.characteristic_exponents(branch)))
        engine.verify_record(record)

    def test_errors(self):
        with self.assertRaises(DomainError):
            engine.pseudo_resolve([])
        with self.assertRaises(DuplicateBranchError):
            engine.pseudo_resolve([Branch("C1", "x^2"), Branch("C2", "x^2")])
        with self.assertRaises(DomainError):
            engine.pseudo_resolve([Branch("C1", "x^2")], strategy="blowup")

    def test_generated_names_are_reserved(self):
        for label in ("L", "L2", "E1", "R3"):
            with self.assertRaises(DuplicateBranchError):
                engine.pseudo_resolve([Branch(label, "x^(3/2)"), Branch("C2", "x^(3/2) + x^(7/4)")])
        record = engine.pseudo_resolve([Branch("Ex", "x^(3/2)"), Branch("C2", "x^(3/2) + x^(7/4)")])
        self.assertEqual(engine.fan_tree(record).kind("Ex"), "branch")

    def test_verify_rejects_broken_records(self):
        record = running_record()
        record.auxiliaries["L9"] = parse_series("3x^(1/2)")
        with self.assertRaises(InvariantViolation):
            engine.verify_record(record)
        record = running_record()
        record.trunks[0] = engine.Trunk(0, 0, "L", "L1", ((F(2), "E2"), (F(3, 5), "E1")))
        with self.assertRaises(InvariantViolation):
            engine.verify_record(record)

    def test_fan_of_each_cross(self):
        rng = random.Random(61)
        for _ in range(60):
            record = engine.pseudo_resolve(fixtures.random_curve(rng))
            for cross in record.membranes:
                active = [s for _, s in record.active[cross.id]]
                p = polygon.polygon_from_branches(active)
                self.assertEqual(polygon.newton_fan(p), list(record.fans[cross.id]))

    def test_depth_of_normal_forms(self):
        rng = random.Random(62)
        for _ in range(100):
            curve = normal_form_curve(rng, rng.randint(1, 3))
            record = engine.pseudo_resolve(curve)
            for branch in curve:
                self.assertEqual(engine.depth(record, branch.label),
                                 1 + len(puiseux.characteristic_exponents(branch)))


class FanTreeTestCase(unittest.TestCase):

    def test_running_example(self):
        tree = engine.fan_tree(running_record())
        self.assertEqual(tree.root, "L")
        self.assertEqual(tree.slope("L"), 0)
        self.assertEqual([tree.slope(n) for n in tree.path("L1")], [0, F(3, 5), F(2), F(5, 2), INF])
        self.assertEqual(tree.path("C7"), ["L", "E1", "E6", "E8", "C7"])
        self.assertEqual(tree.path_slopes("C7"), [F(3, 5), F(5, 3), F(1, 2)])
        self.assertEqual(tree.kind("L4"), "auxiliary")
        self.assertEqual(tree.kind("C4"), "branch")
        self.assertEqual(tree.kind("E5"), "divisor")
        self.assertEqual(len(tree), 1 + 8 + 4 + 7)

    def test_single_branch(self):
        record = engine.pseudo_resolve([Branch("C1", "x^(3/2)")])
        tree = engine.fan_tree(record)
        self.assertEqual(record.trunks[0].marks, ((F(3, 2), "E1"),))
        self.assertEqual(list(tree.graph.successors("E1")), ["L1", "C1"])

    def test_regularized(self):
        record = running_record()
        trunks = engine.regularized_trunks(record)
        self.assertEqual(trunks[0].slopes, [F(1, 2), F(3, 5), F(2, 3), F(1), F(2), F(5, 2), F(3)])
        self.assertEqual(trunks[0].labels, ["R1", "E1", "R2", "R3", "E2", "E3", "R4"])
        tree = engine.fan_tree(record, regularized=True)
        self.assertEqual(tree.kind("R1"), "regularization")
        self.assertEqual(tree.path("C7")[:3], ["L", "R1", "E1"])

    def test_singular_points(self):
        points = engine.singular_points(running_record())
        self.assertEqual(len(points), 8)
        first = [p for p in points if p.trunk == 0]
        self.assertEqual([p.slopes for p in first], [(0, F(3, 5)), (F(3, 5), F(2)), (F(5, 2), INF)])
        self.assertEqual([p.determinant for p in first], [3, 7, 2])
        self.assertEqual(first[1].hj, (2, 4))
        self.assertEqual(engine.singular_points(engine.pseudo_resolve([Branch("C1", "x")])), [])

    def test_ew_values(self):
        ew = engine.ew_from_fan_tree(engine.fan_tree(running_record()))
        e6, e8 = ew.node("E6"), ew.node("E8")
        self.assertEqual((ew.index(e6), ew.exponent(e6), ew.contact(e6)), (5, F(14, 15), F(2, 3)))
        self.assertEqual((ew.index(e8), ew.exponent(e8)), (15, F(29, 30)))
        self.assertEqual((ew.index(ew.root), ew.exponent(ew.root), ew.contact(ew.root)), (1, 0, 0))
        self.assertEqual(ew.index(ew.node("C7")), 30)
        self.assertEqual(ew.index(ew.node("L4")), 15)

    def test_running_example_roundtrip(self):
        record = running_record()
        self.assert_roundtrip(record)

    def test_roundtrip_with_renormalized_orders_on_later_slopes(self):
        for curve in (["x^(1/4) + x^(3/8)", "x^(1/2)"],
                      ["1/2x^(5/2) - x^(17/6)", "1/2x^(1/4) - x^(3/8)", "2x^(1/2)"]):
            branches = [Branch("C%d" % (n + 1), s) for n, s in enumerate(curve)]
            record = engine.pseudo_resolve(branches)
            self.assert_roundtrip(record)
            tree = engine.fan_tree(record)
            for branch in branches:
                self.assertEqual(engine.fold_slopes(tree.path_slopes(branch.label)),
                                 puiseux.newton_pairs(branch))

    def test_roundtrip(self):
        rng = random.Random(63)
        for _ in range(50):
            self.assert_roundtrip(engine.pseudo_resolve(fixtures.random_curve(rng, size=rng.randint(2, 5))))

    def test_newton_pairs_from_paths(self):
        rng = random.Random(64)
        for _ in range(60):
            record = engine.pseudo_resolve(fixtures.random_curve(rng))
            tree = engine.fan_tree(record)
            for branch in record.branches:
                self.assertEqual(engine.fold_slopes(tree.path_slopes(branch.label)),
                                 puiseux.newton_pairs(branch))

    def test_fold_slopes(self):
        self.assertEqual(engine.fold_slopes([F(2), F(3, 2), F(1)]), [(2, 7)])
        self.assertEqual(engine.fold_slopes([F(3, 5), F(5, 3), F(1, 2)]), [(5, 3), (3, 5), (2, 1)])
        self.assertEqual(engine.fold_slopes([F(2)]), [])

    def assert_roundtrip(self, record):
        labels = [b.label for b in record.branches] + list(record.auxiliaries)
        aux = [Branch(label, series) for label, series in record.auxiliaries.items()]
        expected = ewtree.build_ew_tree(list(record.branches) + aux).describe(labels)
        actual = engine.ew_from_fan_tree(engine.fan_tree(record)).describe(labels)
        self.assertEqual(actual, expected)
