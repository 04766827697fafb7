import random
import unittest
from fractions import Fraction

from curvelotus.core import ewtree, fixtures, polygon, puiseux
from curvelotus.core.errors import DomainError, DuplicateBranchError
from curvelotus.core.lattice import INF
from curvelotus.core.puiseux import Branch, PuiseuxSeries, parse_series

F = Fraction


def brute_force_intersection(first, second):
    total = sum(puiseux.difference_order(first.series, second.series.conjugate(j))
                for j in range(second.index))
    return first.index * total


def node_at(tree, label, exponent):
    for node in tree.path(tree.node(label)):
        if tree.exponent(node) == exponent:
            return node
    raise AssertionError("no node at %s on the geodesic of %s" % (exponent, label))


def random_pair(rng):
    while True:
        a = fixtures.random_series(rng)
        if rng.random() < 0.7:
            b = fixtures.random_relative(rng, a)
        else:
            b = fixtures.random_series(rng)
        if b.index <= 6 and puiseux.coincidence_order(a, b) is not INF:
            return Branch("A", a), Branch("B", b)


def renormalizable_family(rng, size=3):
    base = fixtures.random_series(rng)
    members = [base]
    for _ in range(40):
        if len(members) == size:
            break
        candidate = fixtures.random_relative(rng, base)
        if candidate.order != base.order:
            continue
        if not puiseux.same_orbit(candidate.leading_coefficient, base.leading_coefficient, base.order):
            continue
        if any(puiseux.coincidence_order(candidate, m) is INF for m in members):
            continue
        members.append(candidate.conjugate(rng.randrange(candidate.index)))
    return [Branch("C%d" % (n + 1), s) for n, s in enumerate(members)]


class BuildTestCase(unittest.TestCase):

    def test_eggers_wall_example(self):
        curve = fixtures.branches(fixtures.EGGERS_WALL_EXAMPLE)
        tree = ewtree.build_ew_tree(curve)
        self.assertEqual(tree.marked_exponents(),
                         [F(2), F(5, 2), F(8, 3), F(7, 2), F(17, 4), F(14, 3)])
        self.assertEqual(tree.index(tree.node("C2")), 6)
        self.assertEqual(tree.index(tree.node("C1")), 12)
        self.assertEqual(tree.index(node_at(tree, "C2", F(8, 3))), 2)
        self.assertEqual(tree.index(node_at(tree, "C1", F(14, 3))), 4)
        self.assertEqual(tree.exponent(tree.meet("C1", "C2")), F(5, 2))
        self.assertEqual(tree.exponent(tree.meet("C1", "C3")), 2)
        self.assertEqual(tree.meet("C1", "C3"), tree.meet("C2", "C3"))
        self.assertEqual(tree.contact(node_at(tree, "C2", F(5, 2))), F(5, 2))
        self.assertEqual(tree.contact(tree.root), 0)
        self.assertEqual(tree.index(tree.root), 1)

    def test_single_branch(self):
        tree = ewtree.build_ew_tree([Branch("C1", "x^(3/2)")])
        path = tree.path(tree.node("C1"))
        self.assertEqual([tree.exponent(n) for n in path], [0, F(3, 2), INF])
        self.assertEqual([tree.index(n) for n in path], [1, 1, 2])
        self.assertEqual(len(tree), 3)

    def test_running_example_with_auxiliaries(self):
        curve = fixtures.branches(fixtures.RUNNING_EXAMPLE)
        aux = [Branch("L%d" % (n + 1), parse_series(s))
               for n, s in enumerate(fixtures.RUNNING_AUXILIARIES)]
        tree = ewtree.build_ew_tree(curve + aux)
        self.assertEqual(set(tree.marked_exponents()),
                         {F(3, 5), F(2), F(5, 2), F(11, 15), F(3, 4), F(14, 15), F(6, 5), F(29, 30)})
        node = node_at(tree, "C7", F(14, 15))
        self.assertEqual(tree.contact(node), F(2, 3))
        self.assertEqual(tree.index(node), 5)
        self.assertEqual(tree.index(node_at(tree, "C7", F(29, 30))), 15)

    def test_duplicates(self):
        with self.assertRaises(DuplicateBranchError):
            ewtree.build_ew_tree([Branch("C1", "x^(3/2)"), Branch("C2", "x^(3/2)")])
        with self.assertRaises(DuplicateBranchError):
            ewtree.build_ew_tree([Branch("C1", "x^(3/2)"), Branch("C2", "-x^(3/2)")])
        with self.assertRaises(DuplicateBranchError):
            ewtree.build_ew_tree([Branch("C1", "x^(3/2)"), Branch("C1", "x^2")])
        with self.assertRaises(DuplicateBranchError):
            ewtree.build_ew_tree([Branch("L", "x^2")])

    def test_tree_invariants(self):
        rng = random.Random(51)
        for _ in range(60):
            tree = ewtree.build_ew_tree(fixtures.random_curve(rng))
            for u, v in tree.graph.edges:
                self.assertLess(tree.exponent(u), tree.exponent(v))
                self.assertLess(tree.contact(u), tree.contact(v))
                self.assertEqual(tree.index(v) % tree.index(u), 0)

    def test_permutation_independence(self):
        rng = random.Random(52)
        for _ in range(40):
            curve = fixtures.random_curve(rng, size=5)
            shuffled = list(curve)
            rng.shuffle(shuffled)
            self.assertEqual(ewtree.build_ew_tree(curve).describe(),
                             ewtree.build_ew_tree(shuffled).describe())


class IntersectionTestCase(unittest.TestCase):

    def test_examples(self):
        a, b = Branch("A", "x^(3/2)"), Branch("B", "x^(7/3)")
        self.assertEqual(ewtree.intersection_number(a, b), 9)
        self.assertEqual(ewtree.intersection_number(a, Branch("B", "x^(3/2) + x^(7/4)")), 13)
        self.assertEqual(ewtree.intersection_number(a, ewtree.REFERENCE), 2)
        self.assertEqual(ewtree.intersection_number(ewtree.REFERENCE, b), 3)
        self.assertEqual(ewtree.intersection_number(a, Branch("Y", "0")), 3)
        with self.assertRaises(DomainError):
            ewtree.intersection_number(a, Branch("B", "-x^(3/2)"))

    def test_eggers_wall_example(self):
        curve = fixtures.branches(fixtures.EGGERS_WALL_EXAMPLE)
        tree = ewtree.build_ew_tree(curve)
        self.assertEqual(ewtree.intersection_number(curve[0], curve[1]), 180)
        self.assertEqual(ewtree.tree_intersection_number(tree, "C1", "C2"), 180)
        for a in curve:
            for b in curve:
                if a is not b:
                    self.assertEqual(ewtree.tree_intersection_number(tree, a.label, b.label),
                                     ewtree.intersection_number(a, b))

    def test_contact(self):
        self.assertEqual(ewtree.contact_at(parse_series("2x^(3/5) + x^(14/15)"), F(14, 15)), F(2, 3))
        self.assertEqual(ewtree.contact_at(parse_series("x^(3/2)"), F(3, 2)), F(3, 2))
        self.assertEqual(ewtree.contact_at(parse_series("x^(3/2)"), 2), F(7, 4))
        self.assertIs(ewtree.contact_at(parse_series("x^2"), INF), INF)

    def test_multiplicity(self):
        self.assertEqual(ewtree.multiplicity(Branch("C", "x^(3/2)")), 2)
        self.assertEqual(ewtree.multiplicity(Branch("C", "x^(7/3)")), 3)
        self.assertEqual(ewtree.multiplicity(Branch("C", "x^3")), 1)
        self.assertEqual(ewtree.multiplicity(Branch("C", "x^(1/3) + x")), 1)
        self.assertEqual(ewtree.multiplicity(Branch("C", "0")), 1)

    def test_against_brute_force(self):
        rng = random.Random(53)
        for _ in range(200):
            a, b = random_pair(rng)
            value = ewtree.intersection_number(a, b)
            self.assertIsInstance(value, int)
            self.assertEqual(value, brute_force_intersection(a, b))
            self.assertEqual(value, ewtree.intersection_number(b, a))

    def test_tropical_bound(self):
        rng = random.Random(54)
        checked = 0
        while checked < 200:
            curve = fixtures.random_curve(rng, size=rng.randint(1, 4))
            a = Branch("A", fixtures.random_series(rng))
            if any(puiseux.coincidence_order(a.series, c.series) is INF for c in curve):
                continue
            weight = (a.index, a.index * a.order)
            bound = polygon.trop_eval(polygon.polygon_from_branches(curve), weight)
            total = sum(ewtree.intersection_number(c, a) for c in curve)
            self.assertGreaterEqual(total, bound)
            generic = Branch("G", PuiseuxSeries([(a.order, 7)]))
            weight = (1, generic.order)
            total = sum(ewtree.intersection_number(c, generic) for c in curve)
            self.assertEqual(total, polygon.trop_eval(polygon.polygon_from_branches(curve), weight))
            checked += 1


class RenormalizationTestCase(unittest.TestCase):

    def test_identities(self):
        rng = random.Random(55)
        for _ in range(100):
            family = renormalizable_family(rng)
            slope = family[0].order
            c, d = slope.denominator, slope.numerator
            alpha = family[0].series.leading_coefficient
            renormalized = [Branch(b.label, puiseux.renormalize(b.series, slope, alpha)) for b in family]
            for b, r in zip(family, renormalized):
                self.assertEqual(b.index, c * r.index)
            if len(family) < 2:
                continue
            tree = ewtree.build_ew_tree(family)
            renormalized_tree = ewtree.build_ew_tree(renormalized)
            for a, ra in zip(family, renormalized):
                for b, rb in zip(family, renormalized):
                    if a is b:
                        continue
                    k = puiseux.coincidence_order(a.series, b.series)
                    self.assertEqual(puiseux.coincidence_order(ra.series, rb.series), c * k - d)
                    meet = tree.meet(a.label, b.label)
                    renormalized_meet = renormalized_tree.meet(a.label, b.label)
                    self.assertEqual(tree.exponent(meet),
                                     renormalized_tree.exponent(renormalized_meet) / c + slope)
                    self.assertEqual(tree.index(meet), c * renormalized_tree.index(renormalized_meet))
                    self.assertEqual(tree.contact(meet),
                                     renormalized_tree.contact(renormalized_meet) / (c * c) + slope)
