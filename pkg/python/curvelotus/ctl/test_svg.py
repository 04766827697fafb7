import unittest
import xml.etree.ElementTree as ET
from fractions import Fraction

from curvelotus.core import engine, fixtures, lotus
from curvelotus.ctl import svg


def parse(text):
    return ET.fromstring(text)


def elements(root, tag, css=None):
    found = root.iter("{%s}%s" % (svg.SVG_NAMESPACE, tag))
    return [e for e in found if css is None or e.get("class") == css]


class EmitSvgTestCase(unittest.TestCase):

    def test_petal_per_polygon(self):
        root = parse(svg.emit_svg(lotus.build_newton_lotus([Fraction(3, 5), 2, Fraction(5, 2)])))
        self.assertEqual(len(elements(root, "polygon")), 7)
        self.assertEqual(len(elements(root, "circle")), 3)
        labels = [e.text for e in elements(root, "text")]
        self.assertIn("Z(x)", labels)
        self.assertIn("Z(y)", labels)

    def test_base_segment(self):
        root = parse(svg.emit_svg(lotus.build_newton_lotus([])))
        self.assertEqual(len(elements(root, "line")), 1)
        self.assertEqual(elements(root, "polygon"), [])

    def test_running_example(self):
        record = engine.pseudo_resolve(fixtures.branches(fixtures.RUNNING_EXAMPLE))
        text = svg.emit_svg(lotus.glue_lotuses(record))
        root = parse(text)
        self.assertEqual(len(elements(root, "g", "membrane")), 4)
        self.assertEqual(len(elements(root, "line", "arrow")), 7)
        self.assertEqual(len(elements(root, "polygon")), len(lotus.glue_lotuses(record).petals))
        again = engine.pseudo_resolve(fixtures.branches(fixtures.RUNNING_EXAMPLE))
        self.assertEqual(text, svg.emit_svg(lotus.glue_lotuses(again)))

    def test_truncated_cusp(self):
        record = engine.pseudo_resolve(fixtures.branches(fixtures.CUSP))
        root = parse(svg.emit_svg(lotus.truncate_lotus(lotus.glue_lotuses(record))))
        self.assertEqual(len(elements(root, "line", "axis")), 1)
        self.assertEqual(len(elements(root, "polygon", "semipetal")), 1)
        self.assertEqual(len(elements(root, "polygon", "petal")), 1)
        self.assertEqual(len(elements(root, "line", "arrow")), 1)
        labels = {e.text for e in elements(root, "text")}
        self.assertEqual(labels, {"R1", "E1", "R2", "C1"})
