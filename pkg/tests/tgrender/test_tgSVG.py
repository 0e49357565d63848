"""
Created on Oct 19 2026
"""

from math import pi
import numpy as np

from tgtools.tgwords import NAMED_WORDS
from tgtools.tgisometry import TriangleShape
from tgtools.tgsolver import ZeroSet
from tgtools.tgrender import (
    SVG,
    Style,
    to_svg,
    unfold,
    zeroset_to_svg,
)
from main_tgrender import Main_tgrender


class Test_SVG(Main_tgrender):

    def test_empty(self):
        out = SVG(['a']).to_string()
        self.assertTrue(out.startswith('<?xml'))
        self.assertTrue(out.endswith('</svg>\n'))
        self.assertIn('<g id="a">\n</g>', out)

    def test_bounding_box(self):
        svg = SVG(['a'])
        svg.polyline('a', [(0, 0), (2, 1)], '#000000', 1.0)
        svg.require(-1, 3)
        self.assertTupleEqual(
            (svg.min_x, svg.max_x, svg.min_y, svg.max_y),
            (-1, 2, 0, 3)
        )

    def test_negative_zero(self):
        svg = SVG(['a'])
        svg.polygon('a', [(-0.0, 0.0), (1, 0), (0, 1)], '#000000', 1.0)
        self.assertNotIn('-0.000000', svg.to_string())

    def test_arrow_markers(self):
        svg = SVG(['a'])
        svg.arrow('a', (0, 0), (1, 1), '#ff0000', 1.0)
        svg.arrow('a', (0, 0), (1, 2), '#00ff00', 1.0)
        out = svg.to_string()
        self.assertLess(out.index('arrow-00ff00'), out.index('arrow-ff0000'))
        self.assertEqual(out.count('<marker '), 2)

    def test_save(self):
        from tempfile import TemporaryDirectory
        from os import path as os_path
        svg = SVG(['a'])
        svg.circle('a', 0, 0, 1, '#000000', 1.0)
        with TemporaryDirectory() as tmp:
            filename = os_path.join(tmp, 'out.svg')
            svg.save(filename)
            with open(filename) as f:
                self.assertEqual(f.read(), svg.to_string())


class Test_Drawings(Main_tgrender):

    def setUp(self):
        super().setUp()
        self.shape = TriangleShape(pi / 4, pi / 4)

    def test_chain_deterministic(self):
        chain = unfold(NAMED_WORDS['two-points'], self.shape)
        self.assertEqual(
            to_svg(chain),
            to_svg(unfold(NAMED_WORDS['two-points'], self.shape))
        )

    def test_chain_layers(self):
        out = to_svg(unfold('123123', self.shape))
        self.assertEqual(out.count('<polygon'), 7)
        self.assertEqual(out.count('<polyline'), 1)
        for layer in ['triangles', 'incenter-path', 'displacements', 't-vectors']:
            self.assertIn(f'<g id="{layer}">', out)
        self.assertIn('marker-end', out)

    def test_no_tvectors(self):
        chain = unfold('123123', self.shape)
        out = to_svg(chain, Style(tvectors=False))
        self.assertIn('<g id="t-vectors">\n</g>', out)

    def test_stroke(self):
        out = to_svg(unfold('12', self.shape), Style(stroke=2.5))
        self.assertIn('stroke-width="2.500000"', out)
        self.assertIn('stroke-width="5.000000"', out)

    def test_zeroset(self):
        zs = ZeroSet(
            curves=[np.array([[0.5, 0.5], [0.6, 0.7], [0.7, 0.8]])],
            points=np.array([[1.0, 1.0]])
        )
        out = zeroset_to_svg(zs)
        self.assertEqual(out.count('<circle'), 1)
        self.assertEqual(out.count('<polyline'), 1)
        self.assertIn('<g id="domain">', out)
