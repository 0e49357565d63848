"""
Created on Oct 19 2026
"""

from math import (
    atan,
    pi,
    sqrt,
)
import numpy as np

from tgtools.tgwords import NAMED_WORDS
from tgtools.tgisometry import (
    from_word,
    t_coordinates,
)
from tgtools.tgsolver import (
    ExpSum,
    ZeroSet,
    expsum_of,
    zero_set,
)
from main_tgsolver import Main_tgsolver


def word_expsum(name):
    return expsum_of(t_coordinates(from_word(NAMED_WORDS[name])))


class Test_ZeroSet(Main_tgsolver):

    def assertHasPoint(self, zs, a2, a3, tol):
        d = np.linalg.norm(zs.points - np.array([a2, a3]), axis=1)
        self.assertTrue(len(d) and d.min() <= tol, f'no zero near ({a2}, {a3})')

    def test_bad_arguments(self):
        f = ExpSum({(0, 0): 1, (2, 0): 1})
        self.assertRaises(ValueError, zero_set, f, grid=32)
        self.assertRaises(ValueError, zero_set, f, tol=0)

    def test_identically_zero(self):
        zs = zero_set(ExpSum(), logger=self.logger)
        self.assertTrue(zs.identically_zero)
        self.assertListEqual(zs.tags(), ['identically-zero'])

    def test_constant(self):
        zs = zero_set(ExpSum({(0, 0): 1}), logger=self.logger)
        self.assertTrue(zs.is_empty())
        self.assertListEqual(zs.tags(), ['empty'])

    def test_cosine_curve(self):
        f = word_expsum('curve-cos')
        zs = zero_set(f, logger=self.logger)
        self.assertEqual(zs.form, 'real')
        self.assertEqual(len(zs.curves), 1)
        self.assertEqual(len(zs.points), 0)
        curve = zs.curves[0]
        self.assertGreater(len(curve), 100)
        self.assertLessEqual(
            float(np.max(np.abs(f.evaluate(curve[:, 0], curve[:, 1])))),
            1e-10
        )
        np.testing.assert_allclose(
            1 + 2 * np.cos(2 * curve[:, 0]) + 2 * np.cos(2 * curve[:, 1]),
            0,
            atol=1e-9
        )
        self.assertIn('curve', zs.tags())

    def test_two_points(self):
        zs = zero_set(word_expsum('two-points'), logger=self.logger)
        self.assertListEqual(zs.curves, [])
        self.assertHasPoint(zs, pi / 4, pi / 4, 1e-9)
        self.assertHasPoint(zs, atan(sqrt(2)), atan(sqrt(2) / 3), 1e-9)

    def test_point_22(self):
        zs = zero_set(word_expsum('point-22'), logger=self.logger)
        self.assertListEqual(zs.curves, [])
        self.assertEqual(len(zs.points), 2)
        self.assertHasPoint(zs, 0.3675592642 * pi, 0.1932064551 * pi, 1e-8)
        self.assertHasPoint(zs, 0.5971477967 * pi, 0.2299624978 * pi, 1e-8)

    def test_point_24(self):
        zs = zero_set(word_expsum('point-24'), logger=self.logger)
        self.assertListEqual(zs.curves, [])
        self.assertEqual(len(zs.points), 1)
        self.assertHasPoint(zs, 0.2961623095 * pi, 0.4392394514 * pi, 1e-8)

    def test_to_dict(self):
        zs = zero_set(word_expsum('point-24'), grid=256, logger=self.logger)
        d = zs.to_dict()
        self.assertEqual(d['schema'], 'tgtools.zeroset/1')
        self.assertEqual(d['grid'], 256)
        self.assertEqual(len(d['points']), len(zs.points))
        for a2, a3, r in d['points']:
            self.assertLessEqual(r, zs.tol)
            self.assertLess(a2 + a3, pi)

    def test_keep_contours(self):
        zs = zero_set(
            word_expsum('two-points'),
            grid=128,
            keep_contours=True,
            logger=self.logger
        )
        self.assertIn('real', zs.contours)
        self.assertIn('imaginary', zs.contours)
        self.assertDictEqual(ZeroSet().contours, {})
