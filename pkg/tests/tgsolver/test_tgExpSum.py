"""
Created on Oct 19 2026
"""

from math import pi
import numpy as np

from tgtools.tglibs import TCoords
from tgtools.tgwords import NAMED_WORDS
from tgtools.tgisometry import (
    TriangleShape,
    from_word,
    t_coordinates,
    t_value,
)
from tgtools.tgsolver import (
    ExpSum,
    expsum_of,
)
from main_tgsolver import Main_tgsolver


def word_expsum(name):
    return expsum_of(t_coordinates(from_word(NAMED_WORDS[name])))


class Test_ExpSum(Main_tgsolver):

    def test_expsum_of_frequencies(self):
        self.assertEqual(
            expsum_of(TCoords({(0, 0): 1, (1, 0): -1})),
            ExpSum({(0, 2): 1, (0, 0): -1})
        )
        self.assertEqual(
            expsum_of(TCoords({(0, 1): 2})),
            ExpSum({(0, 0): 2})
        )

    def test_canonical(self):
        f = ExpSum({(-2, 4): 1, (0, 0): 3})
        self.assertEqual(f.canonical(), ExpSum({(0, 0): 1, (2, -4): 3}))
        self.assertEqual(ExpSum().canonical(), ExpSum())

    def test_balanced(self):
        f = ExpSum({(0, 0): 1, (4, 2): 1})
        self.assertEqual(f.balanced(), ExpSum({(-2, -1): 1, (2, 1): 1}))
        self.assertRaises(ValueError, ExpSum({(0, 0): 1, (1, 0): 1}).balanced)

    def test_cosine_curve(self):
        f = word_expsum('curve-cos')
        self.assertEqual(f.symmetry(), 1)
        self.assertListEqual(
            f.cosine_terms(),
            [(0, 0, 1), (0, 2, 2), (2, 0, 2)]
        )
        self.assertEqual(f.to_str(), '1 + 2cos(2a3) + 2cos(2a2)')

    def test_cosine_sum(self):
        f = word_expsum('curve-cos-sum')
        self.assertListEqual(
            f.cosine_terms(),
            [(0, 0, 1), (0, 2, 2), (2, 0, 2), (2, 2, 2)]
        )

    def test_cosine_difference(self):
        f = word_expsum('cos-difference')
        self.assertListEqual(
            f.cosine_terms(),
            [(0, 0, -1), (2, 0, -2), (2, 2, 2)]
        )

    def test_imaginary(self):
        f = ExpSum({(1, 0): 1, (-1, 0): -1})
        self.assertEqual(f.symmetry(), -1)
        self.assertRaises(ValueError, f.cosine_terms)
        self.assertEqual(ExpSum({(0, 0): 1, (2, 0): 2}).symmetry(), 0)

    def test_empty(self):
        self.assertListEqual(ExpSum().cosine_terms(), [])
        self.assertEqual(ExpSum().to_str(), '0')
        self.assertFalse(ExpSum().dominant())

    def test_dominant(self):
        self.assertTrue(ExpSum({(0, 0): 3, (2, 0): 1, (0, 2): -1}).dominant())
        self.assertTrue(ExpSum({(0, 0): 1}).dominant())
        self.assertFalse(word_expsum('curve-cos').dominant())

    def test_evaluate_matches_translation(self):
        # |f| is the length of the translation divided by |t1|
        for name in ('curve-cos', 'two-points', 'point-22'):
            c = t_coordinates(from_word(NAMED_WORDS[name]))
            f = expsum_of(c)
            for a2, a3 in [(0.4, 0.9), (1.2, 0.3)]:
                with self.subTest(name=name, a2=a2, a3=a3):
                    s = TriangleShape(a2, a3)
                    t1 = np.linalg.norm(t_value(TCoords({(0, 0): 1}), s))
                    self.assertAlmostEqual(
                        float(abs(f.evaluate(a2, a3))),
                        float(np.linalg.norm(t_value(c, s)) / t1),
                        places=10
                    )

    def test_evaluate_grid(self):
        f = word_expsum('two-points')
        axis = np.linspace(0.1, 1.5, 7)
        grid = f.evaluate_grid(axis, axis)
        a2, a3 = np.meshgrid(axis, axis, indexing='ij')
        np.testing.assert_allclose(grid, f.evaluate(a2, a3), atol=1e-12)

    def test_gradient(self):
        f = word_expsum('point-24')
        a2, a3, h = 0.7, 0.5, 1e-6
        d2, d3 = f.gradient(a2, a3)
        self.assertAlmostEqual(
            complex(d2),
            complex((f.evaluate(a2 + h, a3) - f.evaluate(a2 - h, a3)) / (2 * h)),
            places=6
        )
        self.assertAlmostEqual(
            complex(d3),
            complex((f.evaluate(a2, a3 + h) - f.evaluate(a2, a3 - h)) / (2 * h)),
            places=6
        )

    def test_two_points_vanish(self):
        f = word_expsum('two-points')
        self.assertAlmostEqual(abs(complex(f.evaluate(pi / 4, pi / 4))), 0, places=12)
