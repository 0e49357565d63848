"""
Created on Oct 19 2026
"""

import numpy as np

from tgtools.tgwords import NAMED_WORDS
from tgtools.tgisometry import (
    from_word,
    t_coordinates,
)
from tgtools.tgsolver import (
    ExpSum,
    expsum_of,
    implicit_locus,
    verify_on_locus,
)
from main_tgsolver import Main_tgsolver


def word_expsum(name):
    return expsum_of(t_coordinates(from_word(NAMED_WORDS[name])))


class Test_Locus(Main_tgsolver):

    def test_implicit_locus(self):
        pts = implicit_locus(lambda a2, a3: a2 - a3, samples=50)
        self.assertEqual(pts.shape, (50, 2))
        np.testing.assert_allclose(pts[:, 0], pts[:, 1], atol=1e-12)

    def test_implicit_locus_empty(self):
        pts = implicit_locus(lambda a2, a3: a2 * 0 + 1.0, samples=10)
        self.assertEqual(pts.shape, (0, 2))

    def test_cosine_curve(self):
        report = verify_on_locus(
            word_expsum('curve-cos'),
            lambda: implicit_locus(
                lambda a2, a3: 1 + 2 * np.cos(2 * a2) + 2 * np.cos(2 * a3),
                samples=100
            ),
            logger=self.logger
        )
        self.assertEqual(report.samples, 100)
        self.assertTrue(report.passed)

    def test_cosine_sum(self):
        report = verify_on_locus(
            word_expsum('curve-cos-sum'),
            lambda: implicit_locus(
                lambda a2, a3: (
                    1 + 2 * np.cos(2 * a2) + 2 * np.cos(2 * a3)
                    + 2 * np.cos(2 * (a2 + a3))
                ),
                samples=100
            ),
            logger=self.logger
        )
        self.assertTrue(report.passed)

    def test_cosine_difference(self):
        report = verify_on_locus(
            word_expsum('cos-difference'),
            lambda: implicit_locus(
                lambda a2, a3: 2 * np.cos(2 * a2 + 2 * a3) - 2 * np.cos(2 * a2) - 1,
                samples=100
            ),
            logger=self.logger
        )
        self.assertTrue(report.passed)

    def test_wrong_locus(self):
        report = verify_on_locus(
            word_expsum('curve-cos'),
            lambda: implicit_locus(lambda a2, a3: a2 - a3, samples=100),
            logger=self.logger
        )
        self.assertFalse(report.passed)
        self.assertLess(report.fraction, 0.1)

    def test_no_samples(self):
        report = verify_on_locus(
            ExpSum({(0, 0): 1}),
            lambda: np.zeros((0, 2)),
            logger=self.logger
        )
        self.assertEqual(report.samples, 0)
        self.assertFalse(report.passed)
        self.assertFalse(report.to_dict()['passed'])
