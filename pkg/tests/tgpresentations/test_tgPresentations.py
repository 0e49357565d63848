"""
Created on Oct 19 2026
"""

from pytest import mark
from tgtools.tgpresentations import (
    BadWindow,
    FWord,
    Relator,
    minimality_witness,
    presentation,
    relator_holds,
    relators_G,
    relators_G_min,
    relators_H_min,
    relators_S,
    verify_relators,
    window_pairs,
)
from main_tgpresentations import Main_tgpresentations


class Test_tgPresentations(Main_tgpresentations):

    def test_window_pairs(self):
        self.assertListEqual(
            list(window_pairs(1)),
            [(0, 1), (1, -1), (1, 0), (1, 1)]
        )
        self.assertEqual(len(list(window_pairs(2, positive=False))), 24)

    def test_counts(self):
        self.assertEqual(len(relators_S()), 4)
        self.assertEqual(len(relators_G(1)), 3 + 8)
        self.assertEqual(len(relators_H_min(2)), 12)
        self.assertEqual(len(relators_G_min(1)), 7)

    def test_presentation_names(self):
        self.assertEqual(len(presentation('gmin', 1)), 7)
        self.assertEqual(len(presentation('G_min', 1)), 7)
        self.assertEqual(len(presentation('s', 5)), 4)
        self.assertRaises(ValueError, presentation, 'K', 1)

    def test_bad_window(self):
        for f in (relators_G, relators_H_min, relators_G_min):
            with self.subTest(f=f.__name__):
                self.assertRaises(BadWindow, f, 0)

    def test_verify_S(self):
        report = verify_relators(relators_S(), 'S', logger=self.logger)
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 4)

    def test_verify_G(self):
        report = verify_relators(relators_G(3), 'G', 3, logger=self.logger)
        self.assertListEqual(report.failures, [])
        self.assertEqual(report.checked, 3 + 48)

    def test_verify_H_min(self):
        report = verify_relators(relators_H_min(4), 'H_min', 4, logger=self.logger)
        self.assertTrue(report.passed)

    def test_verify_G_min(self):
        report = verify_relators(relators_G_min(3), 'G_min', 3, logger=self.logger)
        self.assertTrue(report.passed)

    def test_verify_failure(self):
        x1, x2, x3 = FWord.x(1), FWord.x(2), FWord.x(3)
        rs = [
            Relator('x1^2', x1 ** 2),
            Relator('x1x2', x1 * x2),
            Relator('(x1x2x3)^2', (x1 * x2 * x3) ** 2),
        ]
        report = verify_relators(rs, logger=self.logger)
        self.assertFalse(report.passed)
        self.assertListEqual(report.failures, ['x1x2', '(x1x2x3)^2'])
        self.assertEqual(report.to_dict()['schema'], 'tgtools.verify/1')

    def test_linear_model(self):
        w = (FWord.x(1) * FWord.x(2) * FWord.x(3)) ** 2
        self.assertTrue(relator_holds(Relator('t1', w, model='linear')))
        self.assertFalse(relator_holds(Relator('t1', w)))
        self.assertFalse(relator_holds(Relator('x1', FWord.x(1), model='linear')))

    def test_metabelian_model(self):
        y2, y3 = FWord.y(2), FWord.y(3)
        self.assertFalse(relator_holds(Relator('c', y2 * y3 * y2.inverse() * y3.inverse())))
        self.assertTrue(relator_holds(Relator('e', y2 * y2.inverse())))


class Test_MinimalityWitness(Main_tgpresentations):

    def test_witness(self):
        for n0, m0 in [(0, 1), (1, -1), (1, 0)]:
            with self.subTest(n0=n0, m0=m0):
                report = minimality_witness(n0, m0, 2, logger=self.logger)
                self.assertListEqual(report.failures, [])
                self.assertTrue(report.omitted_image)
                self.assertTrue(report.passed)

    def test_witness_primed(self):
        report = minimality_witness(1, 0, 2, primed=True, logger=self.logger)
        self.assertTrue(report.passed)
        self.assertIn([1, 0, 0, -1], report.primed_hits)
        self.assertIn('primed_hits', report.to_dict())

    def test_witness_errors(self):
        self.assertRaises(BadWindow, minimality_witness, 3, 0, 2)
        self.assertRaises(ValueError, minimality_witness, -1, 0, 2)
        self.assertRaises(ValueError, minimality_witness, 0, 0, 2)

    @mark.slow
    def test_witness_window_4(self):
        for n0, m0 in window_pairs(2):
            with self.subTest(n0=n0, m0=m0):
                self.assertTrue(
                    minimality_witness(n0, m0, 4, logger=self.logger).passed
                )
