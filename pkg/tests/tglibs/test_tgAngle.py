"""
Created on Oct 19 2026
"""

from math import pi
from argparse import ArgumentTypeError
from tgtools.Args import parse_angle as angle_arg
from tgtools.tglibs import parse_angle
from main_tglibs import Main_tglibs


class Test_parse_angle(Main_tglibs):

    def test_values(self):
        for s, value in [
            ('0.5', 0.5),
            ('0.25pi', pi / 4),
            ('0.25*pi', pi / 4),
            ('pi', pi),
            (' 0.5PI ', pi / 2),
        ]:
            with self.subTest(s=s):
                self.assertAlmostEqual(parse_angle(s), value)

    def test_invalid(self):
        for s in ['', 'abc', '1/3pi', 'pipi']:
            with self.subTest(s=s):
                self.assertRaises(ValueError, parse_angle, s)

    def test_argparse_type(self):
        self.assertAlmostEqual(angle_arg('0.5pi'), pi / 2)
        self.assertRaises(ArgumentTypeError, angle_arg, 'abc')
