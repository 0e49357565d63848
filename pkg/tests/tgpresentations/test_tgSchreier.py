"""
Created on Oct 19 2026
"""

from tgtools.tgpresentations import (
    FWord,
    Relator,
    b_to_d,
    b_to_y,
    b_word,
    commutator_b,
    d_to_b,
    lex_positive,
    primed_cores,
    relator_holds,
    rs_conj_general,
    rs_conj_t1,
    rs_relation_cores,
    rs_relation_e,
)
from main_tgpresentations import Main_tgpresentations


def y_power(i, k):
    return FWord.y(i) ** k


class Test_tgSchreier(Main_tgpresentations):

    def test_lex_positive(self):
        self.assertTrue(lex_positive(0, 1))
        self.assertTrue(lex_positive(1, -5))
        self.assertFalse(lex_positive(0, 0))
        self.assertFalse(lex_positive(0, -1))
        self.assertFalse(lex_positive(-1, 5))

    def test_b_word(self):
        self.assertEqual(b_word(2, 0), FWord())
        y2, y3 = FWord.y(2), FWord.y(3)
        self.assertEqual(
            b_word(0, 1),
            y3 * y2 * y3.inverse() * y2.inverse()
        )

    def test_commutator_b(self):
        for i in range(-3, 4):
            for j in range(-3, 4):
                with self.subTest(i=i, j=j):
                    self.assertEqual(
                        b_to_y(commutator_b(i, j)).reduce(),
                        (
                            y_power(2, i) * y_power(3, j)
                            * y_power(2, -i) * y_power(3, -j)
                        ).reduce()
                    )

    def test_b_d_roundtrip(self):
        for i in range(-3, 4):
            for j in range(-3, 4):
                with self.subTest(i=i, j=j):
                    self.assertEqual(
                        d_to_b(b_to_d(FWord.b(i, j))).reduce(),
                        FWord.b(i, j)
                    )

    def test_first_core(self):
        for k in range(-2, 3):
            for l in range(-2, 3):
                with self.subTest(k=k, l=l):
                    a, _ = rs_relation_cores(1, 0, k, l)
                    self.assertEqual(a, FWord.d(k, l))

    def test_conj_t1_general(self):
        # with n = m = 0 the conjugator is empty
        for k in range(-2, 3):
            for l in range(-2, 3):
                with self.subTest(k=k, l=l):
                    self.assertEqual(
                        rs_conj_general(0, 0, k, l),
                        rs_conj_t1(k, l)
                    )
        self.assertRaises(ValueError, rs_conj_general, -1, 0, 0, 0)

    def test_relations_hold(self):
        for n, m in [(0, 1), (1, -1), (1, 0), (2, 1)]:
            for k in range(-2, 3):
                for l in range(-2, 3):
                    with self.subTest(n=n, m=m, k=k, l=l):
                        self.assertTrue(relator_holds(Relator(
                            'e', rs_relation_e(n, m, k, l), model='metabelian'
                        )))

    def test_relation_not_lex_positive(self):
        self.assertRaises(ValueError, rs_relation_e, 0, -1, 0, 0)

    def test_primed_cores(self):
        self.assertTupleEqual(
            primed_cores(1, 0, 0, -1),
            ((1, 0), (0, 0))
        )
