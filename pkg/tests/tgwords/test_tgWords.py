"""
Created on Oct 19 2026
"""

from itertools import product
from tgtools.tgwords import (
    NAMED_WORDS,
    BadSymbol,
    DeletePair,
    NotStable,
    Transpose,
    apply_move,
    cyclic_reduce,
    free_reduce,
    is_canonical,
    is_cyclically_reduced,
    is_stable,
    relabel,
    replay,
    stable_reduction,
    to_word,
    word_canonical,
    word_orbit,
    word_str,
)
from main_tgwords import Main_tgwords


def all_words(n):
    return product((1, 2, 3), repeat=n)


class Test_tgWords(Main_tgwords):

    def test_to_word(self):
        self.assertTupleEqual(to_word('1231'), (1, 2, 3, 1))
        self.assertTupleEqual(to_word([3, 2]), (3, 2))
        self.assertTupleEqual(to_word(''), ())

    def test_to_word_bad_symbol(self):
        for w in ['124', '1 2', [1, 0], 'a']:
            with self.subTest(w=w):
                self.assertRaises(BadSymbol, to_word, w)

    def test_word_str(self):
        self.assertEqual(word_str((1, 2, 3)), '123')

    def test_free_reduce(self):
        self.assertTupleEqual(free_reduce('1221'), ())
        self.assertTupleEqual(free_reduce('12213'), (3,))
        self.assertTupleEqual(free_reduce('123'), (1, 2, 3))

    def test_cyclic_reduce(self):
        self.assertTupleEqual(cyclic_reduce('1231'), (2, 3))
        self.assertTupleEqual(cyclic_reduce('11'), ())
        self.assertTupleEqual(cyclic_reduce('121'), (2,))
        self.assertTrue(is_cyclically_reduced(cyclic_reduce('31213')))

    def test_is_stable(self):
        self.assertTrue(is_stable(''))
        self.assertTrue(is_stable('123123'))
        self.assertTrue(is_stable(NAMED_WORDS['commutator']))
        self.assertFalse(is_stable('1212'))
        self.assertFalse(is_stable('123'))

    def test_named_words_stable(self):
        for name, w in NAMED_WORDS.items():
            with self.subTest(name=name):
                self.assertTrue(is_stable(w))
                self.assertTrue(is_cyclically_reduced(to_word(w)))

    def test_apply_move(self):
        self.assertTupleEqual(
            apply_move((1, 2, 3, 1), Transpose(1)),
            (3, 1, 1, 2)
        )
        self.assertTupleEqual(
            apply_move((1, 2, 2, 3), DeletePair(2)),
            (1, 3)
        )
        self.assertRaises(ValueError, apply_move, (1, 2, 3), DeletePair(1))
        self.assertRaises(ValueError, apply_move, (1, 2, 3), Transpose(1))
        self.assertEqual(str(Transpose(3)), 'Transpose(3)')

    def test_stable_reduction_replay(self):
        for n in range(0, 11, 2):
            for w in all_words(n):
                if not is_stable(w):
                    continue
                with self.subTest(w=word_str(w)):
                    moves = stable_reduction(w, logger=self.logger)
                    self.assertTupleEqual(replay(w, moves), ())

    def test_stable_reduction_named(self):
        for w in NAMED_WORDS.values():
            with self.subTest(w=w):
                self.assertTupleEqual(
                    replay(w, stable_reduction(w, logger=self.logger)),
                    ()
                )

    def test_stable_reduction_first_pair(self):
        self.assertListEqual(
            stable_reduction('11', logger=self.logger),
            [DeletePair(1)]
        )

    def test_stable_reduction_not_stable(self):
        self.assertRaises(NotStable, stable_reduction, '1212')

    def test_relabel(self):
        self.assertTupleEqual(relabel((3, 1, 3, 2)), (1, 2, 1, 3))

    def test_word_orbit(self):
        orbit = word_orbit('123123')
        self.assertEqual(len(orbit), 6)
        self.assertIn((3, 2, 1, 3, 2, 1), orbit)
        self.assertSetEqual(word_orbit(''), {()})

    def test_word_canonical(self):
        self.assertTupleEqual(
            word_canonical('231231'),
            (1, 2, 3, 1, 2, 3)
        )
        self.assertTupleEqual(
            word_canonical('3132'),
            word_canonical('2321')
        )
        self.assertTupleEqual(word_canonical(''), ())

    def test_canonical_is_orbit_minimum(self):
        for w in ['1213', '123132', NAMED_WORDS['curve-cos']]:
            with self.subTest(w=w):
                self.assertTupleEqual(
                    word_canonical(w),
                    min(word_orbit(w))
                )

    def test_is_canonical(self):
        for n in range(1, 9):
            for w in all_words(n):
                if not is_cyclically_reduced(w):
                    continue
                with self.subTest(w=word_str(w)):
                    self.assertEqual(
                        is_canonical(w),
                        word_canonical(w) == w
                    )
