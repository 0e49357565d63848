"""
Created on Oct 19 2026
"""

from itertools import product
from math import (
    atan,
    cos,
    pi,
    sin,
    sqrt,
)
import numpy as np

from tgtools.tglibs import (
    TCoords,
    UVec,
)
from tgtools.tgwords import (
    NAMED_WORDS,
    BadSymbol,
    is_stable,
)
from tgtools.tgisometry import (
    T1,
    NotATranslation,
    NotInTranslationSubgroup,
    Ref,
    Rot,
    SymIsometry,
    TriangleShape,
    conj_index,
    evaluate,
    from_word,
    generator,
    is_identity,
    relative_angle,
    rho,
    t_coordinates,
    t_value,
    t_vector,
    translation_vector,
    uvec_value,
)
from main_tgisometry import Main_tgisometry


def random_shapes(n, seed=0):
    rng = np.random.default_rng(seed)
    shapes = []
    while len(shapes) < n:
        a2, a3 = rng.uniform(0.05, pi - 0.05, 2)
        if a2 + a3 < pi - 0.05:
            shapes.append(TriangleShape(a2, a3))
    return shapes


def apply(g, s, x):
    m, v = evaluate(g, s)
    return m @ x + v


class Test_TriangleShape(Main_tgisometry):

    def test_invalid(self):
        for a2, a3 in [(0, 1), (1, 0), (-1, 1), (2, 2), (pi / 2, pi / 2)]:
            with self.subTest(a2=a2, a3=a3):
                self.assertRaises(ValueError, TriangleShape, a2, a3)

    def test_angles(self):
        s = TriangleShape(pi / 4, pi / 3)
        self.assertAlmostEqual(sum(s.angles()), pi)
        self.assertAlmostEqual(s.alpha1, 5 * pi / 12)

    def test_from_sides(self):
        s = TriangleShape.from_sides(1, 1, 1)
        for a in s.angles():
            self.assertAlmostEqual(a, pi / 3)
        self.assertRaises(ValueError, TriangleShape.from_sides, 1, 1, 3)

    def test_parse(self):
        self.assertEqual(
            TriangleShape.parse('0.25pi', '0.5'),
            TriangleShape(pi / 4, 0.5)
        )
        self.assertRaises(ValueError, TriangleShape.parse, 'abc', '0.5')
        self.assertRaises(ValueError, TriangleShape.parse, '0.7pi', '0.5pi')

    def test_incircle(self):
        for s in random_shapes(10):
            a1, a2, a3 = s.vertices()
            # e1 = A2A3 lies on y = -1
            self.assertAlmostEqual(a2[1], -1)
            self.assertAlmostEqual(a3[1], -1)
            l1, l2, l3 = s.sides()
            self.assertAlmostEqual(np.linalg.norm(a3 - a2), l1)
            self.assertAlmostEqual(np.linalg.norm(a3 - a1), l2)
            self.assertAlmostEqual(np.linalg.norm(a2 - a1), l3)


class Test_tgIsometry(Main_tgisometry):

    def test_generator_involution(self):
        for i in (1, 2, 3):
            with self.subTest(i=i):
                self.assertTrue(is_identity(generator(i) * generator(i)))

    def test_generator_bad_symbol(self):
        self.assertRaises(BadSymbol, generator, 4)
        self.assertRaises(BadSymbol, from_word, '14')

    def test_generator_fixes_edge(self):
        # r_i fixes the two vertices other than A_i
        for s in random_shapes(10):
            vertices = s.vertices()
            for i in (1, 2, 3):
                for k in range(3):
                    if k == i - 1:
                        continue
                    with self.subTest(i=i, k=k):
                        np.testing.assert_allclose(
                            apply(generator(i), s, vertices[k]),
                            vertices[k],
                            atol=1e-12
                        )

    def test_from_word_acts_left_to_right(self):
        x = np.array([0.3, -0.7])
        for s in random_shapes(5):
            for w in ['12', '1323', '312231']:
                with self.subTest(w=w):
                    y = x
                    for i in w:
                        y = apply(generator(int(i)), s, y)
                    np.testing.assert_allclose(
                        apply(from_word(w), s, x), y, atol=1e-12
                    )

    def test_compose_inverse(self):
        g = from_word('12312')
        self.assertTrue(is_identity(g * g.inverse()))
        self.assertEqual(g ** 2, g * g)
        self.assertEqual(g ** -1, g.inverse())
        self.assertEqual(SymIsometry.identity(), from_word(''))

    def test_linear_parts(self):
        self.assertEqual(from_word('1').lin, Ref(0, 0))
        self.assertEqual(from_word('').lin, Rot(0, 0))
        self.assertTrue(from_word('12').lin.is_rotation())

    def test_commutator_identity(self):
        self.assertTrue(is_identity(from_word(NAMED_WORDS['commutator'])))

    def test_fagnano_not_identity(self):
        g = from_word('123123')
        self.assertFalse(is_identity(g))
        self.assertTrue(g.is_translation())
        self.assertEqual(g.trans, T1)

    def test_stable_iff_translation(self):
        disagree = [
            w for n in range(0, 11)
            for w in product((1, 2, 3), repeat=n)
            if is_stable(w) != (from_word(w).lin == Rot(0, 0))
        ]
        self.assertListEqual(disagree, [])

    def test_evaluate_homomorphism(self):
        rng = np.random.default_rng(4)
        shapes = random_shapes(20, seed=4)
        for k in range(500):
            u = tuple(int(i) for i in rng.integers(1, 4, rng.integers(0, 16)))
            v = tuple(int(i) for i in rng.integers(1, 4, rng.integers(0, 16)))
            s = shapes[k % len(shapes)]
            m_u, t_u = evaluate(from_word(u), s)
            m_v, t_v = evaluate(from_word(v), s)
            m, t = evaluate(from_word(u + v), s)
            with self.subTest(u=u, v=v):
                np.testing.assert_allclose(m, m_v @ m_u, atol=1e-10)
                np.testing.assert_allclose(t, m_v @ t_u + t_v, atol=1e-8)

    def test_relative_angle(self):
        t1 = SymIsometry(Rot(0, 0), T1)
        for n, m in product(range(-3, 4), repeat=2):
            g = from_word('12') ** n * from_word('13') ** m
            conj = g.inverse() * t1 * g
            with self.subTest(n=n, m=m):
                self.assertEqual(conj.trans, t_vector(n, m))
            a, b = relative_angle(n, m)
            self.assertTupleEqual((a, b), (2 * m, -2 * n))
            for s in random_shapes(3, seed=5):
                angle = a * s.alpha2 + b * s.alpha3
                rot = np.array([
                    [cos(angle), -sin(angle)],
                    [sin(angle), cos(angle)],
                ])
                with self.subTest(n=n, m=m, s=s):
                    np.testing.assert_allclose(
                        evaluate(conj, s)[1],
                        rot @ uvec_value(T1, s),
                        atol=1e-9
                    )

    def test_t_coordinates_agree_with_evaluate(self):
        shapes = random_shapes(2, seed=6)
        for n in range(2, 11, 2):
            for w in product((1, 2, 3), repeat=n):
                if not is_stable(w):
                    continue
                g = from_word(w)
                c = t_coordinates(g)
                for s in shapes:
                    with self.subTest(w=w, s=s):
                        np.testing.assert_allclose(
                            t_value(c, s), evaluate(g, s)[1], atol=1e-9
                        )

    def test_cosine_identity(self):
        for s in random_shapes(100, seed=7):
            c1, c2, c3 = (cos(a) for a in s.angles())
            with self.subTest(s=s):
                self.assertAlmostEqual(
                    c1 * c1 + c2 * c2 + c3 * c3 + 2 * c1 * c2 * c3, 1.0, places=10
                )

    def test_translation_vector_sum(self):
        for w in list(NAMED_WORDS.values()) + ['1', '1213', '31']:
            with self.subTest(w=w):
                total = UVec()
                for v in translation_vector(w):
                    total = total + v
                self.assertEqual(total, from_word(w).trans)

    def test_rho(self):
        for s in random_shapes(50):
            with self.subTest(s=s):
                _, v = evaluate(from_word('123123'), s)
                self.assertAlmostEqual(
                    float(np.linalg.norm(v)), rho(s), delta=1e-12 * rho(s)
                )

    def test_t_coordinates_fagnano(self):
        self.assertEqual(
            t_coordinates(from_word('123123')),
            TCoords({(0, 0): 1})
        )

    def test_t_coordinates_identity(self):
        self.assertFalse(t_coordinates(from_word(NAMED_WORDS['commutator'])))

    def test_t_coordinates_cosine_curve(self):
        c = t_coordinates(from_word(NAMED_WORDS['curve-cos']))
        self.assertEqual(
            c,
            TCoords({
                (0, 0): 1, (0, 1): 1, (-1, 1): 1,
                (1, 1): 1, (0, 2): 1,
            })
        )
        self.assertEqual(c.t_length(), 5)

    def test_t_coordinates_cosine_sum(self):
        c = t_coordinates(from_word(NAMED_WORDS['curve-cos-sum']))
        self.assertEqual(c.t_length(), 7)
        self.assertTrue(all(k == 1 for _, k in c.items()))

    def test_t_coordinates_errors(self):
        self.assertRaises(NotATranslation, t_coordinates, from_word('12'))
        self.assertRaises(
            NotInTranslationSubgroup,
            t_coordinates,
            SymIsometry(Rot(0, 0), UVec({(0, 0): 2}))
        )
        self.assertRaises(
            NotInTranslationSubgroup,
            t_coordinates,
            SymIsometry(Rot(0, 0), UVec({(0, 0): 1}))
        )

    def test_t_coordinates_roundtrip_value(self):
        for w in NAMED_WORDS.values():
            g = from_word(w)
            c = t_coordinates(g)
            for s in random_shapes(3, seed=1):
                with self.subTest(w=w, s=s):
                    np.testing.assert_allclose(
                        t_value(c, s),
                        uvec_value(g.trans, s),
                        atol=1e-9
                    )

    def test_conjugates(self):
        # (t_{n,m})r_i computed on the u-basis
        for i in (1, 2, 3):
            r = generator(i)
            for n, m in [(0, 0), (1, -2), (-1, 3)]:
                with self.subTest(i=i, n=n, m=m):
                    t = SymIsometry(Rot(0, 0), t_vector(n, m))
                    conj = r.inverse() * t * r
                    self.assertEqual(
                        conj.trans,
                        t_vector(*conj_index(i, (n, m)))
                    )

    def test_equilateral_rho(self):
        s = TriangleShape(pi / 3, pi / 3)
        self.assertAlmostEqual(rho(s), 6 * sqrt(3))
        s = TriangleShape(pi / 4, atan(1))
        self.assertAlmostEqual(rho(s), 4 * (1 + sqrt(2)))
