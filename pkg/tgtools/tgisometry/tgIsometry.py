"""
Created on Oct 19 2026

Exact arithmetic in the reflection group of a triangle,
parametric in the angles (alpha2, alpha3).

Isometries act on the right, (x)(gh) = ((x)g)h. The
incircle of the triangle is the unit circle at the origin,
edge e1 lies on y = -1 and the outward unit normals of the
edges are v1 = -u_{0,0}, v2 = u_{0,-1}, v3 = u_{1,0}, where
u_{p,q} is the unit vector at angle pi/2 + p*alpha2 + q*alpha3.
"""

from typing import (
    Dict,
    List,
    NamedTuple,
    Sequence,
    Tuple,
    Union,
)
from math import (
    acos,
    cos,
    pi,
    sin,
    tan,
)
import numpy as np

from tgtools.tglibs import (
    TCoords,
    UVec,
    parse_angle,
)
from tgtools.tgwords import (
    BadSymbol,
    to_word,
)


class NotATranslation(Exception):
    """Raised when t-coordinates are asked for an isometry
    whose linear part is not trivial."""


class NotInTranslationSubgroup(Exception):
    """Raised when a translation is not an integer combination
    of the conjugates of t1."""


class TriangleShape():
    """Angles of a Euclidean triangle, in radians.

    :param alpha2: angle at vertex A2
    :param alpha3: angle at vertex A3
    :raises ValueError: outside alpha2, alpha3 > 0, alpha2 + alpha3 < pi
    """

    def __init__(
        self,
        alpha2: float,
        alpha3: float
    ):
        alpha2 = float(alpha2)
        alpha3 = float(alpha3)
        if not (alpha2 > 0 and alpha3 > 0 and alpha2 + alpha3 < pi):
            raise ValueError(
                f'({alpha2}, {alpha3}) is not a triangle shape: '
                'expected alpha2 > 0, alpha3 > 0 and alpha2 + alpha3 < pi'
            )
        self.__alpha2 = alpha2
        self.__alpha3 = alpha3

    @classmethod
    def from_sides(cls, l1: float, l2: float, l3: float) -> 'TriangleShape':
        """Shape of the triangle with side lengths l1, l2, l3,
        li being the side opposite to vertex Ai."""
        if min(l1, l2, l3) <= 0 or 2 * max(l1, l2, l3) >= l1 + l2 + l3:
            raise ValueError(f'({l1}, {l2}, {l3}) violates the triangle inequality')
        alpha2 = acos((l1 * l1 + l3 * l3 - l2 * l2) / (2 * l1 * l3))
        alpha3 = acos((l1 * l1 + l2 * l2 - l3 * l3) / (2 * l1 * l2))
        return cls(alpha2, alpha3)

    @classmethod
    def parse(cls, alpha2: str, alpha3: str) -> 'TriangleShape':
        """Build a shape from two strings, each a number of
        radians optionally followed by 'pi'."""
        return cls(parse_angle(alpha2), parse_angle(alpha3))

    @property
    def alpha1(self) -> float:
        return pi - self.__alpha2 - self.__alpha3

    @property
    def alpha2(self) -> float:
        return self.__alpha2

    @property
    def alpha3(self) -> float:
        return self.__alpha3

    def angles(self) -> Tuple[float, float, float]:
        return (self.alpha1, self.alpha2, self.alpha3)

    def sides(self) -> Tuple[float, float, float]:
        """Side lengths for inradius 1, l_i = cot(a_j/2) + cot(a_k/2)."""
        c1, c2, c3 = (1 / tan(a / 2) for a in self.angles())
        return (c2 + c3, c1 + c3, c1 + c2)

    def vertices(self) -> np.ndarray:
        """Rows A1, A2, A3 of the triangle whose incircle is the
        unit circle at the origin, placed with e1 on y = -1."""
        c2 = 1 / tan(self.alpha2 / 2)
        c3 = 1 / tan(self.alpha3 / 2)
        a2 = np.array([-c2, -1.0])
        a3 = np.array([c3, -1.0])
        # A1 is where the lines of e2 and e3 meet
        n2 = np.array([cos(pi / 2 - self.alpha3), sin(pi / 2 - self.alpha3)])
        n3 = np.array([cos(pi / 2 + self.alpha2), sin(pi / 2 + self.alpha2)])
        a1 = np.linalg.solve(np.vstack([n2, n3]), np.ones(2))
        return np.vstack([a1, a2, a3])

    def __eq__(self, other) -> bool:
        if isinstance(other, TriangleShape):
            return (self.alpha2, self.alpha3) == (other.alpha2, other.alpha3)
        return False

    def __repr__(self) -> str:
        return f'TriangleShape({self.alpha2!r}, {self.alpha3!r})'


class LinearPart(NamedTuple):
    """Rot(p, q), the rotation by 2p*alpha2 + 2q*alpha3, or
    Ref(p, q), the reflection across the line through the origin
    at angle p*alpha2 + q*alpha3."""
    kind: str
    p: int
    q: int

    def is_rotation(self) -> bool:
        return self.kind == 'rot'

    def act(self, v: UVec) -> UVec:
        """Image of a u-basis vector under this linear part."""
        if self.kind == 'rot':
            return v.shift(2 * self.p, 2 * self.q)
        return -v.point_reflect(2 * self.p, 2 * self.q)

    def inverse(self) -> 'LinearPart':
        if self.kind == 'rot':
            return Rot(-self.p, -self.q)
        return self

    def then(self, other: 'LinearPart') -> 'LinearPart':
        """Linear part of self followed by other."""
        if self.kind == 'rot':
            if other.kind == 'rot':
                return Rot(self.p + other.p, self.q + other.q)
            return Ref(other.p - self.p, other.q - self.q)
        if other.kind == 'rot':
            return Ref(self.p + other.p, self.q + other.q)
        return Rot(other.p - self.p, other.q - self.q)

    def matrix(self, s: TriangleShape) -> np.ndarray:
        """Matrix M with (x)g = M @ x for column vectors x."""
        if self.kind == 'rot':
            t = 2 * self.p * s.alpha2 + 2 * self.q * s.alpha3
            return np.array([[cos(t), -sin(t)], [sin(t), cos(t)]])
        t = 2 * (self.p * s.alpha2 + self.q * s.alpha3)
        return np.array([[cos(t), sin(t)], [sin(t), -cos(t)]])

    def to_dict(self) -> Dict:
        return {'kind': self.kind, 'p': self.p, 'q': self.q}

    def __str__(self) -> str:
        return f"{'Rot' if self.kind == 'rot' else 'Ref'}({self.p},{self.q})"


def Rot(p: int, q: int) -> LinearPart:
    return LinearPart('rot', p, q)


def Ref(p: int, q: int) -> LinearPart:
    return LinearPart('ref', p, q)


def u_vector(p: int, q: int, s: TriangleShape) -> np.ndarray:
    t = pi / 2 + p * s.alpha2 + q * s.alpha3
    return np.array([cos(t), sin(t)])


def uvec_value(v: UVec, s: TriangleShape) -> np.ndarray:
    """Numeric value of a formal combination of u-vectors."""
    out = np.zeros(2)
    for (p, q), c in v.items():
        out += c * u_vector(p, q, s)
    return out


class SymIsometry():
    """An isometry x -> (x)lin + trans with symbolic linear part
    and translation part given on the u-basis."""

    __slots__ = ('lin', 'trans')

    def __init__(
        self,
        lin: LinearPart,
        trans: UVec = None
    ):
        self.lin = lin
        if trans is None:
            trans = UVec()
        elif not isinstance(trans, UVec):
            trans = UVec(dict(trans.items()))
        self.trans = trans

    @classmethod
    def identity(cls) -> 'SymIsometry':
        return cls(Rot(0, 0))

    def then(self, other: 'SymIsometry') -> 'SymIsometry':
        return compose(self, other)

    def __mul__(self, other: 'SymIsometry') -> 'SymIsometry':
        return compose(self, other)

    def inverse(self) -> 'SymIsometry':
        inv = self.lin.inverse()
        return SymIsometry(inv, -inv.act(self.trans))

    def __pow__(self, k: int) -> 'SymIsometry':
        base = self if k >= 0 else self.inverse()
        out = SymIsometry.identity()
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def is_translation(self) -> bool:
        return self.lin == Rot(0, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymIsometry):
            return self.lin == other.lin and self.trans == other.trans
        return False

    def __hash__(self) -> int:
        return hash((self.lin, self.trans))

    def to_dict(self) -> Dict:
        return {
            'lin': self.lin.to_dict(),
            'trans': self.trans.to_list()
        }

    def __repr__(self) -> str:
        return f'SymIsometry({self.lin}, {self.trans.to_list()})'


_AXES = {1: (0, 0), 2: (0, -1), 3: (1, 0)}
_NORMALS = {
    1: UVec({(0, 0): -1}),
    2: UVec({(0, -1): 1}),
    3: UVec({(1, 0): 1}),
}


def _check_symbol(i: int) -> None:
    if i not in _AXES:
        raise BadSymbol(f'symbol {i!r} is not in {{1, 2, 3}}')


def normal(i: int) -> UVec:
    """Outward unit normal v_i of edge e_i, on the u-basis."""
    _check_symbol(i)
    return _NORMALS[i]


def generator(i: int) -> SymIsometry:
    """The reflection r_i across the line of edge e_i."""
    _check_symbol(i)
    return SymIsometry(Ref(*_AXES[i]), _NORMALS[i].scale(2))


_GENERATORS = {i: generator(i) for i in _AXES}


def compose(g: SymIsometry, h: SymIsometry) -> SymIsometry:
    """g followed by h: lin is composed, and the translation of g
    is moved by the linear part of h before adding h's own."""
    return SymIsometry(
        g.lin.then(h.lin),
        h.lin.act(g.trans) + h.trans
    )


def from_word(w: Union[str, Sequence[int]]) -> SymIsometry:
    """Product of the generators read left to right."""
    lin = Rot(0, 0)
    trans = UVec()
    for s in to_word(w):
        r = _GENERATORS[s]
        lin = lin.then(r.lin)
        trans = r.lin.act(trans) + r.trans
    return SymIsometry(lin, trans)


def is_identity(g: SymIsometry) -> bool:
    return g.lin == Rot(0, 0) and not g.trans


def evaluate(
    g: SymIsometry,
    s: TriangleShape
) -> Tuple[np.ndarray, np.ndarray]:
    """Numeric (M, v) with (x)g = M @ x + v."""
    return g.lin.matrix(s), uvec_value(g.trans, s)


def translation_vector(w: Union[str, Sequence[int]]) -> List[UVec]:
    """Contributions 2(v_{i_j})s_{i_{j+1}}...s_{i_n} of each letter
    to the translation part of the word, in letter order."""
    word = to_word(w)
    out: List[UVec] = []
    suffix = Rot(0, 0)
    for s in reversed(word):
        out.append(suffix.act(_NORMALS[s].scale(2)))
        suffix = _GENERATORS[s].lin.then(suffix)
    return out[::-1]


# t1 = (r1r2r3)^2 on the u-basis, t1 = 2 * T1_HALF
T1_HALF = UVec({
    (0, 0): 1, (0, 1): 1, (1, 0): 1,
    (1, 2): -1, (2, 2): -1, (2, 1): -1,
})
T1 = T1_HALF.scale(2)


def t_vector(n: int, m: int) -> UVec:
    """t_{n,m} = (t1)(r1r2)^n(r1r3)^m on the u-basis."""
    return T1.shift(2 * m, -2 * n)


def relative_angle(n: int, m: int) -> Tuple[int, int]:
    """Angle of t_{n,m} relative to t1, as the coefficients
    (a, b) of a*alpha2 + b*alpha3."""
    return (2 * m, -2 * n)


_CONJUGATES = {
    1: lambda n, m: (-n + 1, -m - 1),
    2: lambda n, m: (-n + 2, -m - 1),
    3: lambda n, m: (-n + 1, -m),
}


def conj_index(i: int, nm: Tuple[int, int]) -> Tuple[int, int]:
    """Index of (t_{n,m})r_i."""
    _check_symbol(i)
    return _CONJUGATES[i](*nm)


def t_coordinates(g: SymIsometry) -> TCoords:
    """Coordinates of a translation on the basis t_{n,m}.

    The translation part is read as a Laurent polynomial in
    X, Y (key (a, b) <-> X^a Y^b) and divided by t1. A quotient
    monomial X^a Y^b stands for t_{-b/2, a/2}.

    :raises NotATranslation: if g.lin is not Rot(0, 0)
    :raises NotInTranslationSubgroup: if the division is not exact
    """
    if g.lin != Rot(0, 0):
        raise NotATranslation(f'linear part {g.lin} is not Rot(0,0)')
    try:
        half = g.trans.halve()
    except ValueError as e:
        raise NotInTranslationSubgroup(str(e))
    quo, rem = half.divmod(T1_HALF)
    if rem:
        raise NotInTranslationSubgroup(
            f'remainder {rem.to_list()} after division by t1'
        )
    coords: Dict[Tuple[int, int], int] = {}
    for (a, b), c in quo.items():
        if a % 2 or b % 2:
            raise NotInTranslationSubgroup(
                f'quotient term ({a},{b}) is not on the t-lattice'
            )
        coords[(-b // 2, a // 2)] = c
    return TCoords(coords)


def t_value(c: TCoords, s: TriangleShape) -> np.ndarray:
    """Numeric translation vector of sum c(n,m) t_{n,m}."""
    out = np.zeros(2)
    t1 = uvec_value(T1, s)
    for (n, m), k in c.items():
        a, b = relative_angle(n, m)
        t = a * s.alpha2 + b * s.alpha3
        out += k * np.array([
            cos(t) * t1[0] - sin(t) * t1[1],
            sin(t) * t1[0] + cos(t) * t1[1],
        ])
    return out


def rho(s: TriangleShape) -> float:
    """Length of t1."""
    return 4 * (sin(s.alpha1) + sin(s.alpha2) + sin(s.alpha3))
