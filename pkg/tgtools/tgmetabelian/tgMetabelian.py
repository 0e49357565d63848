"""
Created on Oct 19 2026

The rotation subgroup as the free metabelian group on
y2 = r2r1 and y3 = r1r3.

An element is stored as its exponent sums (a, b) and the
winding numbers of a closed lattice path. Reading a y-word
draws the path of prefix exponent vectors, y2 stepping along
the first axis and y3 along the second; the path is closed by
going back along the reference path y2^a y3^b. The winding
number of the closed path around each unit square is counted
counterclockwise positive.

A y-word is a tuple of signed generators: 2, -2, 3, -3 stand
for y2, y2^-1, y3, y3^-1.
"""

from typing import (
    Dict,
    Iterable,
    List,
    Sequence,
    Tuple,
    Union,
)
from collections import defaultdict

from tgtools.tglibs import (
    TCoords,
    WindingMap,
    tgObject,
)
from tgtools.tgwords import to_word

YWord = Tuple[int, ...]

Y_LETTERS = (2, -2, 3, -3)


class OddLength(Exception):
    """Raised when a word of odd length is read as a rotation."""


class NotInCommutatorSubgroup(Exception):
    """Raised when t-coordinates are asked for an element with
    non-zero exponent sums."""


# r_i r_j -> y-word, for the blocks of an even-length word
_BLOCKS: Dict[Tuple[int, int], YWord] = {
    (2, 1): (2,),
    (1, 2): (-2,),
    (1, 3): (3,),
    (3, 1): (-3,),
    (2, 3): (2, 3),
    (3, 2): (-3, -2),
    (1, 1): (),
    (2, 2): (),
    (3, 3): (),
}


def to_ywords(w: Union[str, Sequence[int]]) -> YWord:
    """Rewrite an even-length word block by block in y2, y3.

    :raises OddLength: if the word has odd length
    """
    word = to_word(w)
    if len(word) % 2:
        raise OddLength(f'word of length {len(word)} is not a rotation')
    out: List[int] = []
    for i in range(0, len(word), 2):
        out.extend(_BLOCKS[(word[i], word[i + 1])])
    return tuple(out)


def yword_inverse(yw: Sequence[int]) -> YWord:
    return tuple(-g for g in reversed(yw))


def yword_str(yw: Iterable[int]) -> str:
    return ''.join(
        f'y{abs(g)}' if g > 0 else f'y{abs(g)}^-1'
        for g in yw
    )


def _reference_flow(a: int, x0: int = 0, y0: int = 0) -> Dict[Tuple[int, int], int]:
    """Horizontal flow of the path y2^a starting at (x0, y0)."""
    if a >= 0:
        return {(x0 + x, y0): 1 for x in range(a)}
    return {(x0 + x, y0): -1 for x in range(a, 0)}


def _winding(flow: Dict[Tuple[int, int], int]) -> WindingMap:
    """Winding numbers of a closed path from its horizontal flow.

    The winding number of square (n, m) is the net flow through
    the horizontal edges of column n at heights <= m.
    """
    columns: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for (x, y), h in flow.items():
        if h:
            columns[x].append((y, h))
    out: Dict[Tuple[int, int], int] = {}
    for x, edges in columns.items():
        edges.sort()
        acc = 0
        for (y, h), nxt in zip(edges, edges[1:] + [None]):
            acc += h
            if acc and nxt is not None:
                for m in range(y, nxt[0]):
                    out[(x, m)] = acc
        if acc:
            raise ValueError(f'flow is not closed in column {x}')
    return WindingMap(out)


def _correction(a1: int, b1: int, a2: int, b2: int) -> WindingMap:
    """Winding of the loop made of the reference paths of two
    factors and the reversed reference path of their product."""
    flow: Dict[Tuple[int, int], int] = defaultdict(int)
    for k, v in _reference_flow(a1).items():
        flow[k] += v
    for k, v in _reference_flow(a2, a1, b1).items():
        flow[k] += v
    for k, v in _reference_flow(a1 + a2).items():
        flow[k] -= v
    return _winding(flow)


class MetaNF(tgObject):
    """Normal form (a, b, winding) of an element of the free
    metabelian group of rank 2."""

    schema = 'tgtools.nf/1'

    def __init__(
        self,
        a: int = 0,
        b: int = 0,
        winding: WindingMap = None
    ):
        self.__a = a
        self.__b = b
        self.__winding = WindingMap() if winding is None else WindingMap(
            dict(winding.items())
        )

    @property
    def a(self) -> int:
        return self.__a

    @property
    def b(self) -> int:
        return self.__b

    @property
    def winding(self) -> WindingMap:
        return self.__winding

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and not self.winding

    def __mul__(self, other: 'MetaNF') -> 'MetaNF':
        return MetaNF(
            self.a + other.a,
            self.b + other.b,
            self.winding
            + other.winding.shift(self.a, self.b)
            + _correction(self.a, self.b, other.a, other.b)
        )

    def inverse(self) -> 'MetaNF':
        a, b = self.a, self.b
        w = -self.winding - _correction(a, b, -a, -b)
        return MetaNF(-a, -b, w.shift(-a, -b))

    def conjugate(self, g: 'MetaNF') -> 'MetaNF':
        """(self)g = g^-1 self g."""
        return g.inverse() * self * g

    def _to_dict(self) -> Dict:
        return {
            'a': self.a,
            'b': self.b,
            'winding': self.winding.to_list(),
        }

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.winding))

    def __repr__(self) -> str:
        return f'MetaNF({self.a}, {self.b}, {self.winding.to_list()})'


def normal_form(yw: Iterable[int]) -> MetaNF:
    x = y = 0
    flow: Dict[Tuple[int, int], int] = defaultdict(int)
    for g in yw:
        if g == 2:
            flow[(x, y)] += 1
            x += 1
        elif g == -2:
            x -= 1
            flow[(x, y)] -= 1
        elif g == 3:
            y += 1
        elif g == -3:
            y -= 1
        else:
            raise ValueError(f'{g!r} is not a y-letter')
    for k, v in _reference_flow(x).items():
        flow[k] -= v
    return MetaNF(x, y, _winding(flow))


def word_normal_form(w: Union[str, Sequence[int]]) -> MetaNF:
    """Normal form of an even-length word over {1, 2, 3}."""
    return normal_form(to_ywords(w))


def meta_to_tcoords(nf: MetaNF) -> TCoords:
    """t-coordinates of a commutator element. The winding around
    square (p, q) is the coefficient of t_{p+1, -q-1}.

    :raises NotInCommutatorSubgroup: if (a, b) != (0, 0)
    """
    if nf.a or nf.b:
        raise NotInCommutatorSubgroup(
            f'exponent sums ({nf.a}, {nf.b}) are not zero'
        )
    return TCoords({(p + 1, -q - 1): c for (p, q), c in nf.winding.items()})


def tcoords_to_meta(c: TCoords) -> MetaNF:
    return MetaNF(
        0, 0,
        WindingMap({(n - 1, -m - 1): k for (n, m), k in c.items()})
    )
