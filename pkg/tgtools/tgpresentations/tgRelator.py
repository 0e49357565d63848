"""Formal words over the generators of a presentation.

A generator is a tuple whose first entry names its family:
('x', i) and ('y', i) for the reflections and rotations,
('b', i, j) and ('d', i, j) for the Reidemeister-Schreier
generators of the commutator subgroup. A letter is a pair
(generator, sign) with sign in {1, -1}. Products, powers,
conjugates and commutators are flattened letter for letter;
reduction only happens on request.
"""

from typing import (
    Iterable,
    List,
    Tuple,
)

Gen = Tuple
Letter = Tuple[Gen, int]


class UnknownAlphabet(Exception):
    """Raised when a word mixes generator families, or when no
    model is known for its family."""


def _gen_str(gen: Gen) -> str:
    if gen[0] in ('x', 'y'):
        return f'{gen[0]}{gen[1]}'
    return f'{gen[0]}_{{{gen[1]},{gen[2]}}}'


class FWord():
    """A word in a free group, stored as a tuple of letters."""

    __slots__ = ('letters',)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: Tuple[Letter, ...] = tuple(letters)

    @classmethod
    def gen(cls, *gen) -> 'FWord':
        return cls([(tuple(gen), 1)])

    @classmethod
    def x(cls, i: int) -> 'FWord':
        return cls.gen('x', i)

    @classmethod
    def y(cls, i: int) -> 'FWord':
        return cls.gen('y', i)

    @classmethod
    def b(cls, i: int, j: int) -> 'FWord':
        """b_{i,j}, the empty word when j = 0."""
        if j == 0:
            return cls()
        return cls.gen('b', i, j)

    @classmethod
    def d(cls, i: int, j: int) -> 'FWord':
        return cls.gen('d', i, j)

    def __mul__(self, other: 'FWord') -> 'FWord':
        return FWord(self.letters + other.letters)

    def inverse(self) -> 'FWord':
        return FWord((g, -e) for g, e in reversed(self.letters))

    def __pow__(self, k: int) -> 'FWord':
        base = self if k >= 0 else self.inverse()
        return FWord(base.letters * abs(k))

    def conj(self, g: 'FWord') -> 'FWord':
        """(self)g = g^-1 self g."""
        return g.inverse() * self * g

    def reduce(self) -> 'FWord':
        stack: List[Letter] = []
        for g, e in self.letters:
            if stack and stack[-1][0] == g and stack[-1][1] == -e:
                stack.pop()
            else:
                stack.append((g, e))
        return FWord(stack)

    def families(self) -> set:
        return {g[0] for g, _ in self.letters}

    def gens(self) -> set:
        return {g for g, _ in self.letters}

    def exponent_sums(self) -> dict:
        out: dict = {}
        for g, e in self.letters:
            out[g] = out.get(g, 0) + e
        return {g: e for g, e in out.items() if e}

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        if isinstance(other, FWord):
            return self.letters == other.letters
        return False

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        parts = [
            _gen_str(g) + ('' if e == 1 else '^-1')
            for g, e in self.letters
        ]
        if self.letters and self.letters[0][0][0] in ('b', 'd'):
            return ' '.join(parts)
        return ''.join(parts)

    def __repr__(self) -> str:
        return f'FWord({str(self)!r})'


def commutator(u: FWord, v: FWord) -> FWord:
    """[u, v] = u^-1 v^-1 u v."""
    return u.inverse() * v.inverse() * u * v


def product(words: Iterable[FWord]) -> FWord:
    out = FWord()
    for w in words:
        out = out * w
    return out


class Relator():
    """A named relator of a presentation.

    :param name: human readable form of the relator schema
    :param word: the flattened word
    :param model: 'linear' (checked on linear parts only),
        'isometry' or 'metabelian'
    """

    __slots__ = ('name', 'word', 'model')

    def __init__(
        self,
        name: str,
        word: FWord,
        model: str = 'isometry'
    ):
        families = word.families()
        if len(families) > 1:
            raise UnknownAlphabet(f'{name} mixes generator families {sorted(families)}')
        self.name = name
        self.word = word
        self.model = model

    @property
    def alphabet(self) -> str:
        fam = self.word.families()
        return next(iter(fam)) if fam else ''

    def __str__(self) -> str:
        return str(self.word)

    def __repr__(self) -> str:
        return f'Relator({self.name!r}, {str(self.word)!r})'
