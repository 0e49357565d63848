"""
Created on Oct 19 2026

Words over the reflections r1, r2, r3 of a triangle.

A word is stored as a tuple of symbols in {1, 2, 3}. Every
generator is an involution, so reduction only cancels
adjacent equal symbols.
"""

from typing import (
    Dict,
    Iterable,
    List,
    NamedTuple,
    Sequence,
    Set,
    Tuple,
    Union,
)
from logging import (
    Logger,
    getLogger
)
from itertools import product

Word = Tuple[int, ...]

ALPHABET = (1, 2, 3)


class BadSymbol(Exception):
    """Raised when a word holds a symbol outside {1, 2, 3}."""


class NotStable(Exception):
    """Raised when a stable-only operation gets an unstable word."""


# Words used throughout the documentation and the tests
NAMED_WORDS: Dict[str, str] = {
    # period-6 billiard trajectory of the acute triangle
    'fagnano': '123123',
    # [t1, (t1)r1r3], a relation of every triangle
    'commutator': '1231312312132131321323',
    'curve-cos': '123231213123231213',
    'curve-cos-sum': '123231312123231312',
    'cos-difference': '1231231321231231321313213231213213',
    'two-points': '13123231232312312312323131212313',
    'point-22': '1212313132312323232312',
    'point-24': '121213132131213232312323',
}


def to_word(w: Union[str, Sequence[int]]) -> Word:
    """Validate a word given as a string of digits or a
    sequence of ints and return it as a tuple.

    :raises BadSymbol: on any symbol outside {1, 2, 3}
    """
    if isinstance(w, str):
        out = []
        for pos, ch in enumerate(w):
            if ch not in '123':
                raise BadSymbol(
                    f'symbol {ch!r} at position {pos} is not in {{1, 2, 3}}'
                )
            out.append(ord(ch) - 48)
        return tuple(out)
    word = tuple(w)
    for pos, s in enumerate(word):
        if s not in ALPHABET:
            raise BadSymbol(
                f'symbol {s!r} at position {pos} is not in {{1, 2, 3}}'
            )
    return word


def word_str(w: Iterable[int]) -> str:
    return ''.join(str(s) for s in w)


def free_reduce(w: Union[str, Sequence[int]]) -> Word:
    """Cancel adjacent equal symbols until none are left."""
    stack: List[int] = []
    for s in to_word(w):
        if stack and stack[-1] == s:
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


def cyclic_reduce(w: Union[str, Sequence[int]]) -> Word:
    """Freely reduce, then strip equal first and last symbols."""
    word = free_reduce(w)
    i, j = 0, len(word)
    while j - i >= 2 and word[i] == word[j - 1]:
        i += 1
        j -= 1
    return word[i:j]


def is_reduced(w: Sequence[int]) -> bool:
    return all(w[i] != w[i + 1] for i in range(len(w) - 1))


def is_cyclically_reduced(w: Sequence[int]) -> bool:
    return is_reduced(w) and (len(w) < 2 or w[0] != w[-1])


def is_stable(w: Union[str, Sequence[int]]) -> bool:
    """True iff every symbol occurs as often at odd positions
    as at even positions (positions counted from 1)."""
    balance = [0, 0, 0, 0]
    for pos, s in enumerate(to_word(w)):
        balance[s] += -1 if pos % 2 else 1
    return not any(balance)


class Move(NamedTuple):
    """A move of the stable-reduction calculus.

    `kind` is 'transpose' or 'delete'; `position` is 1-based.
    Transpose(p) swaps the letter pairs at p, p+1 and p+2, p+3.
    DeletePair(p) removes the two equal letters at p, p+1.
    """
    kind: str
    position: int

    def __str__(self) -> str:
        name = 'Transpose' if self.kind == 'transpose' else 'DeletePair'
        return f'{name}({self.position})'


def Transpose(position: int) -> Move:
    return Move('transpose', position)


def DeletePair(position: int) -> Move:
    return Move('delete', position)


def apply_move(w: Sequence[int], move: Move) -> Word:
    word = tuple(w)
    p = move.position - 1
    if move.kind == 'transpose':
        if p < 0 or p + 4 > len(word):
            raise ValueError(f'{move} out of range for length {len(word)}')
        return word[:p] + word[p + 2:p + 4] + word[p:p + 2] + word[p + 4:]
    if move.kind == 'delete':
        if p < 0 or p + 2 > len(word) or word[p] != word[p + 1]:
            raise ValueError(f'{move} does not apply to {word_str(word)}')
        return word[:p] + word[p + 2:]
    raise ValueError(f'unknown move kind {move.kind!r}')


def replay(
    w: Union[str, Sequence[int]],
    moves: Iterable[Move]
) -> Word:
    """Apply `moves` to `w` in order."""
    word = to_word(w)
    for move in moves:
        word = apply_move(word, move)
    return word


def stable_reduction(
    w: Union[str, Sequence[int]],
    logger: Logger = getLogger(__name__)
) -> List[Move]:
    """Reduce a stable word to the empty word.

    While the word is non-empty, find the smallest k with
    i_{2k-1} = i_2. The pair at 2k-1, 2k is carried to positions
    3, 4 by transpositions and then deleted together with
    position 2; when k = 1 the first two letters already cancel.

    :param w: the word to reduce
    :raises NotStable: if `w` is not stable
    :returns: the list of moves, whose replay gives ()
    """
    word = to_word(w)
    if not is_stable(word):
        raise NotStable(f'{word_str(word)} is not stable')
    moves: List[Move] = []
    while word:
        target = word[1]
        k = next(
            k for k in range(1, len(word) // 2 + 1)
            if word[2 * k - 2] == target
        )
        if k == 1:
            step = [DeletePair(1)]
        else:
            step = [Transpose(p) for p in range(2 * k - 3, 2, -2)]
            step.append(DeletePair(2))
        for move in step:
            word = apply_move(word, move)
        moves += step
    logger.debug(f'{len(moves)} moves')
    return moves


def relabel(w: Sequence[int]) -> Word:
    """Rename symbols in order of first occurrence, which is the
    least of the six relabellings of `w`."""
    names: Dict[int, int] = {}
    out = []
    for s in w:
        if s not in names:
            names[s] = len(names) + 1
        out.append(names[s])
    return tuple(out)


def _rotations(w: Word) -> Iterable[Word]:
    n = len(w)
    for i in range(n):
        yield w[i:] + w[:i]
    r = w[::-1]
    for i in range(n):
        yield r[i:] + r[:i]


def word_orbit(w: Union[str, Sequence[int]]) -> Set[Word]:
    """All images of `w` under rotation, reversal and the
    permutations of {1, 2, 3}."""
    word = to_word(w)
    if not word:
        return {()}
    perms = [dict(zip(ALPHABET, p)) for p in product(ALPHABET, repeat=3)
             if len(set(p)) == 3]
    return {
        tuple(perm[s] for s in rot)
        for rot in _rotations(word)
        for perm in perms
    }


def word_canonical(w: Union[str, Sequence[int]]) -> Word:
    """Least element of the orbit of `w` under rotation,
    reversal and symbol permutation."""
    word = to_word(w)
    if not word:
        return ()
    return min(relabel(rot) for rot in _rotations(word))


def is_canonical(w: Sequence[int]) -> bool:
    """True iff `w` is the representative of its orbit.

    Candidates are compared symbol by symbol with an early exit.
    """
    word = tuple(w)
    n = len(word)
    if not n:
        return True
    if relabel(word) != word:
        return False
    for start in range(n):
        for step in (1, -1):
            if step == 1 and start == 0:
                continue
            names: Dict[int, int] = {}
            for i in range(n):
                s = word[(start + step * i) % n]
                if s not in names:
                    names[s] = len(names) + 1
                c = names[s]
                if c != word[i]:
                    if c < word[i]:
                        return False
                    break
    return True
