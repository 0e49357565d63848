"""
Created on Oct 19 2026

Enumeration of the cyclically reduced stable words of a given
length, one per orbit under rotation, reversal and permutation
of the symbols.

Words are built symbol by symbol. A prefix is dropped as soon
as the balance of its symbols can no longer be evened out by
the remaining positions, or as soon as one of its rotated and
relabelled windows reads smaller than the prefix itself.
"""

from typing import (
    Iterator,
    List,
    Tuple,
)
from logging import (
    Logger,
    getLogger
)
from functools import partial
from itertools import product
from multiprocessing import Pool

from tgtools.tgwords import (
    Word,
    is_canonical,
    is_cyclically_reduced,
    is_stable,
    word_canonical,
)

# (start, names) of a forward window still equal to the prefix;
# names[s] is the label given to symbol s, 0 if not seen yet
Window = Tuple[int, Tuple[int, int, int, int]]
State = Tuple[Word, Tuple[int, int, int, int], Tuple[Window, ...]]

# prefixes handed to the workers have this length at most
PREFIX_LEN = 10


def _feasible(balance: Tuple[int, ...], pos: int, n: int) -> bool:
    """Can positions pos..n-1 bring every symbol's balance to 0?

    Positions with an even index add 1 to the balance of their
    symbol, positions with an odd index subtract 1.
    """
    evens = (n + 1) // 2 - (pos + 1) // 2
    odds = n // 2 - pos // 2
    need_odd = sum(b for b in balance if b > 0)
    need_even = -sum(b for b in balance if b < 0)
    return need_odd <= odds and need_even <= evens


def _tied_backward(word: Word) -> bool:
    """False if the window read backward from the last symbol
    relabels to something smaller than the prefix."""
    names = {}
    k = len(word)
    for i in range(k):
        s = word[k - 1 - i]
        if s not in names:
            names[s] = len(names) + 1
        c = names[s]
        if c != word[i]:
            return c > word[i]
    return True


def _step(state: State, s: int) -> State:
    """Append s to the prefix, or return None if the new prefix
    cannot start a canonical word."""
    word, balance, windows = state
    pos = len(word)
    new_word = word + (s,)
    kept = []
    for start, names in windows:
        label = names[s]
        if not label:
            label = max(names) + 1
            names = names[:s] + (label,) + names[s + 1:]
        ref = new_word[pos - start]
        if label < ref:
            return None
        if label == ref:
            kept.append((start, names))
    if pos:
        # window starting at the new symbol
        names = [0, 0, 0, 0]
        names[s] = 1
        kept.append((pos, tuple(names)))
    if not _tied_backward(new_word):
        return None
    b = list(balance)
    b[s] += -1 if pos % 2 else 1
    return (new_word, tuple(b), tuple(kept))


def _children(state: State, n: int) -> Iterator[State]:
    word = state[0]
    pos = len(word)
    top = max(word, default=0)
    for s in (1, 2, 3):
        if s > top + 1:
            break
        if pos and s == word[-1]:
            continue
        if pos == n - 1 and s == word[0]:
            continue
        child = _step(state, s)
        if child is not None and _feasible(child[1], pos + 1, n):
            yield child


def _extend(state: State, n: int) -> Iterator[Word]:
    if len(state[0]) == n:
        word, balance, _ = state
        if not any(balance) and is_canonical(word):
            yield word
        return
    for child in _children(state, n):
        yield from _extend(child, n)


def _prefixes(state: State, n: int, depth: int) -> Iterator[State]:
    if len(state[0]) == depth:
        yield state
        return
    for child in _children(state, n):
        yield from _prefixes(child, n, depth)


def _complete(state: State, n: int) -> List[Word]:
    return list(_extend(state, n))


_ROOT: State = ((), (0, 0, 0, 0), ())


def enumerate_stable(
    n: int,
    threads: int = 1,
    logger: Logger = getLogger(__name__)
) -> Iterator[Word]:
    """Canonical cyclically reduced stable words of length n,
    in lexicographic order.

    :param n: the length, even and at least 2
    :param threads: worker processes, 1 for a serial run
    :raises ValueError: if n is odd or smaller than 2
    """
    if n < 2 or n % 2:
        raise ValueError(f'length must be even and at least 2, got {n}')
    if threads <= 1 or n <= PREFIX_LEN:
        yield from _extend(_ROOT, n)
        return
    prefixes = list(_prefixes(_ROOT, n, PREFIX_LEN))
    logger.debug(f'length {n}: {len(prefixes)} prefixes for {threads} workers')
    with Pool(threads) as pool:
        for words in pool.imap(partial(_complete, n=n), prefixes):
            yield from words


def brute_force_stable(n: int) -> List[Word]:
    """Same words as enumerate_stable(n), found by filtering all
    3^n words and keeping the least element of each orbit."""
    found = set()
    for w in product((1, 2, 3), repeat=n):
        if is_cyclically_reduced(w) and is_stable(w):
            found.add(word_canonical(w))
    return sorted(found)
