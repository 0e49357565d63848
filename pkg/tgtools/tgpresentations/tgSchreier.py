"""
Created on Oct 19 2026

Reidemeister-Schreier rewriting for the commutator subgroup
of the free group on y2, y3.

b_{i,j} = y2^i y3^j y2 y3^-j y2^(-i-1), with b_{i,0} = 1, and
d_{i,j} = b_{-i,-j} b_{-i,-j+1}^-1.
"""

from typing import (
    Callable,
    Tuple,
)
from functools import lru_cache

from tgtools.tgpresentations.tgRelator import (
    FWord,
    commutator,
    product,
)


def lex_positive(n: int, m: int) -> bool:
    return n > 0 or (n == 0 and m > 0)


def substitute(
    word: FWord,
    image: Callable[[Tuple], FWord]
) -> FWord:
    """Replace every generator g by image(g), inverting the
    image on inverse letters."""
    out = []
    for g, e in word:
        w = image(g)
        out.extend(w.letters if e == 1 else w.inverse().letters)
    return FWord(out)


def b_word(i: int, j: int) -> FWord:
    """b_{i,j} spelled out in y2, y3."""
    if j == 0:
        return FWord()
    y2, y3 = FWord.y(2), FWord.y(3)
    return (y2 ** i * y3 ** j * y2 * y3 ** -j * y2 ** (-i - 1)).reduce()


def commutator_b(i: int, j: int) -> FWord:
    """y2^i y3^j y2^-i y3^-j as a product of b-generators."""
    if i < 0:
        return product(FWord.b(k, j) for k in range(i, 0))
    return product(FWord.b(k, j) for k in range(i)).inverse()


def rs_conj_t1(k: int, l: int) -> FWord:
    """([y2,y3])y3^l y2^k = b_{-k,-l} b_{-k,-l+1}^-1."""
    return FWord.b(-k, -l) * FWord.b(-k, -l + 1).inverse()


def rs_conj_general(n: int, m: int, k: int, l: int) -> FWord:
    """([y2,y3])y2^n y3^m y3^l y2^k in b-generators, for n >= 0.

    The core b_{-n-k,-m-l} b_{-n-k,-m-l+1}^-1 is conjugated by
    the product of b_{-n-k+i,-m-l} for i = 0, ..., n-1.
    """
    if n < 0:
        raise ValueError(f'n = {n} must be non-negative')
    core = FWord.b(-n - k, -m - l) * FWord.b(-n - k, -m - l + 1).inverse()
    pi = product(FWord.b(-n - k + i, -m - l) for i in range(n))
    return core.conj(pi)


def _b_image(gen: Tuple) -> FWord:
    _, i, j = gen
    if j <= -1:
        return product(FWord.d(-i, s) for s in range(-j, 0, -1))
    if j >= 1:
        return product(FWord.d(-i, s) for s in range(0, -j, -1)).inverse()
    return FWord()


def b_to_d(word: FWord) -> FWord:
    """Rewrite a b-word in d-generators."""
    return substitute(word, _b_image)


def d_to_b(word: FWord) -> FWord:
    """Rewrite a d-word in b-generators."""
    return substitute(
        word,
        lambda g: FWord.b(-g[1], -g[2]) * FWord.b(-g[1], -g[2] + 1).inverse()
    )


def b_to_y(word: FWord) -> FWord:
    return substitute(word, lambda g: b_word(g[1], g[2]))


def d_to_y(word: FWord) -> FWord:
    return b_to_y(d_to_b(word))


def rs_relation_cores(n: int, m: int, k: int, l: int) -> Tuple[FWord, FWord]:
    """The two entries of e_{n,m,k,l} in d-generators, reduced:
    d_{k,l} and a conjugate of d_{n+k,m+l}."""
    a = b_to_d(rs_conj_t1(k, l)).reduce()
    b = b_to_d(rs_conj_general(n, m, k, l)).reduce()
    return a, b


@lru_cache(maxsize=None)
def rs_relation_e(n: int, m: int, k: int, l: int) -> FWord:
    """The relation e_{n,m,k,l} of the commutator subgroup.

    :raises ValueError: if (n, m) is not lexicographically positive
    """
    if not lex_positive(n, m):
        raise ValueError(f'({n},{m}) is not lexicographically positive')
    a, b = rs_relation_cores(n, m, k, l)
    return commutator(a, b).reduce()


def primed_cores(n: int, m: int, k: int, l: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Core indices of the relation family of the full group,
    (k+1, l+1) and (-n+k+1, -m+l+1)."""
    return (k + 1, l + 1), (-n + k + 1, -m + l + 1)
