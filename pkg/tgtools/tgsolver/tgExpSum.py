"""
Created on Oct 19 2026

Exponential sums f(a2, a3) = sum c * exp(i(p*a2 + q*a3)).

A translation sum c(n,m) t_{n,m} vanishes for a shape exactly
when the exponential sum with frequencies (2m, -2n) vanishes at
its angles, since t_{n,m} is t1 rotated by 2m*a2 - 2n*a3.
"""

from typing import (
    List,
    Tuple,
)
from fractions import Fraction
import numpy as np

from tgtools.tglibs import (
    LatticeMap,
    TCoords,
)


class ExpSum(LatticeMap):
    """Integer exponential sum, keyed by frequency (p, q)."""

    def canonical(self) -> 'ExpSum':
        """Same zero set, with the least frequency moved to (0, 0)."""
        if not self:
            return self
        p, q = self.lex_min()
        return self.shift(-p, -q)

    def center(self) -> Tuple[Fraction, Fraction]:
        (p0, q0), (p1, q1) = self.lex_min(), self.lex_max()
        return (Fraction(p0 + p1, 2), Fraction(q0 + q1, 2))

    def balanced(self) -> 'ExpSum':
        """Frequencies recentred on the middle of the support.

        Only defined when the center has integer coordinates,
        which holds for every sum built by expsum_of.
        """
        if not self:
            return self
        cp, cq = self.center()
        if cp.denominator != 1 or cq.denominator != 1:
            raise ValueError(f'center ({cp}, {cq}) is not a lattice point')
        return self.shift(-int(cp), -int(cq))

    def symmetry(self) -> int:
        """+1 if the balanced sum is real valued (c(k) = c(-k)),
        -1 if it is purely imaginary (c(k) = -c(-k)), else 0."""
        b = self.balanced()
        if not b:
            return 0
        if all(b.get((-p, -q)) == c for (p, q), c in b.items()):
            return 1
        if all(b.get((-p, -q)) == -c for (p, q), c in b.items()):
            return -1
        return 0

    def cosine_terms(self) -> List[Tuple[int, int, int]]:
        """(p, q, a) such that the balanced sum equals the sum of
        a*cos(p*a2 + q*a3), with (p, q) lexicographically >= 0.

        :raises ValueError: if the balanced sum is not real valued
        """
        if not self:
            return []
        if self.symmetry() != 1:
            raise ValueError('the balanced sum is not real valued')
        out = []
        for (p, q), c in self.balanced().items():
            if (p, q) == (0, 0):
                out.append((0, 0, c))
            elif (p, q) > (0, 0):
                out.append((p, q, 2 * c))
        return out

    def evaluate(self, a2, a3) -> np.ndarray:
        """Values at arrays of angles (broadcast together)."""
        a2 = np.asarray(a2, dtype=float)
        a3 = np.asarray(a3, dtype=float)
        out = np.zeros(np.broadcast(a2, a3).shape, dtype=complex)
        for (p, q), c in self.items():
            out += c * np.exp(1j * (p * a2 + q * a3))
        return out

    def gradient(self, a2, a3) -> Tuple[np.ndarray, np.ndarray]:
        """Partial derivatives in a2 and a3."""
        a2 = np.asarray(a2, dtype=float)
        a3 = np.asarray(a3, dtype=float)
        shape = np.broadcast(a2, a3).shape
        d2 = np.zeros(shape, dtype=complex)
        d3 = np.zeros(shape, dtype=complex)
        for (p, q), c in self.items():
            e = c * 1j * np.exp(1j * (p * a2 + q * a3))
            d2 += p * e
            d3 += q * e
        return d2, d3

    def evaluate_grid(self, axis2: np.ndarray, axis3: np.ndarray) -> np.ndarray:
        """Values on the product grid axis2 x axis3 (indexing 'ij')."""
        out = np.zeros((len(axis2), len(axis3)), dtype=complex)
        cache2 = {}
        cache3 = {}
        for (p, q), c in self.items():
            if p not in cache2:
                cache2[p] = np.exp(1j * p * axis2)
            if q not in cache3:
                cache3[q] = np.exp(1j * q * axis3)
            out += c * np.outer(cache2[p], cache3[q])
        return out

    def dominant(self) -> bool:
        """True if one coefficient outweighs all the others
        together, in which case the sum never vanishes."""
        if not self:
            return False
        top = max(abs(c) for _, c in self.items())
        return 2 * top > self.l1_norm()

    def to_str(self) -> str:
        """Readable form, as a cosine sum when it is real valued."""
        if not self:
            return '0'
        if self.symmetry() == 1:
            terms = []
            for p, q, a in self.cosine_terms():
                if (p, q) == (0, 0):
                    terms.append(f'{a}')
                else:
                    terms.append(f'{a}cos({_angle(p, q)})')
            return ' + '.join(terms).replace('+ -', '- ')
        terms = [
            f'{c}' if (p, q) == (0, 0) else f'{c}exp(i({_angle(p, q)}))'
            for (p, q), c in self.items()
        ]
        return ' + '.join(terms).replace('+ -', '- ')


def _angle(p: int, q: int) -> str:
    parts = []
    for k, name in ((p, 'a2'), (q, 'a3')):
        if not k:
            continue
        coef = '' if abs(k) == 1 else str(abs(k))
        sign = '-' if k < 0 else '+'
        parts.append((sign, f'{coef}{name}'))
    s = ''.join(f'{sign}{t}' for sign, t in parts)
    return s[1:] if s.startswith('+') else s


def expsum_of(c: TCoords) -> ExpSum:
    """Exponential sum of sum c(n,m) t_{n,m}, with frequency
    (2m, -2n) for t_{n,m}, in canonical position."""
    return ExpSum(
        {(2 * m, -2 * n): k for (n, m), k in c.items()}
    ).canonical()
