"""Finitely supported integer maps on the square lattice.

The same structure carries the translation part of an
isometry (coefficients of the vectors u_{a,b}), the
t-coordinates of a relation, a winding map and the
frequency table of an exponential sum. All of them are
Laurent polynomials in two variables, which is what the
arithmetic below implements.
"""

from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Tuple,
    TypeVar,
)

Key = Tuple[int, int]
T = TypeVar('T', bound='LatticeMap')

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class CoefficientOverflow(Exception):
    """Raised when a coefficient leaves the signed 64-bit range."""


def _checked(c: int) -> int:
    if not INT64_MIN <= c <= INT64_MAX:
        raise CoefficientOverflow(
            f'coefficient {c} exceeds the signed 64-bit range'
        )
    return c


class LatticeMap():
    """Immutable map Z^2 -> Z with finite support.

    Zero coefficients are never stored, so two maps are equal
    exactly when their stored entries are equal. Instances are
    hashable and can be used as dictionary keys.
    """

    __slots__ = ('_entries', '_hash')

    def __init__(
        self,
        entries: Mapping[Key, int] = None
    ):
        d = {}
        if entries:
            for (p, q), c in entries.items():
                if c:
                    d[(int(p), int(q))] = _checked(int(c))
        self._entries = d
        self._hash = None

    @classmethod
    def _raw(cls: type, entries: Dict[Key, int]) -> T:
        # entries are trusted: non-zero and already checked
        obj = cls.__new__(cls)
        obj._entries = entries
        obj._hash = None
        return obj

    @classmethod
    def from_items(cls: type, items: Iterable[Tuple[int, int, int]]) -> T:
        """Build a map from (p, q, coefficient) triples,
        summing repeated keys."""
        d: Dict[Key, int] = {}
        for p, q, c in items:
            d[(p, q)] = d.get((p, q), 0) + c
        return cls(d)

    @classmethod
    def from_list(cls: type, rows: Iterable[Iterable[int]]) -> T:
        return cls.from_items(tuple(row) for row in rows)

    ## READ METHODS
    def get(self, key: Key) -> int:
        return self._entries.get(key, 0)

    def __getitem__(self, key: Key) -> int:
        return self.get(key)

    def keys(self) -> List[Key]:
        return sorted(self._entries)

    def items(self) -> List[Tuple[Key, int]]:
        return sorted(self._entries.items())

    def __iter__(self) -> Iterator[Key]:
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __contains__(self, key: Key) -> bool:
        return key in self._entries

    def lex_min(self) -> Key:
        return min(self._entries)

    def lex_max(self) -> Key:
        return max(self._entries)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self._entries.values())

    def to_list(self) -> List[List[int]]:
        """Sorted [[p, q, c], ...] rows, the serialized form."""
        return [[p, q, c] for (p, q), c in self.items()]

    ## ARITHMETIC
    def __add__(self: T, other: 'LatticeMap') -> T:
        d = dict(self._entries)
        for k, c in other._entries.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = _checked(v)
            else:
                d.pop(k, None)
        return self._raw(d)

    def __neg__(self: T) -> T:
        return self._raw({k: -c for k, c in self._entries.items()})

    def __sub__(self: T, other: 'LatticeMap') -> T:
        return self + (-other)

    def scale(self: T, k: int) -> T:
        if not k:
            return self._raw({})
        return self._raw(
            {key: _checked(k * c) for key, c in self._entries.items()}
        )

    def shift(self: T, a: int, b: int) -> T:
        """Multiply by the monomial X^a Y^b."""
        return self._raw(
            {(p + a, q + b): c for (p, q), c in self._entries.items()}
        )

    def point_reflect(self: T, a: int, b: int) -> T:
        """Send key (p, q) to (a - p, b - q)."""
        return self._raw(
            {(a - p, b - q): c for (p, q), c in self._entries.items()}
        )

    def halve(self: T) -> T:
        """Divide every coefficient by 2.

        :raises ValueError: if some coefficient is odd
        """
        d = {}
        for k, c in self._entries.items():
            if c % 2:
                raise ValueError(f'odd coefficient {c} at {k}')
            d[k] = c // 2
        return self._raw(d)

    def __mul__(self: T, other: 'LatticeMap') -> T:
        d: Dict[Key, int] = {}
        for (p1, q1), c1 in self._entries.items():
            for (p2, q2), c2 in other._entries.items():
                k = (p1 + p2, q1 + q2)
                d[k] = d.get(k, 0) + c1 * c2
        return self.__class__(d)

    def divmod(self: T, divisor: 'LatticeMap') -> Tuple[T, T]:
        """Exact Laurent division by `divisor`.

        Repeatedly cancels the lexicographically largest term of
        the remainder with the leading term of `divisor`. Since a
        product's bounding box is the sum of its factors' boxes,
        every quotient monomial must stay inside a box computed
        from both operands. The loop stops at the first term that
        cannot be cancelled within it.

        :returns: (quotient, remainder), remainder empty iff
            `divisor` divides `self`
        """
        if not divisor:
            raise ZeroDivisionError('division by the zero map')
        rem = dict(self._entries)
        quo: Dict[Key, int] = {}
        if not rem:
            return self._raw({}), self._raw({})
        lead = max(divisor._entries)
        lc = divisor._entries[lead]
        box = (
            min(p for p, _ in rem) - min(p for p, _ in divisor._entries),
            max(p for p, _ in rem) - max(p for p, _ in divisor._entries),
            min(q for _, q in rem) - min(q for _, q in divisor._entries),
            max(q for _, q in rem) - max(q for _, q in divisor._entries),
        )
        while rem:
            top = max(rem)
            c = rem[top]
            a, b = top[0] - lead[0], top[1] - lead[1]
            if c % lc or not (
                box[0] <= a <= box[1] and box[2] <= b <= box[3]
            ):
                break
            k = c // lc
            quo[(a, b)] = quo.get((a, b), 0) + k
            for (p, q), dc in divisor._entries.items():
                key = (p + a, q + b)
                v = rem.get(key, 0) - k * dc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return self.__class__(quo), self.__class__(rem)

    ## COMPARISON
    def __eq__(self, other) -> bool:
        if isinstance(other, LatticeMap):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.to_list()})'


class UVec(LatticeMap):
    """Integer combination of the unit vectors u_{a,b}."""


class TCoords(LatticeMap):
    """Coefficients of a translation in the basis t_{n,m}."""

    def t_length(self) -> int:
        return self.l1_norm()


class WindingMap(LatticeMap):
    """Winding numbers of a closed lattice path around the
    unit squares, keyed by their lower-left corner."""
