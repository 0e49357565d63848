"""
Created on Oct 19 2026

Census of stable words by translation class, and the search
for relations which only hold for special triangles.

Two stable words are in the same translation class when their
coordinates on the conjugates of t1 agree up to a translation
of the indices, the index involution (n, m) -> (-n, -m) and a
global sign, once the symbols of one word are permuted.
Conjugating a word by a generator acts on its coordinates by
an involution followed by a translation, and inverting it
changes the sign. Permuting the symbols has no such action on
the coordinates, so it is applied to the word.
"""

from typing import (
    Dict,
    Iterable,
    List,
    Tuple,
)
from logging import (
    Logger,
    getLogger
)
from functools import partial
from itertools import permutations
from math import pi
from multiprocessing import Pool
import numpy as np
import pandas as pd
from tqdm import tqdm

from tgtools.tglibs import (
    TCoords,
    tgObject,
)
from tgtools.tgwords import (
    ALPHABET,
    Word,
    word_str,
)
from tgtools.tgisometry import (
    from_word,
    t_coordinates,
)
from tgtools.tgsolver import (
    ZeroSet,
    expsum_of,
    zero_set,
)
from tgtools.tgsearch.tgEnumerate import (
    brute_force_stable,
    enumerate_stable,
)


def _anchored(c: TCoords) -> TCoords:
    n, m = c.lex_min()
    return c.shift(-n, -m)


def _serial(c: TCoords) -> Tuple:
    # larger coefficients first, so that {(0,0): 1} beats {(0,0): -1}
    return tuple((key, -k) for key, k in c.items())


def t_class_canonical(c: TCoords) -> TCoords:
    """Representative of the translation class of c: the least,
    in serial order, of the four anchored images of c under sign
    change and index involution."""
    if not c:
        return c
    variants = [c, -c, c.point_reflect(0, 0), -c.point_reflect(0, 0)]
    return min((_anchored(v) for v in variants), key=_serial)


def word_t_class(w: Word) -> Tuple[Word, TCoords]:
    """Least translation class over the six symbol permutations
    of w, with the permuted word it comes from.

    :param w: a stable word
    :rtype: (Word, TCoords)
    """
    best = None
    for p in permutations(ALPHABET):
        names = dict(zip(ALPHABET, p))
        v = tuple(names[s] for s in w)
        c = t_class_canonical(t_coordinates(from_word(v)))
        if best is None or _serial(c) < _serial(best[1]):
            best = (v, c)
    return best


class TClass(tgObject):
    """One translation class met by the census, with the first
    word found in it."""

    schema = 'tgtools.tclass/1'

    def __init__(self, word: Word, tcoords: TCoords):
        self.word = tuple(word)
        self.tcoords = tcoords

    @property
    def r_length(self) -> int:
        return len(self.word)

    @property
    def t_length(self) -> int:
        return self.tcoords.t_length()

    def _to_dict(self) -> Dict:
        return {
            'word': word_str(self.word),
            'tcoords': self.tcoords.to_list(),
            'r_length': self.r_length,
            't_length': self.t_length,
        }


class CensusTable(tgObject):
    """Number of classes by word length and length on the
    conjugates of t1. Words with no t1 coordinate at all are
    generic relations and are counted under t-length 0."""

    schema = 'tgtools.census/1'

    def __init__(
        self,
        max_len: int,
        classes: List[TClass] = None
    ):
        self.max_len = max_len
        self.classes = classes or []
        self.counts: Dict[Tuple[int, int], int] = {}
        for c in self.classes:
            key = (c.r_length, c.t_length)
            self.counts[key] = self.counts.get(key, 0) + 1

    def get(self, r_length: int, t_length: int) -> int:
        return self.counts.get((r_length, t_length), 0)

    def row(self, r_length: int) -> Dict[int, int]:
        return {
            t: k for (r, t), k in sorted(self.counts.items())
            if r == r_length
        }

    def to_frame(self) -> pd.DataFrame:
        """Counts as a DataFrame, rows r_length, columns t_length."""
        top = max((t for _, t in self.counts), default=0)
        table = pd.DataFrame(
            0,
            index=pd.Index(range(2, self.max_len + 1, 2), name='r_length'),
            columns=pd.Index(range(top + 1), name='t_length')
        )
        for (r, t), k in self.counts.items():
            table.loc[r, t] = k
        return table

    def to_csv(self) -> str:
        return self.to_frame().to_csv()

    def _to_dict(self) -> Dict:
        return {
            'max_len': self.max_len,
            'counts': [[r, t, k] for (r, t), k in sorted(self.counts.items())],
        }


def _classify(
    words_by_len: Iterable[Tuple[int, Iterable[Word]]],
    max_len: int,
    logger: Logger
) -> CensusTable:
    seen = set()
    classes = []
    for n, words in words_by_len:
        for w in words:
            v, c = word_t_class(w)
            # generic relations are told apart by their word only
            key = c.to_list() if c else word_str(w)
            key = str(key)
            if key in seen:
                continue
            seen.add(key)
            classes.append(TClass(v, c))
        logger.debug(f'length {n}: {len(classes)} classes so far')
    return CensusTable(max_len, classes)


def _check_len(max_len: int) -> None:
    if max_len < 2 or max_len % 2:
        raise ValueError(f'max_len must be even and at least 2, got {max_len}')


def census(
    max_len: int,
    threads: int = 1,
    progress: bool = False,
    logger: Logger = getLogger(__name__)
) -> CensusTable:
    """Classes of cyclically reduced stable words up to max_len.

    Words are first reduced to one per orbit of rotation,
    reversal and symbol permutation, then grouped by translation
    class. A class is counted at the shortest length where it
    occurs.

    :raises ValueError: if max_len is odd or smaller than 2
    """
    _check_len(max_len)
    lengths = range(2, max_len + 1, 2)

    def words_by_len():
        for n in lengths:
            words = enumerate_stable(n, threads=threads, logger=logger)
            if progress:
                words = tqdm(words, desc=f'length {n}', unit=' words', leave=False)
            yield n, words

    return _classify(words_by_len(), max_len, logger)


def census_oracle(
    max_len: int,
    logger: Logger = getLogger(__name__)
) -> CensusTable:
    """census() computed from the brute-force list of words."""
    _check_len(max_len)
    return _classify(
        ((n, brute_force_stable(n)) for n in range(2, max_len + 1, 2)),
        max_len,
        logger
    )


# rational lines k2*a2 + k3*a3 = k0*pi with |k2|, |k3| up to this;
# (k2, k3) is not reduced, so k0 ranges over fractions of denominator
# up to the height
TYPICALITY_HEIGHT = 24
CURVE_LINE_TOL = 1e-7
POINT_LINE_TOL = 1e-9


def _directions(height: int) -> np.ndarray:
    out = []
    for k2 in range(0, height + 1):
        for k3 in range(-height, height + 1):
            if (k2, k3) == (0, 0):
                continue
            if k2 == 0 and k3 < 0:
                continue
            out.append((k2, k3))
    return np.array(out, dtype=float)


_DIRECTIONS = _directions(TYPICALITY_HEIGHT)


def rational_line(
    pts: np.ndarray,
    tol: float,
    height: int = TYPICALITY_HEIGHT
) -> Tuple[int, int, int]:
    """(k2, k3, k0) of a line k2*a2 + k3*a3 = k0*pi holding at
    every point, or None."""
    pts = np.atleast_2d(pts)
    dirs = _DIRECTIONS if height == TYPICALITY_HEIGHT else _directions(height)
    v = pts @ dirs.T / pi
    k0 = np.rint(v[0])
    hit = np.all(np.abs(v - k0) <= tol, axis=0)
    if not hit.any():
        return None
    k = int(np.flatnonzero(hit)[0])
    return (int(dirs[k][0]), int(dirs[k][1]), int(k0[k]))


def _straight(curve: np.ndarray, tol: float) -> bool:
    centered = curve - curve.mean(axis=0)
    if len(curve) < 3:
        return True
    return bool(np.linalg.svd(centered, compute_uv=False)[-1] <= tol * np.sqrt(len(curve)))


def typical_components(zs: ZeroSet) -> Tuple[List[np.ndarray], np.ndarray]:
    """Curves and points of a zero set which are not contained
    in a rational line, so that they hold typical triangles."""
    curves = [
        c for c in zs.curves
        if not (_straight(c, CURVE_LINE_TOL) and rational_line(c, CURVE_LINE_TOL) is not None)
    ]
    pts = np.asarray(zs.points).reshape(-1, 2)
    keep = [rational_line(p, POINT_LINE_TOL) is None for p in pts]
    return curves, pts[np.array(keep, dtype=bool)] if len(pts) else pts


class Witness(tgObject):
    """A class whose relation holds for some typical triangles."""

    schema = 'tgtools.witness-word/1'

    def __init__(
        self,
        word: Word,
        tcoords: TCoords,
        kind: str,
        curves: int = 0,
        points: List[List[float]] = None,
        expsum: str = ''
    ):
        self.word = tuple(word)
        self.tcoords = tcoords
        self.kind = kind
        self.curves = curves
        self.points = points or []
        self.expsum = expsum

    @property
    def r_length(self) -> int:
        return len(self.word)

    @property
    def t_length(self) -> int:
        return self.tcoords.t_length()

    def _to_dict(self) -> Dict:
        return {
            'word': word_str(self.word),
            'tcoords': self.tcoords.to_list(),
            'r_length': self.r_length,
            't_length': self.t_length,
            'kind': self.kind,
            'expsum': self.expsum,
            'solver': {'curves': self.curves, 'points': self.points},
        }


def _screen(
    item: Tuple[Word, List[List[int]]],
    grid: int,
    screen_grid: int,
    tol: float
) -> Dict:
    """Solver verdict on one class: 'none', 'curve', 'isolated'
    or 'borderline'."""
    word, rows = item
    c = TCoords.from_list(rows)
    f = expsum_of(c)
    out = {'word': word, 'tcoords': rows, 'expsum': f.to_str(), 'kind': 'none'}
    if f.dominant():
        return out
    zs = zero_set(f, grid=screen_grid, tol=tol)
    if zs.is_empty() and not zs.failures:
        return out
    zs = zero_set(f, grid=grid, tol=tol)
    curves, points = typical_components(zs)
    out['curves'] = len(curves)
    out['points'] = [[float(a2), float(a3)] for a2, a3 in points]
    if curves:
        out['kind'] = 'curve'
    elif len(points):
        out['kind'] = 'isolated'
    elif zs.failures:
        out['kind'] = 'borderline'
        out['failures'] = [list(x) for x in zs.failures]
    return out


class SearchReport(tgObject):

    schema = 'tgtools.search/1'

    def __init__(
        self,
        max_len: int,
        grid: int,
        screen_grid: int,
        witnesses: List[Witness],
        flagged: List[Dict] = None,
        table: CensusTable = None
    ):
        self.max_len = max_len
        self.grid = grid
        self.screen_grid = screen_grid
        self.witnesses = witnesses
        self.flagged = flagged or []
        self.table = table

    def count(self, r_length: int, kind: str = None) -> int:
        return sum(
            1 for w in self.witnesses
            if w.r_length == r_length and (kind is None or w.kind == kind)
        )

    def by_length(self) -> Dict[int, Dict[str, int]]:
        out = {}
        for n in range(2, self.max_len + 1, 2):
            out[n] = {
                'curve': self.count(n, 'curve'),
                'isolated': self.count(n, 'isolated'),
            }
        return out

    def _to_dict(self) -> Dict:
        return {
            'max_len': self.max_len,
            'grid': self.grid,
            'screen_grid': self.screen_grid,
            'by_length': {str(n): v for n, v in self.by_length().items()},
            'witnesses': [w._to_dict() for w in self.witnesses],
            'flagged': self.flagged,
            'census': self.table._to_dict() if self.table is not None else None,
        }


def find_nongeneric_candidates(
    max_len: int,
    grid: int = 1024,
    screen_grid: int = 256,
    tol: float = 1e-10,
    threads: int = 1,
    progress: bool = False,
    logger: Logger = getLogger(__name__)
) -> SearchReport:
    """Classes up to max_len whose relation holds for some
    typical triangle, as found by the solver.

    Every class with non-zero coordinates is screened on a
    coarse grid, and the ones with zeros are solved again on
    the full grid. Components on rational lines are discarded.
    Classes left with only failed Newton seeds are flagged.
    """
    table = census(max_len, threads=threads, progress=progress, logger=logger)
    items = [
        (word_str(c.word), c.tcoords.to_list())
        for c in table.classes if c.tcoords
    ]
    logger.info(f'{len(items)} classes to screen')
    worker = partial(_screen, grid=grid, screen_grid=screen_grid, tol=tol)
    if threads > 1:
        with Pool(threads) as pool:
            results = list(tqdm(
                pool.imap(worker, items),
                total=len(items), desc='screening', disable=not progress
            ))
    else:
        results = [
            worker(item)
            for item in tqdm(items, desc='screening', disable=not progress)
        ]

    witnesses = []
    flagged = []
    for r in results:
        if r['kind'] in ('curve', 'isolated'):
            witnesses.append(Witness(
                tuple(int(s) for s in r['word']),
                TCoords.from_list(r['tcoords']),
                r['kind'],
                curves=r.get('curves', 0),
                points=r.get('points'),
                expsum=r['expsum']
            ))
        elif r['kind'] == 'borderline':
            logger.warning(f"{r['word']}: only unrefined zeros, flagged")
            flagged.append(r)
    witnesses.sort(key=lambda w: (w.r_length, w.tcoords.to_list()))
    return SearchReport(max_len, grid, screen_grid, witnesses, flagged, table)
