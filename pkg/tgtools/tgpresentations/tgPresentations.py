"""
Created on Oct 19 2026

The presentations of the triangle group, of its linear part,
of the rotation subgroup and the minimal one of the full group,
together with their verification against the exact models and
the permutation witness for the minimality of the rotation
subgroup presentation.
"""

from typing import (
    Dict,
    Iterator,
    List,
    Tuple,
)
from logging import (
    Logger,
    getLogger
)
from sympy.combinatorics import Permutation

from tgtools.tglibs import tgObject
from tgtools.tgisometry import (
    Rot,
    from_word,
    is_identity,
)
from tgtools.tgmetabelian import normal_form
from tgtools.tgpresentations.tgRelator import (
    FWord,
    Relator,
    UnknownAlphabet,
    commutator,
)
from tgtools.tgpresentations.tgSchreier import (
    b_to_y,
    d_to_y,
    lex_positive,
    primed_cores,
    rs_relation_e,
)


class BadWindow(Exception):
    """Raised when a window is too small for the requested check."""


PRESENTATIONS = ('S', 'G', 'H_min', 'G_min')

# names of the presentations on the command line
SUITES = {'s': 'S', 'g': 'G', 'h': 'H_min', 'gmin': 'G_min'}


def _check_window(window: int) -> None:
    if window < 1:
        raise BadWindow(f'window must be at least 1, got {window}')


def window_pairs(window: int, positive: bool = True) -> Iterator[Tuple[int, int]]:
    """(n, m) with |n|, |m| <= window, lexicographically positive
    or (positive=False) only non-zero, in lexicographic order."""
    for n in range(-window, window + 1):
        for m in range(-window, window + 1):
            if positive and not lex_positive(n, m):
                continue
            if (n, m) == (0, 0):
                continue
            yield n, m


def _involutions() -> List[Relator]:
    return [
        Relator(f'x{i}^2', FWord.x(i) ** 2)
        for i in (1, 2, 3)
    ]


def relators_S() -> List[Relator]:
    """Presentation of the linear parts, x_i^2 and (x1x2x3)^2."""
    x1, x2, x3 = FWord.x(1), FWord.x(2), FWord.x(3)
    return [
        Relator(r.name, r.word, model='linear') for r in _involutions()
    ] + [
        Relator('(x1x2x3)^2', (x1 * x2 * x3) ** 2, model='linear')
    ]


def relators_G(window: int) -> List[Relator]:
    """x_i^2 and [w, (w)(x1x2)^n(x1x3)^m] for (n,m) != (0,0)."""
    _check_window(window)
    x1, x2, x3 = FWord.x(1), FWord.x(2), FWord.x(3)
    w = (x1 * x2 * x3) ** 2
    out = _involutions()
    for n, m in window_pairs(window, positive=False):
        out.append(Relator(
            f'[w,(w)(x1x2)^{n}(x1x3)^{m}]',
            commutator(w, w.conj((x1 * x2) ** n * (x1 * x3) ** m))
        ))
    return out


def relators_H_min(window: int) -> List[Relator]:
    """[[y2,y3], ([y2,y3])y2^n y3^m] for lex-positive (n,m)."""
    _check_window(window)
    y2, y3 = FWord.y(2), FWord.y(3)
    c = commutator(y2, y3)
    return [
        Relator(
            f'[[y2,y3],([y2,y3])y2^{n}y3^{m}]',
            commutator(c, c.conj(y2 ** n * y3 ** m)),
            model='metabelian'
        )
        for n, m in window_pairs(window)
    ]


def relators_G_min(window: int) -> List[Relator]:
    """x_i^2 and [v, (v)(x2x1)^n(x1x3)^m] for lex-positive (n,m),
    with v = [x2x1, x1x3]."""
    _check_window(window)
    x1, x2, x3 = FWord.x(1), FWord.x(2), FWord.x(3)
    v = commutator(x2 * x1, x1 * x3)
    out = _involutions()
    for n, m in window_pairs(window):
        out.append(Relator(
            f'[v,(v)(x2x1)^{n}(x1x3)^{m}]',
            commutator(v, v.conj((x2 * x1) ** n * (x1 * x3) ** m))
        ))
    return out


def presentation(name: str, window: int) -> List[Relator]:
    name = SUITES.get(name, name)
    if name == 'S':
        return relators_S()
    if name == 'G':
        return relators_G(window)
    if name == 'H_min':
        return relators_H_min(window)
    if name == 'G_min':
        return relators_G_min(window)
    raise ValueError(f'unknown presentation {name!r}, expected one of {PRESENTATIONS}')


def _x_symbols(word: FWord) -> List[int]:
    return [g[1] for g, _ in word]


def _y_letters(word: FWord) -> List[int]:
    return [g[1] * e for g, e in word]


def relator_holds(r: Relator) -> bool:
    """Evaluate a relator in the exact model of its alphabet."""
    alphabet = r.alphabet
    if alphabet == '':
        return True
    if alphabet == 'x':
        g = from_word(_x_symbols(r.word))
        if r.model == 'linear':
            return g.lin == Rot(0, 0) and len(r.word) % 2 == 0
        return is_identity(g)
    if alphabet == 'y':
        return normal_form(_y_letters(r.word)).is_identity()
    if alphabet == 'b':
        return normal_form(_y_letters(b_to_y(r.word))).is_identity()
    if alphabet == 'd':
        return normal_form(_y_letters(d_to_y(r.word))).is_identity()
    raise UnknownAlphabet(f'no model for generators {alphabet!r}')


class VerificationReport(tgObject):

    schema = 'tgtools.verify/1'

    def __init__(
        self,
        presentation: str,
        window: int,
        checked: int,
        failures: List[str]
    ):
        self.presentation = presentation
        self.window = window
        self.checked = checked
        self.failures = failures

    @property
    def passed(self) -> bool:
        return not self.failures

    def _to_dict(self) -> Dict:
        return {
            'presentation': self.presentation,
            'window': self.window,
            'checked': self.checked,
            'failures': self.failures,
        }


def verify_relators(
    rs: List[Relator],
    presentation: str = '',
    window: int = 0,
    logger: Logger = getLogger(__name__)
) -> VerificationReport:
    """Check that every relator is the identity in the exact
    model, listing the names of those which are not."""
    failures = []
    for r in rs:
        if relator_holds(r):
            logger.debug(f'{r.name}: OK')
        else:
            logger.warning(f'{r.name}: does not hold')
            failures.append(r.name)
    return VerificationReport(presentation, window, len(rs), failures)


class WitnessReport(tgObject):

    schema = 'tgtools.witness/1'

    def __init__(
        self,
        n0: int,
        m0: int,
        window: int,
        checked: int,
        failures: List[List[int]],
        omitted_image: List[List[int]],
        primed: bool = False,
        primed_hits: List[List[int]] = None
    ):
        self.n0 = n0
        self.m0 = m0
        self.window = window
        self.checked = checked
        self.failures = failures
        self.omitted_image = omitted_image
        self.primed = primed
        self.primed_hits = primed_hits or []

    @property
    def passed(self) -> bool:
        if self.failures or not self.omitted_image:
            return False
        if self.primed:
            return all(
                (n, m) == (self.n0, self.m0)
                for n, m, _, _ in self.primed_hits
            ) and bool(self.primed_hits)
        return True

    def _to_dict(self) -> Dict:
        out = {
            'n0': self.n0,
            'm0': self.m0,
            'window': self.window,
            'checked': self.checked,
            'failures': self.failures,
            'omitted_image': self.omitted_image,
            'passed': self.passed,
        }
        if self.primed:
            out['primed_hits'] = self.primed_hits
        return out


def _image(word: FWord, images: Dict[Tuple, Permutation]) -> Permutation:
    out = Permutation(2)
    for g, e in word:
        p = images.get(g)
        if p is None:
            continue
        out = out * (p if e == 1 else p ** -1)
    return out


def minimality_witness(
    n0: int,
    m0: int,
    window: int,
    primed: bool = False,
    logger: Logger = getLogger(__name__)
) -> WitnessReport:
    """Send d_{0,0} to (1 2), d_{n0,m0} to (2 3) and every other
    d_{i,j} to the identity, then evaluate every e_{n,m,k,l} in
    the window. Only e_{n0,m0,0,0} may leave the identity, and
    it must.

    With `primed`, the relations of the full group are checked
    on their core indices: a relation can only leave the
    identity when its cores are d_{0,0} and d_{n0,m0}.

    :raises BadWindow: if window < max(|n0|, |m0|)
    :raises ValueError: if (n0, m0) is not lexicographically positive
    """
    if not lex_positive(n0, m0):
        raise ValueError(f'({n0},{m0}) is not lexicographically positive')
    if window < max(abs(n0), abs(m0), 1):
        raise BadWindow(
            f'window {window} does not contain ({n0},{m0})'
        )
    images = {
        ('d', 0, 0): Permutation(0, 1, size=3),
        ('d', n0, m0): Permutation(1, 2, size=3),
    }
    checked = 0
    failures = []
    omitted_image: List[List[int]] = []
    hits = []
    special = {(0, 0), (n0, m0)}
    for n, m in window_pairs(window):
        for k in range(-window, window + 1):
            for l in range(-window, window + 1):
                e = rs_relation_e(n, m, k, l)
                p = _image(e, images)
                checked += 1
                if (n, m, k, l) == (n0, m0, 0, 0):
                    if not p.is_Identity:
                        omitted_image = p.cyclic_form
                elif not p.is_Identity:
                    logger.warning(f'e_{{{n},{m},{k},{l}}} maps to {p.cyclic_form}')
                    failures.append([n, m, k, l])
    logger.debug(f'{checked} relations evaluated')
    if primed:
        # the core shift by (1, 1) needs one more step of room
        for n, m in window_pairs(window):
            for k in range(-window - 1, window + 2):
                for l in range(-window - 1, window + 2):
                    c1, c2 = primed_cores(n, m, k, l)
                    if {c1, c2} == special and c1 != c2:
                        hits.append([n, m, k, l])
    return WitnessReport(
        n0, m0, window, checked, failures, omitted_image,
        primed=primed, primed_hits=hits
    )
