"""
Created on Oct 19 2026

Chains of reflected triangles.

A word w = i_1...i_n is unfolded from its last letter: triangle
j of the chain is the image of the base triangle under
r_{i_(n-j+1)}...r_{i_n}, so that each triangle is the mirror
image of the previous one across one of its edges, and the last
triangle is the image of the base triangle under w.
"""

from typing import (
    List,
    Tuple,
    Union,
    Sequence,
)
import numpy as np

from tgtools.tglibs import TCoords
from tgtools.tgwords import (
    Word,
    to_word,
)
from tgtools.tgisometry import (
    NotATranslation,
    NotInTranslationSubgroup,
    SymIsometry,
    TriangleShape,
    compose,
    evaluate,
    from_word,
    generator,
    t_coordinates,
    t_value,
    translation_vector,
    uvec_value,
)

Segment = Tuple[np.ndarray, np.ndarray]


class Chain():
    """The triangles of an unfolded word with the path of their
    incenters.

    :param shape: shape of the base triangle
    :param word: the unfolded word
    :param triangles: vertex rows A1, A2, A3 of each triangle
    :param incenters: incenter of each triangle
    :param displacements: (start, end) of the incenter move
        caused by each letter, in letter order
    :param tvectors: (start, end) of the arrows decomposing the
        translation of a stable word on the conjugates of t1
    """

    def __init__(
        self,
        shape: TriangleShape,
        word: Word,
        triangles: List[np.ndarray],
        incenters: List[np.ndarray],
        displacements: List[Segment],
        tvectors: List[Segment] = None
    ):
        self.shape = shape
        self.word = word
        self.triangles = triangles
        self.incenters = incenters
        self.displacements = displacements
        self.tvectors = tvectors or []

    @property
    def letters(self) -> Word:
        """Letters in the order they are unfolded."""
        return tuple(reversed(self.word))

    def __len__(self) -> int:
        return len(self.triangles)

    def is_closed(self, tol: float = 1e-9) -> bool:
        """True if the last triangle lies on the first one."""
        return bool(np.allclose(self.triangles[-1], self.triangles[0], atol=tol))

    def points(self) -> np.ndarray:
        """Every point of the chain, for bounding boxes."""
        pts = [np.vstack(self.triangles)]
        for a, b in self.displacements + self.tvectors:
            pts.append(np.vstack([a, b]))
        return np.vstack(pts)


def _image(vertices: np.ndarray, g: SymIsometry, s: TriangleShape) -> np.ndarray:
    m, v = evaluate(g, s)
    return vertices @ m.T + v


def _tvectors(word: Word, s: TriangleShape, start: np.ndarray) -> List[Segment]:
    try:
        coords = t_coordinates(from_word(word))
    except (NotATranslation, NotInTranslationSubgroup):
        return []
    out = []
    tip = start
    for key, k in coords.items():
        step = t_value(TCoords({key: k}), s)
        out.append((tip, tip + step))
        tip = tip + step
    return out


def unfold(
    w: Union[str, Sequence[int]],
    s: TriangleShape,
    tvectors: bool = True
) -> Chain:
    """Unfold a word into its chain of len(w) + 1 triangles.

    :param w: the word
    :param s: shape of the base triangle
    :param tvectors: add the t1-conjugate arrows of a stable word
    :rtype: Chain
    """
    word = to_word(w)
    base = s.vertices()
    suffix = SymIsometry.identity()
    triangles = [base]
    incenters = [np.zeros(2)]
    for i in reversed(word):
        suffix = compose(generator(i), suffix)
        triangles.append(_image(base, suffix, s))
        incenters.append(uvec_value(suffix.trans, s))

    # incenters[k] is reached after k letters from the right
    n = len(word)
    moves = [uvec_value(v, s) for v in translation_vector(word)]
    displacements = []
    for j, move in enumerate(moves):
        start = incenters[n - j - 1]
        displacements.append((start, start + move))

    arrows = _tvectors(word, s, incenters[0]) if tvectors and word else []
    return Chain(s, word, triangles, incenters, displacements, arrows)
