"""
Created on Oct 19 2026
"""

from typing import (
    Callable,
    Dict,
)
from logging import (
    Logger,
    getLogger
)
from math import pi
import numpy as np
from scipy.optimize import brentq

from tgtools.tglibs import tgObject
from tgtools.tgsolver.tgExpSum import ExpSum


class LocusReport(tgObject):

    schema = 'tgtools.locus/1'

    def __init__(
        self,
        samples: int,
        max_residual: float,
        fraction: float,
        tol: float
    ):
        self.samples = samples
        self.max_residual = max_residual
        self.fraction = fraction
        self.tol = tol

    @property
    def passed(self) -> bool:
        return self.samples > 0 and self.fraction == 1.0

    def _to_dict(self) -> Dict:
        return {
            'samples': self.samples,
            'max_residual': self.max_residual,
            'fraction': self.fraction,
            'tol': self.tol,
            'passed': self.passed,
        }


def implicit_locus(
    g: Callable[[np.ndarray, np.ndarray], np.ndarray],
    samples: int = 100,
    columns: int = None,
    rows: int = 2048,
    inset: float = 1e-6
) -> np.ndarray:
    """Points of the curve {g = 0} inside the triangle.

    Every column a2 = const is scanned for sign changes of g in
    a3, each of which is refined with brentq. Up to `samples`
    points are then taken evenly from the result.

    :param g: vectorized real function of (a2, a3)
    :rtype: array of shape (k, 2), k <= samples
    """
    if columns is None:
        columns = 4 * samples
    out = []
    for a2 in np.linspace(inset, pi - inset, columns + 2)[1:-1]:
        top = pi - a2 - inset
        if top <= inset:
            continue
        a3 = np.linspace(inset, top, rows)
        v = g(np.full_like(a3, a2), a3)
        flips = np.flatnonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)
        for k in flips:
            root = brentq(
                lambda t: float(g(np.array(a2), np.array(t))),
                a3[k], a3[k + 1],
                xtol=1e-15, rtol=4 * np.finfo(float).eps
            )
            out.append((a2, root))
    if not out:
        return np.zeros((0, 2))
    pts = np.array(out)
    if len(pts) > samples:
        pts = pts[np.linspace(0, len(pts) - 1, samples).round().astype(int)]
    return pts


def verify_on_locus(
    f: ExpSum,
    sampler: Callable[[], np.ndarray],
    tol: float = 1e-10,
    logger: Logger = getLogger(__name__)
) -> LocusReport:
    """Evaluate |f| at the points given by `sampler` and report
    the fraction of them below `tol`."""
    pts = np.atleast_2d(np.asarray(sampler(), dtype=float))
    if pts.size == 0:
        logger.warning('the locus sampler returned no point')
        return LocusReport(0, float('nan'), 0.0, tol)
    res = np.abs(f.evaluate(pts[:, 0], pts[:, 1]))
    report = LocusReport(
        int(len(pts)),
        float(res.max()),
        float(np.mean(res <= tol)),
        tol
    )
    logger.debug(report.to_json())
    return report
