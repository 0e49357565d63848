"""
Created on Oct 19 2026

Zero sets of exponential sums over the open triangle
T = {a2 > 0, a3 > 0, a2 + a3 < pi}.

The sum is sampled on a square grid; marching squares gives
the contours of its real and imaginary parts, which networkx
assembles into polylines. Vertices of the contours are then
refined by Newton's method: a contour whose vertices all
refine to zeros of the full sum is a curve of zeros, and a
crossing of the two contours away from such curves seeds an
isolated zero.
"""

from typing import (
    Dict,
    List,
    Tuple,
)
from logging import (
    Logger,
    getLogger
)
from math import pi
import numpy as np
import networkx as nx
from scipy.optimize import least_squares

from tgtools.tglibs import tgObject
from tgtools.tgsolver.tgExpSum import ExpSum


class NoConvergence(Exception):
    """A Newton seed which did not reach a zero. Recorded in
    the zero set, never raised by zero_set()."""


MARCHING_SQUARES_TABLE = [
    (False, []),  # 0000
    (False, [((0, 3), (2, 3))]),  # 0001
    (False, [((1, 2), (2, 3))]),  # 0010
    (False, [((0, 3), (1, 2))]),  # 0011
    (False, [((0, 1), (1, 2))]),  # 0100
    (True, ([((0, 1), (1, 2)), ((0, 3), (2, 3))], [((0, 1), (0, 3)), ((1, 2), (2, 3))])),  # 0101
    (False, [((0, 1), (2, 3))]),  # 0110
    (False, [((0, 1), (0, 3))]),  # 0111
    (False, [((0, 1), (0, 3))]),  # 1000
    (False, [((0, 1), (2, 3))]),  # 1001
    (True, ([((0, 1), (0, 3)), ((1, 2), (2, 3))], [((0, 1), (1, 2)), ((0, 3), (2, 3))])),  # 1010
    (False, [((0, 1), (1, 2))]),  # 1011
    (False, [((0, 3), (1, 2))]),  # 1100
    (False, [((1, 2), (2, 3))]),  # 1101
    (False, [((0, 3), (2, 3))]),  # 1110
    (False, []),  # 1111
]

# shortest run of refined vertices kept as a piece of curve
MIN_RUN = 8


class Contours():
    """Marching-squares contours of one real grid function.

    Nodes are grid edges crossed by the contour: edge (i, j)
    along the first axis has id 2*(i*size + j), along the second
    axis 2*(i*size + j) + 1. Each cell crossed by the contour
    contributes one or two segments joining such nodes.
    """

    def __init__(
        self,
        values: np.ndarray,
        axis: np.ndarray,
        cells: np.ndarray,
        center_sign
    ):
        self.values = values
        self.axis = axis
        self.size = len(axis)
        self.graph = nx.Graph()
        self.cell_segments: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        self.points: Dict[int, np.ndarray] = {}
        self.__march(cells, center_sign)

    def _node(self, i: int, j: int, edge: Tuple[int, int]) -> int:
        a, b = sorted(edge)
        if (a, b) == (0, 1):
            return 2 * (i * self.size + j)
        if (a, b) == (1, 2):
            return 2 * ((i + 1) * self.size + j) + 1
        if (a, b) == (2, 3):
            return 2 * (i * self.size + j + 1)
        return 2 * (i * self.size + j) + 1

    def _node_point(self, node: int) -> np.ndarray:
        k, vertical = divmod(node, 2)
        i, j = divmod(k, self.size)
        i1, j1 = (i, j + 1) if vertical else (i + 1, j)
        v0, v1 = self.values[i, j], self.values[i1, j1]
        t = min(max(v0 / (v0 - v1), 0.0), 1.0)
        p0 = np.array([self.axis[i], self.axis[j]])
        p1 = np.array([self.axis[i1], self.axis[j1]])
        return p0 * (1 - t) + t * p1

    def __march(self, cells: np.ndarray, center_sign) -> None:
        s = (self.values > 0).astype(np.int8)
        index = (
            (s[:-1, :-1] << 3) | (s[1:, :-1] << 2)
            | (s[1:, 1:] << 1) | s[:-1, 1:]
        )
        index[~cells] = 0
        for i, j in np.argwhere((index > 0) & (index < 15)):
            saddle, edges = MARCHING_SQUARES_TABLE[index[i, j]]
            if saddle:
                edges = edges[int(center_sign(i, j) > 0)]
            for e0, e1 in edges:
                a, b = self._node(i, j, e0), self._node(i, j, e1)
                self.graph.add_edge(a, b)
                self.cell_segments.setdefault((int(i), int(j)), []).append((a, b))
        for node in self.graph.nodes:
            self.points[node] = self._node_point(node)

    def polylines(self) -> List[Tuple[np.ndarray, bool]]:
        """Connected pieces as (vertices, closed), ordered along
        the contour and sorted by first vertex."""
        out = []
        for comp in nx.connected_components(self.graph):
            sub = self.graph.subgraph(comp)
            ends = sorted(n for n in comp if sub.degree(n) == 1)
            start = ends[0] if ends else min(comp)
            order = list(nx.dfs_preorder_nodes(sub, start))
            out.append((
                np.array([self.points[n] for n in order]),
                not ends and len(order) > 2
            ))
        out.sort(key=lambda x: tuple(x[0][0]))
        return out

    def segment_points(self, cell: Tuple[int, int]) -> List[Tuple[np.ndarray, np.ndarray]]:
        return [
            (self.points[a], self.points[b])
            for a, b in self.cell_segments.get(cell, [])
        ]


class ZeroSet(tgObject):
    """Curves and isolated points where an exponential sum
    vanishes, together with the Newton seeds that failed."""

    schema = 'tgtools.zeroset/1'

    def __init__(
        self,
        curves: List[np.ndarray] = None,
        points: np.ndarray = None,
        failures: List[Tuple[float, float, float]] = None,
        grid: int = 0,
        tol: float = 0.0,
        form: str = 'complex',
        residuals: Dict = None,
    ):
        self.curves = curves or []
        self.points = np.zeros((0, 2)) if points is None else np.asarray(points)
        self.failures = failures or []
        self.grid = grid
        self.tol = tol
        self.form = form
        self.residuals = residuals or {'curves': [], 'points': []}
        # filled by zero_set(keep_contours=True)
        self.contours: Dict[str, List[np.ndarray]] = {}

    def is_empty(self) -> bool:
        return not self.curves and not len(self.points)

    @property
    def identically_zero(self) -> bool:
        return self.form == 'zero'

    def tags(self) -> List[str]:
        if self.identically_zero:
            return ['identically-zero']
        out = []
        if self.curves:
            out.append('curve')
        if len(self.points):
            out.append('points')
        if self.failures:
            out.append('no-convergence')
        return out or ['empty']

    def summary(self) -> Dict:
        return {
            'curves': len(self.curves),
            'points': int(len(self.points)),
            'failures': len(self.failures),
        }

    def _to_dict(self) -> Dict:
        return {
            'grid': self.grid,
            'tol': self.tol,
            'form': self.form,
            'tags': self.tags(),
            'points': [
                [float(a2), float(a3), float(r)]
                for (a2, a3), r in zip(self.points, self.residuals['points'])
            ],
            'curves': [
                [[float(a2), float(a3), float(r)] for (a2, a3), r in zip(c, res)]
                for c, res in zip(self.curves, self.residuals['curves'])
            ],
            'failures': [
                [float(a2), float(a3), float(r)] for a2, a3, r in self.failures
            ],
        }


def inside(pts: np.ndarray, inset: float) -> np.ndarray:
    pts = np.atleast_2d(pts)
    return (
        (pts[:, 0] > inset) & (pts[:, 1] > inset)
        & (pts[:, 0] + pts[:, 1] < pi - inset)
    )


def _project(
    f: ExpSum,
    part: str,
    pts: np.ndarray,
    max_iter: int
) -> np.ndarray:
    """Move points onto {Re f = 0} (or Im) along the gradient."""
    x = pts.copy()
    for _ in range(max_iter):
        v = f.evaluate(x[:, 0], x[:, 1])
        d2, d3 = f.gradient(x[:, 0], x[:, 1])
        if part == 'real':
            g, g2, g3 = v.real, d2.real, d3.real
        else:
            g, g2, g3 = v.imag, d2.imag, d3.imag
        norm = g2 * g2 + g3 * g3
        ok = norm > 1e-24
        step = np.where(ok, g / np.where(ok, norm, 1.0), 0.0)
        x[:, 0] -= step * g2
        x[:, 1] -= step * g3
        if np.all(np.abs(step) * np.sqrt(norm) < 1e-15):
            break
    return x


def _runs(mask: np.ndarray, min_len: int) -> List[Tuple[int, int]]:
    out = []
    start = None
    for k, good in enumerate(list(mask) + [False]):
        if good and start is None:
            start = k
        elif not good and start is not None:
            if k - start >= min_len:
                out.append((start, k))
            start = None
    return out


def _merge_pieces(pieces: List[np.ndarray], gap: float) -> List[np.ndarray]:
    """Join curve pieces whose ends are within `gap`."""
    if len(pieces) < 2:
        return pieces
    g = nx.Graph()
    g.add_nodes_from(range(len(pieces)))
    for a in range(len(pieces)):
        for b in range(a + 1, len(pieces)):
            ea = pieces[a][[0, -1]]
            eb = pieces[b][[0, -1]]
            d = np.linalg.norm(ea[:, None, :] - eb[None, :, :], axis=2)
            if d.min() <= gap:
                g.add_edge(a, b)
    out = []
    for comp in sorted(nx.connected_components(g), key=min):
        order = list(nx.dfs_preorder_nodes(g, min(comp)))
        curve = pieces[order[0]]
        for k in order[1:]:
            nxt = pieces[k]
            if np.linalg.norm(curve[-1] - nxt[-1]) < np.linalg.norm(curve[-1] - nxt[0]):
                nxt = nxt[::-1]
            curve = np.vstack([curve, nxt])
        out.append(curve)
    return out


def _newton(
    f: ExpSum,
    seeds: np.ndarray,
    tol: float,
    max_iter: int
) -> Tuple[np.ndarray, np.ndarray]:
    """2x2 Newton on (Re f, Im f), batched over seeds."""
    x = seeds.copy()
    for _ in range(max_iter):
        v = f.evaluate(x[:, 0], x[:, 1])
        d2, d3 = f.gradient(x[:, 0], x[:, 1])
        a, b, c, d = d2.real, d3.real, d2.imag, d3.imag
        det = a * d - b * c
        ok = np.abs(det) > 1e-300
        safe = np.where(ok, det, 1.0)
        s2 = np.where(ok, (-v.real * d + b * v.imag) / safe, 0.0)
        s3 = np.where(ok, (-a * v.imag + c * v.real) / safe, 0.0)
        x[:, 0] += s2
        x[:, 1] += s3
        if np.all(np.hypot(s2, s3) < 1e-15):
            break
    res = np.abs(f.evaluate(x[:, 0], x[:, 1]))
    return x, res


def _least_squares(f: ExpSum, seed: np.ndarray) -> Tuple[np.ndarray, float]:
    def fun(x):
        v = f.evaluate(x[0], x[1])
        return [v.real, v.imag]
    sol = least_squares(fun, seed, xtol=1e-15, ftol=1e-15, gtol=1e-15)
    return sol.x, float(np.abs(f.evaluate(sol.x[0], sol.x[1])))


def _crossings(
    re: Contours,
    im: Contours,
    both: np.ndarray
) -> List[np.ndarray]:
    """Intersections of the real and imaginary contour segments
    inside the cells where both contours pass."""
    out = []
    for i, j in np.argwhere(both):
        for p0, p1 in re.segment_points((int(i), int(j))):
            for q0, q1 in im.segment_points((int(i), int(j))):
                r, s = p1 - p0, q1 - q0
                den = r[0] * s[1] - r[1] * s[0]
                if den == 0:
                    continue
                w = q0 - p0
                t = (w[0] * s[1] - w[1] * s[0]) / den
                u = (w[0] * r[1] - w[1] * r[0]) / den
                if -1e-9 <= t <= 1 + 1e-9 and -1e-9 <= u <= 1 + 1e-9:
                    out.append(p0 + t * r)
    return out


def zero_set(
    f: ExpSum,
    grid: int = 1024,
    tol: float = 1e-10,
    max_iter: int = 50,
    inset: float = 1e-6,
    curve_fraction: float = 0.95,
    keep_contours: bool = False,
    logger: Logger = getLogger(__name__)
) -> ZeroSet:
    """Curves and isolated points of {f = 0} in the open triangle.

    :param f: the exponential sum
    :param grid: number of samples per axis
    :param tol: bound on |f| at every reported vertex and point
    :param max_iter: Newton iterations per seed
    :param inset: distance kept from the boundary of the triangle
    :param curve_fraction: share of refined vertices a contour
        needs to be reported whole as a curve
    :param keep_contours: store the contours for plotting
    :rtype: ZeroSet
    """
    if grid < 64:
        raise ValueError(f'grid must be at least 64, got {grid}')
    if tol <= 0:
        raise ValueError(f'tol must be positive, got {tol}')
    if not f:
        logger.debug('identically zero sum')
        return ZeroSet(grid=grid, tol=tol, form='zero')
    if f.dominant():
        logger.debug(f'{f.to_str()} has a dominant term, no zero')
        return ZeroSet(grid=grid, tol=tol)

    fb = f.balanced()
    sym = fb.symmetry()
    form = {1: 'real', -1: 'imaginary', 0: 'complex'}[sym]

    axis = np.linspace(inset, pi - inset, grid)
    h = axis[1] - axis[0]
    values = fb.evaluate_grid(axis, axis)
    a2, a3 = np.meshgrid(axis, axis, indexing='ij')
    ok = a2 + a3 < pi - inset
    cells = ok[:-1, :-1] & ok[1:, :-1] & ok[:-1, 1:] & ok[1:, 1:]

    def center_sign(part):
        def sign(i, j):
            v = fb.evaluate(axis[i] + h / 2, axis[j] + h / 2)
            return v.real if part == 'real' else v.imag
        return sign

    # contour carrying the curves of zeros
    curve_part = 'imaginary' if sym == -1 else 'real'
    main = Contours(
        values.imag if curve_part == 'imaginary' else values.real,
        axis, cells, center_sign(curve_part)
    )

    pieces = []
    piece_res = []
    for poly, _ in main.polylines():
        proj = _project(fb, curve_part, poly, max_iter)
        res = np.abs(fb.evaluate(proj[:, 0], proj[:, 1]))
        good = (
            (res <= tol)
            & (np.linalg.norm(proj - poly, axis=1) <= 2 * h)
            & inside(proj, inset)
        )
        if len(good) >= 4 and good.mean() >= curve_fraction:
            pieces.append(proj[good])
            piece_res.append(res[good])
        else:
            for s, e in _runs(good, MIN_RUN):
                pieces.append(proj[s:e])
                piece_res.append(res[s:e])
    curves = _merge_pieces(pieces, 3 * h)
    if len(curves) != len(pieces):
        curve_res = [np.abs(fb.evaluate(c[:, 0], c[:, 1])) for c in curves]
    else:
        curve_res = piece_res
    logger.debug(f'{len(curves)} curve(s) from {len(pieces)} piece(s)')

    points = np.zeros((0, 2))
    point_res = np.zeros(0)
    failures = []
    other = None
    if sym == 0:
        other = Contours(values.imag, axis, cells, center_sign('imaginary'))
        both = np.zeros(cells.shape, dtype=bool)
        for (i, j) in set(main.cell_segments) & set(other.cell_segments):
            both[i, j] = True
        # cells close to a curve belong to it
        if curves:
            verts = np.vstack(curves)
            ci = np.clip(np.rint((verts - inset) / h).astype(int), 0, grid - 2)
            near = np.zeros(cells.shape, dtype=bool)
            for di in range(-3, 4):
                for dj in range(-3, 4):
                    near[
                        np.clip(ci[:, 0] + di, 0, grid - 2),
                        np.clip(ci[:, 1] + dj, 0, grid - 2)
                    ] = True
            both &= ~near
        seeds = _crossings(main, other, both)
        if seeds:
            seeds = np.array(seeds)
            x, res = _newton(fb, seeds, tol, max_iter)
            good = (
                (res <= tol)
                & inside(x, inset)
                & (np.linalg.norm(x - seeds, axis=1) <= 3 * h)
            )
            for k in np.flatnonzero(~good):
                y, r = _least_squares(fb, seeds[k])
                if r <= tol and inside(y, inset)[0] and np.linalg.norm(y - seeds[k]) <= 3 * h:
                    x[k], res[k], good[k] = y, r, True
                else:
                    logger.warning(
                        f'NoConvergence at seed ({seeds[k][0]:.6f}, {seeds[k][1]:.6f}), '
                        f'|f| = {r:.3e}'
                    )
                    failures.append((float(seeds[k][0]), float(seeds[k][1]), float(r)))
            points, point_res = _dedupe(x[good], res[good])
            if curves and len(points):
                verts = np.vstack(curves)
                far = np.array([
                    np.min(np.linalg.norm(verts - p, axis=1)) > 3 * h
                    for p in points
                ])
                points, point_res = points[far], point_res[far]
        logger.debug(f'{len(points)} isolated point(s), {len(failures)} failure(s)')

    zs = ZeroSet(
        curves=curves,
        points=points,
        failures=failures,
        grid=grid,
        tol=tol,
        form=form,
        residuals={'curves': curve_res, 'points': point_res},
    )
    if keep_contours:
        zs.contours[curve_part] = [p for p, _ in main.polylines()]
        if other is not None:
            zs.contours['imaginary'] = [p for p, _ in other.polylines()]
    return zs


def _dedupe(
    pts: np.ndarray,
    res: np.ndarray,
    radius: float = 1e-7
) -> Tuple[np.ndarray, np.ndarray]:
    """Merge points closer than `radius`, keeping the one with
    the smallest residual, and sort them."""
    order = np.argsort(res, kind='stable')
    kept: List[int] = []
    for k in order:
        if all(np.linalg.norm(pts[k] - pts[j]) > radius for j in kept):
            kept.append(k)
    kept.sort(key=lambda k: (pts[k][0], pts[k][1]))
    return pts[kept].reshape(-1, 2), res[kept]
