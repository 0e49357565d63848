"""
Created on Oct 19 2026

Plain SVG 1.1 writer and the drawings built on it.

Output is deterministic: elements are written layer by layer in
a fixed order, and every number with six decimals.
"""

from typing import (
    Dict,
    Iterable,
    List,
    NamedTuple,
    Tuple,
)
from math import pi
import numpy as np

from tgtools.tgrender.tgChain import Chain


PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width)d" height="%(height)d" viewBox="%(x0)s %(y0)s %(w)s %(h)s" version="1.1" xmlns="http://www.w3.org/2000/svg">
"""

POSTAMBLE = """\
</svg>
"""

MARGIN = 0.05
WIDTH = 800


def _num(x: float) -> str:
    s = '%.6f' % x
    # avoid '-0.000000'
    return '0.000000' if s == '-0.000000' else s


def _pts(points: Iterable[Tuple[float, float]]) -> str:
    return ' '.join(f'{_num(x)},{_num(-y)}' for x, y in points)


class SVG():
    """Collects elements in model coordinates (y up) and writes
    them with a viewBox fitted to their bounding box."""

    def __init__(self, layers: List[str]):
        self.min_x = None
        self.max_x = None
        self.min_y = None
        self.max_y = None
        self.layers: Dict[str, List[str]] = {name: [] for name in layers}
        self.markers: Dict[str, str] = {}

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def _style(self, stroke: str, width: float, fill: str = 'none') -> str:
        return (
            f'fill="{fill}" stroke="{stroke}" stroke-width="{_num(width)}" '
            'vector-effect="non-scaling-stroke"'
        )

    def polygon(self, layer: str, points, stroke: str, width: float, fill: str = 'none') -> None:
        for x, y in points:
            self.require(x, y)
        self.layers[layer].append(
            f'<polygon points="{_pts(points)}" {self._style(stroke, width, fill)}/>'
        )

    def polyline(self, layer: str, points, stroke: str, width: float) -> None:
        for x, y in points:
            self.require(x, y)
        self.layers[layer].append(
            f'<polyline points="{_pts(points)}" {self._style(stroke, width)}/>'
        )

    def arrow(self, layer: str, a, b, stroke: str, width: float) -> None:
        self.require(*a)
        self.require(*b)
        marker = 'arrow-' + stroke.lstrip('#')
        self.markers[marker] = stroke
        self.layers[layer].append(
            f'<line x1="{_num(a[0])}" y1="{_num(-a[1])}" '
            f'x2="{_num(b[0])}" y2="{_num(-b[1])}" '
            f'{self._style(stroke, width)} marker-end="url(#{marker})"/>'
        )

    def circle(self, layer: str, x: float, y: float, r: float, stroke: str, width: float, fill: str = 'none') -> None:
        self.require(x - r, y - r)
        self.require(x + r, y + r)
        self.layers[layer].append(
            f'<circle cx="{_num(x)}" cy="{_num(-y)}" r="{_num(r)}" '
            f'{self._style(stroke, width, fill)}/>'
        )

    def to_string(self, width: int = WIDTH) -> str:
        if self.min_x is None:
            self.require(0.0, 0.0)
        w = self.max_x - self.min_x
        h = self.max_y - self.min_y
        pad = max(w, h, 1e-9) * MARGIN
        w += 2 * pad
        h += 2 * pad
        out = [PREAMBLE % {
            'width': width,
            'height': max(1, round(width * h / w)),
            'x0': _num(self.min_x - pad),
            # y is flipped, the top of the box is at -max_y
            'y0': _num(-self.max_y - pad),
            'w': _num(w),
            'h': _num(h),
        }]
        if self.markers:
            out.append('<defs>\n')
            for marker in sorted(self.markers):
                out.append(
                    f'<marker id="{marker}" viewBox="0 0 10 10" refX="10" refY="5" '
                    'markerWidth="6" markerHeight="6" orient="auto">'
                    f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{self.markers[marker]}"/>'
                    '</marker>\n'
                )
            out.append('</defs>\n')
        for name, items in self.layers.items():
            out.append(f'<g id="{name}">\n')
            for item in items:
                out.append(item + '\n')
            out.append('</g>\n')
        out.append(POSTAMBLE)
        return ''.join(out)

    def save(self, filename: str, width: int = WIDTH) -> None:
        with open(filename, 'w') as f:
            f.write(self.to_string(width))


class Style(NamedTuple):
    stroke: float = 1.0
    triangle: str = '#1f77b4'
    base: str = '#d62728'
    path: str = '#2ca02c'
    displacement: str = '#ff7f0e'
    tvector: str = '#9467bd'
    real: str = '#1f77b4'
    imaginary: str = '#ff7f0e'
    zero: str = '#d62728'
    tvectors: bool = True


CHAIN_LAYERS = ['triangles', 'incenter-path', 'displacements', 't-vectors']
ZEROSET_LAYERS = ['domain', 'contours-real', 'contours-imaginary', 'curves', 'points']


def to_svg(chain: Chain, style: Style = Style()) -> str:
    """SVG drawing of a chain: the triangles, the path of their
    incenters, the incenter moves and the t1-conjugate arrows."""
    svg = SVG(CHAIN_LAYERS)
    for k, tri in enumerate(chain.triangles):
        svg.polygon(
            'triangles', tri,
            style.base if k == 0 else style.triangle,
            2 * style.stroke if k == 0 else style.stroke
        )
    if len(chain.incenters) > 1:
        svg.polyline('incenter-path', chain.incenters, style.path, style.stroke)
    for a, b in chain.displacements:
        svg.arrow('displacements', a, b, style.displacement, style.stroke)
    if style.tvectors:
        for a, b in chain.tvectors:
            svg.arrow('t-vectors', a, b, style.tvector, 1.5 * style.stroke)
    return svg.to_string()


def zeroset_to_svg(zs, style: Style = Style()) -> str:
    """SVG drawing of a zero set over the triangle of angles,
    with the contours kept by zero_set(keep_contours=True)."""
    svg = SVG(ZEROSET_LAYERS)
    svg.polygon('domain', [(0.0, 0.0), (pi, 0.0), (0.0, pi)], '#000000', style.stroke)
    for poly in zs.contours.get('real', []):
        svg.polyline('contours-real', poly, style.real, 0.5 * style.stroke)
    for poly in zs.contours.get('imaginary', []):
        svg.polyline('contours-imaginary', poly, style.imaginary, 0.5 * style.stroke)
    for curve in zs.curves:
        svg.polyline('curves', curve, style.zero, 2 * style.stroke)
    for a2, a3 in np.asarray(zs.points).reshape(-1, 2):
        svg.circle('points', a2, a3, 0.02, style.zero, style.stroke, fill=style.zero)
    return svg.to_string()
