from argparse import ArgumentParser
from tgtools.Args import add_format_arg

DEFAULT_GRID = 1024
DEFAULT_TOL = 1e-10
DEFAULT_NEWTON_ITER = 50
DEFAULT_INSET = 1e-6
DEFAULT_CURVE_FRACTION = 0.95


def add_arguments(parser: ArgumentParser) -> ArgumentParser:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        '--witness',
        type=str,
        help='JSON file holding a search report, a single witness '
             '{"word": ..., "tcoords": ...} or a bare list of [n, m, c]'
    )
    source.add_argument(
        '--word',
        type=str,
        help='stable word whose relation is solved'
    )
    parser.add_argument(
        '--grid',
        type=int,
        default=DEFAULT_GRID,
        help=f'samples per axis of the triangle of angles (default: {DEFAULT_GRID})'
    )
    parser.add_argument(
        '--tol',
        type=float,
        default=DEFAULT_TOL,
        help=f'bound on |f| at reported zeros (default: {DEFAULT_TOL})'
    )
    parser.add_argument(
        '--max-iter',
        type=int,
        default=DEFAULT_NEWTON_ITER,
        help=f'Newton iterations per seed (default: {DEFAULT_NEWTON_ITER})'
    )
    parser.add_argument(
        '--inset',
        type=float,
        default=DEFAULT_INSET,
        help=f'distance kept from the boundary of the triangle (default: {DEFAULT_INSET})'
    )
    parser.add_argument(
        '--svg',
        type=str,
        default=None,
        help='write a contour overlay to this SVG file (one file per witness, '
             'numbered when there are several)'
    )
    parser = add_format_arg(parser, ['json', 'text'], 'json')
    return parser
