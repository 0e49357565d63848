from argparse import ArgumentParser
from os import cpu_count
from tgtools.Args import add_format_arg
from tgtools.tgsolver.Args import (
    DEFAULT_GRID,
    DEFAULT_TOL,
)

DEFAULT_MAX_LEN = 12
# lengths above need --long-run
SOFT_MAX_LEN = 24
# lengths from here on take hours
LONG_LEN = 22
DEFAULT_SCREEN_GRID = 256
DEFAULT_THREADS = cpu_count() or 1


def _add_common(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        '--max-len',
        type=int,
        default=DEFAULT_MAX_LEN,
        help=f'longest (even) word length (default: {DEFAULT_MAX_LEN})'
    )
    parser.add_argument(
        '--threads',
        type=int,
        default=DEFAULT_THREADS,
        help=f'worker processes (default: {DEFAULT_THREADS})'
    )
    parser.add_argument(
        '--long-run',
        action='store_true',
        default=False,
        help=f'allow --max-len above {SOFT_MAX_LEN}'
    )
    parser.add_argument(
        '--no-progress',
        action='store_true',
        default=False,
        help='do not show progress bars on standard error'
    )
    return parser


def add_arguments_census(parser: ArgumentParser) -> ArgumentParser:
    parser = _add_common(parser)
    parser = add_format_arg(parser, ['json', 'csv'], 'json')
    return parser


def add_arguments_search(parser: ArgumentParser) -> ArgumentParser:
    parser = _add_common(parser)
    parser.add_argument(
        '--grid',
        type=int,
        default=DEFAULT_GRID,
        help=f'grid confirming the zeros of a class (default: {DEFAULT_GRID})'
    )
    parser.add_argument(
        '--screen-grid',
        type=int,
        default=DEFAULT_SCREEN_GRID,
        help=f'grid of the first pass over every class (default: {DEFAULT_SCREEN_GRID})'
    )
    parser.add_argument(
        '--tol',
        type=float,
        default=DEFAULT_TOL,
        help=f'bound on |f| at reported zeros (default: {DEFAULT_TOL})'
    )
    parser = add_format_arg(parser, ['json', 'text'], 'json')
    return parser
