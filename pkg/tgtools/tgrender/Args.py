from argparse import ArgumentParser
from tgtools.Args import (
    add_format_arg,
    parse_angle,
)

DEFAULT_STROKE = 1.0


def add_arguments(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        '--word',
        type=str,
        required=True,
        help='word over {1,2,3} to unfold'
    )
    parser.add_argument(
        '--alpha2',
        type=parse_angle,
        required=True,
        help='angle at A2 in radians, a trailing "pi" is accepted (e.g. 0.25pi)'
    )
    parser.add_argument(
        '--alpha3',
        type=parse_angle,
        required=True,
        help='angle at A3 in radians, a trailing "pi" is accepted'
    )
    parser.add_argument(
        '--out',
        type=str,
        required=True,
        help='SVG file to write'
    )
    parser.add_argument(
        '--stroke',
        type=float,
        default=DEFAULT_STROKE,
        help=f'stroke width in pixels (default: {DEFAULT_STROKE})'
    )
    parser.add_argument(
        '--no-tvectors',
        action='store_true',
        default=False,
        help='do not draw the t1-conjugate arrows'
    )
    parser = add_format_arg(parser, ['svg', 'json'], 'svg')
    return parser
