from argparse import ArgumentParser
from tgtools.Args import add_format_arg
from tgtools.tgpresentations.tgPresentations import SUITES

DEFAULT_WINDOW = 4


def add_arguments_verify(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        '--suite',
        type=str,
        choices=list(SUITES),
        required=True,
        help='presentation to verify: s (linear parts), g (full group), '
             'h (minimal, rotations) or gmin (minimal, full group)'
    )
    parser.add_argument(
        '--window',
        type=int,
        default=DEFAULT_WINDOW,
        help=f'bound on |n|, |m| of the relator families (default: {DEFAULT_WINDOW})'
    )
    parser = add_format_arg(parser, ['text', 'json'], 'json')
    return parser


def add_arguments_witness(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        '--n0',
        type=int,
        required=True,
        help='first index of the relation to omit'
    )
    parser.add_argument(
        '--m0',
        type=int,
        required=True,
        help='second index of the relation to omit'
    )
    parser.add_argument(
        '--window',
        type=int,
        default=DEFAULT_WINDOW,
        help=f'bound on every index of the checked relations (default: {DEFAULT_WINDOW})'
    )
    parser.add_argument(
        '--primed',
        action='store_true',
        default=False,
        help='also check the relation family of the full group on its core indices'
    )
    parser = add_format_arg(parser, ['text', 'json'], 'json')
    return parser
