from argparse import ArgumentParser
from tgtools.Args import add_format_arg


def _add_word_arg(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        '--word',
        type=str,
        required=True,
        help='word over {1,2,3}, e.g. 123123'
    )
    return parser


def add_arguments_identity(parser: ArgumentParser) -> ArgumentParser:
    parser = _add_word_arg(parser)
    parser = add_format_arg(parser, ['text', 'json'], 'text')
    return parser


def add_arguments_tcoords(parser: ArgumentParser) -> ArgumentParser:
    parser = _add_word_arg(parser)
    parser = add_format_arg(parser, ['text', 'json'], 'text')
    return parser
