from argparse import ArgumentParser
from tgtools.Args import add_format_arg


def add_arguments(parser: ArgumentParser) -> ArgumentParser:
    parser.add_argument(
        '--word',
        type=str,
        required=True,
        help='even-length word over {1,2,3}'
    )
    parser.add_argument(
        '--tcoords',
        action='store_true',
        default=False,
        help='also report t-coordinates when the word is a translation'
    )
    parser = add_format_arg(parser, ['text', 'json'], 'text')
    return parser
