from argparse  import (
    ArgumentParser,
    ArgumentTypeError,
)
from tgtools._version import __version__
from brs_utils import add_logger_args
from tgtools.tglibs import parse_angle as angle_value


class UsageError(Exception):
    """Raised by a command runner when a flag value is
    rejected by the library. Carries the offending flag
    so that the CLI can name it before exiting with code 2."""

    def __init__(self, flag: str, msg: str):
        self.flag = flag
        self.msg = msg
        super().__init__(f'argument {flag}: {msg}')


def _add_arguments(parser: ArgumentParser) -> ArgumentParser:
    # Add arguments related to the logger
    parser = add_logger_args(parser)

    parser.add_argument(
        '--version',
        action='version',
        version='%(prog)s {}'.format(__version__),
        help='show the version number and exit'
    )

    return parser


def add_format_arg(
    parser: ArgumentParser,
    choices: list,
    default: str
) -> ArgumentParser:
    parser.add_argument(
        '--format',
        type=str,
        choices=choices,
        default=default,
        help=f'output format (default: {default})'
    )
    return parser


def parse_angle(value: str) -> float:
    """argparse type for angles, see tgtools.tglibs.parse_angle."""
    try:
        return angle_value(value)
    except ValueError as e:
        raise ArgumentTypeError(str(e))
