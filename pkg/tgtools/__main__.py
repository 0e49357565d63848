from argparse import (
    ArgumentParser,
    Namespace
)
from logging import Logger
from typing import (
    Callable,
    Dict,
    List,
    Tuple,
)
from colored import fg, attr

from tgtools.Args import (
    UsageError,
    _add_arguments,
)

# name -> (add_arguments, runner, help)
Command = Tuple[Callable, Callable, str]


def init(
    parser: ArgumentParser,
    args: Namespace
) -> Logger:
    from brs_utils import create_logger
    from tgtools._version import __version__

    if args.log.lower() in ['silent', 'quiet'] or args.silent:
        args.log = 'CRITICAL'

    # Create logger
    logger = create_logger(parser.prog, args.log)

    logger.info(
        '{color}{typo}tgtools {version}{rst}{color} ({prog}){rst}\n'.format(
            prog = logger.name,
            version = __version__,
            color=fg('white'),
            typo=attr('bold'),
            rst=attr('reset')
        )
    )
    logger.debug(args)

    return logger


def all_commands() -> Dict[str, Command]:
    from tgtools.tgisometry.__main__ import COMMANDS as isometry
    from tgtools.tgmetabelian.__main__ import COMMANDS as metabelian
    from tgtools.tgpresentations.__main__ import COMMANDS as presentations
    from tgtools.tgsearch.__main__ import COMMANDS as search
    from tgtools.tgsolver.__main__ import COMMANDS as solver
    from tgtools.tgrender.__main__ import COMMANDS as render
    commands = {}
    for tool in (search, solver, presentations, isometry, metabelian, render):
        commands.update(tool)
    return commands


def build_parser(
    prog: str,
    commands: Dict[str, Command]
) -> Tuple[ArgumentParser, Dict[str, ArgumentParser]]:
    from tgtools._version import __version__
    parser = ArgumentParser(
        prog=prog,
        description='Exact computations in the reflection group of a triangle'
    )
    parser.add_argument(
        '--version',
        action='version',
        version='%(prog)s {}'.format(__version__),
        help='show the version number and exit'
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    subs = {}
    for name, (add_args, _, help) in commands.items():
        sub = subparsers.add_parser(name, help=help, description=help)
        # logger flags live on the subcommands only
        sub = _add_arguments(sub)
        subs[name] = add_args(sub)
    return parser, subs


def main(
    argv: List[str] = None,
    prog: str = 'tgtools',
    commands: Dict[str, Command] = None
) -> int:
    """Parse argv, run the subcommand and return its exit code:
    0 on success, 1 when a verification fails, 2 on usage errors."""
    if commands is None:
        commands = all_commands()
    parser, subs = build_parser(prog, commands)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    sub = subs[args.command]
    logger = init(sub, args)
    _, runner, _ = commands[args.command]
    try:
        return runner(args, logger)
    except UsageError as e:
        logger.error(str(e))
        sub.print_usage()
        return 2


def _cli():
    return main()


if __name__ == '__main__':
    exit(_cli())
