from argparse import Namespace
from logging import Logger

from brs_utils import (
    print_OK_adv as print_OK,
    print_title_adv as print_title
)
from tgtools.Args import UsageError
from tgtools.tgpresentations.tgPresentations import (
    SUITES,
    BadWindow,
    minimality_witness,
    presentation,
    verify_relators,
)
from tgtools.tgpresentations.Args import (
    add_arguments_verify,
    add_arguments_witness,
)


def run_verify(args: Namespace, logger: Logger) -> int:
    try:
        rs = presentation(args.suite, args.window)
    except BadWindow as e:
        raise UsageError('--window', str(e))
    print_title(
        txt=f'Verifying {len(rs)} relators of {SUITES[args.suite]}',
        logger=logger,
        waiting=True
    )
    report = verify_relators(
        rs,
        presentation=SUITES[args.suite],
        window=args.window,
        logger=logger
    )
    print_OK(logger)
    if args.format == 'json':
        print(report.to_json())
    else:
        print(
            f'{SUITES[args.suite]}: {report.checked} checked, '
            f'{len(report.failures)} failures'
        )
    return 0 if report.passed else 1


def run_witness(args: Namespace, logger: Logger) -> int:
    try:
        report = minimality_witness(
            args.n0,
            args.m0,
            args.window,
            primed=args.primed,
            logger=logger
        )
    except BadWindow as e:
        raise UsageError('--window', str(e))
    except ValueError as e:
        raise UsageError('--n0/--m0', str(e))
    if args.format == 'json':
        print(report.to_json())
    else:
        print(
            f'({args.n0},{args.m0}): {report.checked} checked, '
            f'{"pass" if report.passed else "FAIL"}'
        )
    return 0 if report.passed else 1


COMMANDS = {
    'verify': (
        add_arguments_verify,
        run_verify,
        'check a presentation against the exact models'
    ),
    'witness': (
        add_arguments_witness,
        run_witness,
        'permutation witness that a relation cannot be omitted'
    ),
}


def _cli():
    from tgtools.__main__ import main
    return main(prog='tgpresentations', commands=COMMANDS)


if __name__ == '__main__':
    exit(_cli())
