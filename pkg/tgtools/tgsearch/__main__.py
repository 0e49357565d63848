from argparse import Namespace
from logging import Logger
from colored import fg, attr

from brs_utils import (
    print_OK_adv as print_OK,
    print_title_adv as print_title
)
from tgtools.Args import UsageError
from tgtools.tgwords import word_str
from tgtools.tgsearch.tgCensus import (
    census,
    find_nongeneric_candidates,
)
from tgtools.tgsearch.Args import (
    LONG_LEN,
    SOFT_MAX_LEN,
    add_arguments_census,
    add_arguments_search,
)


def _check_args(args: Namespace, logger: Logger) -> None:
    if args.max_len < 2 or args.max_len % 2:
        raise UsageError('--max-len', f'must be even and at least 2, got {args.max_len}')
    if args.max_len > SOFT_MAX_LEN and not args.long_run:
        raise UsageError('--max-len', f'{args.max_len} is above {SOFT_MAX_LEN}, add --long-run')
    if args.threads < 1:
        raise UsageError('--threads', f'must be at least 1, got {args.threads}')
    if args.max_len >= LONG_LEN:
        logger.warning(f'length {args.max_len}: expect a run of hours')


def _log_params(args: Namespace, logger: Logger, names) -> None:
    logger.info(
        '{color}{typo}Parameters{rst}'.format(
            color=fg('cyan'), typo=attr('bold'), rst=attr('reset')
        )
    )
    for name in names:
        logger.info(f'   |- {name}: {getattr(args, name)}')


def run_census(args: Namespace, logger: Logger) -> int:
    _check_args(args, logger)
    _log_params(args, logger, ['max_len', 'threads'])
    print_title(
        txt=f'Census of stable words up to length {args.max_len}',
        logger=logger,
        waiting=True
    )
    table = census(
        args.max_len,
        threads=args.threads,
        progress=not args.no_progress,
        logger=logger
    )
    print_OK(logger)
    if args.format == 'csv':
        print(table.to_csv(), end='')
    else:
        print(table.to_json())
    return 0


def run_search(args: Namespace, logger: Logger) -> int:
    _check_args(args, logger)
    if args.grid < 64 or args.screen_grid < 64:
        raise UsageError('--grid/--screen-grid', 'must be at least 64')
    if args.tol <= 0:
        raise UsageError('--tol', f'must be positive, got {args.tol}')
    _log_params(args, logger, ['max_len', 'threads', 'grid', 'screen_grid', 'tol'])
    print_title(
        txt=f'Searching relations of special triangles up to length {args.max_len}',
        logger=logger,
        waiting=True
    )
    report = find_nongeneric_candidates(
        args.max_len,
        grid=args.grid,
        screen_grid=args.screen_grid,
        tol=args.tol,
        threads=args.threads,
        progress=not args.no_progress,
        logger=logger
    )
    print_OK(logger)
    logger.info(f'{len(report.witnesses)} non-generic witnesses')
    if args.format == 'json':
        print(report.to_json())
    else:
        for n, kinds in report.by_length().items():
            if kinds['curve'] or kinds['isolated']:
                print(f"length {n}: {kinds['curve']} curve, {kinds['isolated']} isolated")
        for w in report.witnesses:
            print(f'{word_str(w.word)}  {w.kind}  t_length={w.t_length}  {w.expsum} = 0')
        for r in report.flagged:
            print(f"{r['word']}  borderline")
    return 0


COMMANDS = {
    'census': (
        add_arguments_census,
        run_census,
        'count classes of stable words by length'
    ),
    'search': (
        add_arguments_search,
        run_search,
        'find relations holding for special typical triangles'
    ),
}


def _cli():
    from tgtools.__main__ import main
    return main(prog='tgsearch', commands=COMMANDS)


if __name__ == '__main__':
    exit(_cli())
