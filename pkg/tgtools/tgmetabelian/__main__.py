from argparse import Namespace
from logging import Logger
from json import dumps

from tgtools.Args import UsageError
from tgtools.tgwords import BadSymbol
from tgtools.tgmetabelian.tgMetabelian import (
    OddLength,
    meta_to_tcoords,
    normal_form,
    to_ywords,
    yword_str,
)
from tgtools.tgmetabelian.Args import add_arguments


def run_nf(args: Namespace, logger: Logger) -> int:
    try:
        yw = to_ywords(args.word)
    except (BadSymbol, OddLength) as e:
        raise UsageError('--word', str(e))
    logger.debug(f'{args.word} -> {yword_str(yw)}')
    nf = normal_form(yw)
    out = nf._to_dict()
    if args.tcoords and nf.a == 0 and nf.b == 0:
        out['tcoords'] = meta_to_tcoords(nf).to_list()
    if args.format == 'json':
        print(dumps({
            'schema': nf.schema,
            'word': args.word,
            **out
        }))
    else:
        print(dumps(out, separators=(',', ':')))
    return 0


COMMANDS = {
    'nf': (
        add_arguments,
        run_nf,
        'metabelian normal form of an even-length word'
    ),
}


def _cli():
    from tgtools.__main__ import main
    return main(prog='tgmetabelian', commands=COMMANDS)


if __name__ == '__main__':
    exit(_cli())
