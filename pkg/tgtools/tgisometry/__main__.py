from argparse import Namespace
from logging import Logger
from json import dumps

from tgtools.Args import UsageError
from tgtools.tgwords import (
    BadSymbol,
    to_word,
    word_str,
)
from tgtools.tgisometry.tgIsometry import (
    NotATranslation,
    NotInTranslationSubgroup,
    from_word,
    is_identity,
    t_coordinates,
)
from tgtools.tgisometry.Args import (
    add_arguments_identity,
    add_arguments_tcoords,
)


def _read_word(args: Namespace):
    try:
        return to_word(args.word)
    except BadSymbol as e:
        raise UsageError('--word', str(e))


def run_identity(args: Namespace, logger: Logger) -> int:
    word = _read_word(args)
    g = from_word(word)
    result = is_identity(g)
    logger.debug(f'{word_str(word)} -> {g}')
    if args.format == 'json':
        print(dumps({
            'schema': 'tgtools.identity/1',
            'word': word_str(word),
            'identity': result,
            'isometry': g.to_dict(),
        }))
    else:
        print('true' if result else 'false')
    return 0


def run_tcoords(args: Namespace, logger: Logger) -> int:
    word = _read_word(args)
    try:
        coords = t_coordinates(from_word(word))
    except (NotATranslation, NotInTranslationSubgroup) as e:
        raise UsageError('--word', str(e))
    if args.format == 'json':
        print(dumps({
            'schema': 'tgtools.tcoords/1',
            'word': word_str(word),
            'tcoords': coords.to_list(),
            't_length': coords.t_length(),
        }))
    else:
        print(dumps(coords.to_list(), separators=(',', ':')))
    return 0


COMMANDS = {
    'identity': (
        add_arguments_identity,
        run_identity,
        'decide whether a word is the identity'
    ),
    'tcoords': (
        add_arguments_tcoords,
        run_tcoords,
        'coordinates of a translation on the conjugates of t1'
    ),
}


def _cli():
    from tgtools.__main__ import main
    return main(prog='tgisometry', commands=COMMANDS)


if __name__ == '__main__':
    exit(_cli())
