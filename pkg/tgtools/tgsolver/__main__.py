from argparse import Namespace
from logging import Logger
from json import (
    dumps,
    load,
    JSONDecodeError,
)
from pathlib import Path
from typing import (
    List,
    Tuple,
)

from brs_utils import (
    print_OK_adv as print_OK,
    print_title_adv as print_title
)
from tgtools.Args import UsageError
from tgtools.tglibs import TCoords
from tgtools.tgwords import (
    BadSymbol,
    to_word,
    word_str,
)
from tgtools.tgisometry import (
    NotATranslation,
    NotInTranslationSubgroup,
    from_word,
    t_coordinates,
)
from tgtools.tgrender.tgSVG import zeroset_to_svg
from tgtools.tgsolver.tgExpSum import expsum_of
from tgtools.tgsolver.tgZeroSet import zero_set
from tgtools.tgsolver.Args import (
    DEFAULT_CURVE_FRACTION,
    add_arguments,
)


def _word_tcoords(word: str) -> TCoords:
    return t_coordinates(from_word(to_word(word)))


def read_witnesses(path: str) -> List[Tuple[str, TCoords]]:
    """(word, tcoords) pairs from a search report, a single
    witness or a bare TCoords list. The word is '' when the
    file gives coordinates only."""
    try:
        with open(path) as f:
            data = load(f)
    except (OSError, JSONDecodeError) as e:
        raise UsageError('--witness', str(e))
    if isinstance(data, dict) and 'witnesses' in data:
        items = data['witnesses']
    elif isinstance(data, dict):
        items = [data]
    elif isinstance(data, list):
        items = [{'tcoords': data}]
    else:
        raise UsageError('--witness', 'unrecognised JSON document')
    out = []
    try:
        for item in items:
            word = item.get('word', '')
            if 'tcoords' in item:
                coords = TCoords.from_list(item['tcoords'])
            else:
                coords = _word_tcoords(word)
            out.append((word, coords))
    except (
        AttributeError, TypeError, ValueError,
        BadSymbol, NotATranslation, NotInTranslationSubgroup
    ) as e:
        raise UsageError('--witness', f'bad witness entry: {e}')
    return out


def _svg_path(base: str, k: int, total: int) -> Path:
    p = Path(base)
    if total == 1:
        return p
    return p.with_name(f'{p.stem}-{k + 1}{p.suffix or ".svg"}')


def run_solve(args: Namespace, logger: Logger) -> int:
    if args.grid < 64:
        raise UsageError('--grid', f'must be at least 64, got {args.grid}')
    if args.tol <= 0:
        raise UsageError('--tol', f'must be positive, got {args.tol}')
    if args.witness is not None:
        witnesses = read_witnesses(args.witness)
    else:
        try:
            witnesses = [(word_str(to_word(args.word)), _word_tcoords(args.word))]
        except (BadSymbol, NotATranslation, NotInTranslationSubgroup) as e:
            raise UsageError('--word', str(e))

    results = []
    for k, (word, coords) in enumerate(witnesses):
        f = expsum_of(coords)
        print_title(
            txt=f'Solving {word or coords.to_list()}',
            logger=logger,
            waiting=True
        )
        zs = zero_set(
            f,
            grid=args.grid,
            tol=args.tol,
            max_iter=args.max_iter,
            inset=args.inset,
            curve_fraction=DEFAULT_CURVE_FRACTION,
            keep_contours=args.svg is not None,
            logger=logger
        )
        print_OK(logger)
        if args.svg is not None:
            path = _svg_path(args.svg, k, len(witnesses))
            try:
                path.write_text(zeroset_to_svg(zs))
            except OSError as e:
                raise UsageError('--svg', str(e))
            logger.debug(f'overlay written to {path}')
        results.append({
            'word': word,
            'tcoords': coords.to_list(),
            'expsum': f.to_str(),
            'zeroset': zs.to_dict(),
        })

    if args.format == 'json':
        print(dumps({'schema': 'tgtools.solve/1', 'results': results}))
    else:
        for r in results:
            zs = r['zeroset']
            print(
                f"{r['word'] or r['tcoords']}: {r['expsum']} = 0, "
                f"{len(zs['curves'])} curve(s), {len(zs['points'])} point(s)"
            )
            for a2, a3, res in zs['points']:
                print(f'  ({a2:.10f}, {a3:.10f})  |f| = {res:.1e}')
    return 0


COMMANDS = {
    'solve': (
        add_arguments,
        run_solve,
        'zero set of the exponential sum of a relation'
    ),
}


def _cli():
    from tgtools.__main__ import main
    return main(prog='tgsolver', commands=COMMANDS)


if __name__ == '__main__':
    exit(_cli())
