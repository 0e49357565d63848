from argparse import Namespace
from logging import Logger
from json import dumps

from tgtools.Args import UsageError
from tgtools.tgwords import (
    BadSymbol,
    word_str,
)
from tgtools.tgisometry import TriangleShape
from tgtools.tgrender.tgChain import unfold
from tgtools.tgrender.tgSVG import (
    Style,
    to_svg,
)
from tgtools.tgrender.Args import add_arguments


def run_render(args: Namespace, logger: Logger) -> int:
    try:
        shape = TriangleShape(args.alpha2, args.alpha3)
    except ValueError as e:
        raise UsageError('--alpha2/--alpha3', str(e))
    if args.stroke <= 0:
        raise UsageError('--stroke', f'must be positive, got {args.stroke}')
    try:
        chain = unfold(args.word, shape, tvectors=not args.no_tvectors)
    except BadSymbol as e:
        raise UsageError('--word', str(e))
    logger.info(
        f'{len(chain)} triangles, '
        f'{"closed" if chain.is_closed() else "open"} chain'
    )
    svg = to_svg(
        chain,
        Style(stroke=args.stroke, tvectors=not args.no_tvectors)
    )
    try:
        with open(args.out, 'w') as f:
            f.write(svg)
    except OSError as e:
        raise UsageError('--out', str(e))
    logger.debug(f'SVG written to {args.out}')
    if args.format == 'json':
        print(dumps({
            'schema': 'tgtools.render/1',
            'word': word_str(chain.word),
            'alpha2': shape.alpha2,
            'alpha3': shape.alpha3,
            'triangles': len(chain),
            'closed': chain.is_closed(),
            'out': args.out,
        }))
    return 0


COMMANDS = {
    'render': (
        add_arguments,
        run_render,
        'draw the chain of reflected triangles of a word'
    ),
}


def _cli():
    from tgtools.__main__ import main
    return main(prog='tgrender', commands=COMMANDS)


if __name__ == '__main__':
    exit(_cli())
