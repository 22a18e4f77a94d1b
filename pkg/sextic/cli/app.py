#
# For licensing see accompanying LICENSE file.
#

import argparse

from loguru import logger

from sextic.cfg.config import cfg as default_cfg
from sextic.cfg.constants import EXIT_NUMERICAL_FAILURE, EXIT_PARSE_ERROR
from sextic.cli.commands import COMMANDS
from sextic.cli.report import render
from sextic.utils.config import get_cfg
from sextic.utils.errors import InputError, SexticError
from sextic.utils.general import get_logger


USAGE = '''main.py <verb> [--json] [--rtol X] [--atol X] [--precision N] [--cfg_file F] coeffs... [key=value ...]

  solve      a0 .. a6   solve a sextic (descending degree) in closed form
  check      a0 .. a6   recover (a, b, c, d) or report not solvable
  resolvent  a0 .. a6   print the quintic resolvent
  split      C D E F    split x^5 + Cx^3 + Dx^2 + Ex + F into quadratic x cubic
  martinelli C D E F    print the degree-10 pair-sum polynomial
'''


class ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which is reserved for "not solvable"
    def error(self, message):
        raise InputError(message)


def build_parser():
    parser = ArgumentParser(prog='main.py', usage=USAGE)
    parser.add_argument('verb', choices=sorted(COMMANDS.keys()), help='command to run')
    parser.add_argument('--json', action='store_true', help='print a json report')
    parser.add_argument('--rtol', type=float, default=None, help='relative tolerance override')
    parser.add_argument('--atol', type=float, default=None, help='absolute tolerance override')
    parser.add_argument('--precision', type=int, default=None, help='digits in text output (1-17)')
    parser.add_argument('--cfg_file', default='', help='yaml preset merged over the defaults')
    return parser


def split_extras(extras):
    """ key=value tokens are config overrides, everything else is a coefficient """
    dotlist = [t for t in extras if '=' in t]
    tokens = [t for t in extras if '=' not in t]
    unknown = [t for t in tokens if t.startswith('--')]
    if len(unknown) > 0:
        raise InputError(f'unrecognized arguments: {" ".join(unknown)}')
    return tokens, dotlist


def run(argv=None):
    get_logger(default_cfg)
    try:
        args, extras = build_parser().parse_known_args(argv)
        tokens, dotlist = split_extras(extras)
        cfg = get_cfg(
            default_cfg, args.cfg_file, dotlist,
            **{
                'tolerance.rtol': args.rtol, 'recover.rtol': args.rtol,
                'tolerance.atol': args.atol, 'recover.atol': args.atol,
                'output.precision': args.precision,
                'output.format': 'json' if args.json else None,
            },
        )
    except InputError as e:
        logger.error(f'parse error: {e}')
        return EXIT_PARSE_ERROR

    get_logger(cfg, default_cfg)
    try:
        code, report = COMMANDS[args.verb](tokens, cfg)
    except InputError as e:
        logger.error(f'parse error: {e}')
        return EXIT_PARSE_ERROR
    except (SexticError, ValueError) as e:
        logger.error(f'numerical failure: {e}')
        code, report = EXIT_NUMERICAL_FAILURE, {'status': 'error', 'input': tokens, 'message': str(e)}

    print(render(report, cfg))
    return code
