#
# For licensing see accompanying LICENSE file.
#

'''
solve / check / resolvent / split / martinelli

every command takes parsed coefficients and the run config and returns
(exit code, report dict); printing happens in the caller.
'''

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

from loguru import logger

from sextic.cfg.constants import (
    EXIT_NOT_SOLVABLE,
    EXIT_OK,
    QUINTIC_N_COEFFS,
    SEXTIC_N_COEFFS,
)
from sextic.poly.core import Tolerance, canonical_sort
from sextic.solvers.martinelli import QuinticDepressed, factor_roots, martinelli_coeffs, split_quintic_auto
from sextic.solvers.milanez import (
    NotSolvable,
    SexticMonic,
    forward,
    normalize_sextic,
    params_from_split,
    recover,
    resolvent_quintic,
    solve_sextic,
)
from sextic.utils.errors import InputError
from sextic.utils.general import complex_to_dict


def parse_coefficients(tokens: Sequence[str], count: int) -> List[float]:
    """ Decimal or p/q tokens, converted to binary64 """
    if len(tokens) != count:
        raise InputError(f'expected {count} coefficients, got {len(tokens)}: {" ".join(tokens)}')
    values = []
    for token in tokens:
        try:
            value = float(Fraction(token))
        except (ValueError, ZeroDivisionError, OverflowError) as e:
            raise InputError(f'cannot parse coefficient {token!r}: {e}') from e
        if not math.isfinite(value):
            raise InputError(f'coefficient {token!r} is not finite in binary64')
        values.append(value)
    return values


def _sextic(tokens) -> Tuple[List[float], SexticMonic]:
    values = parse_coefficients(tokens, SEXTIC_N_COEFFS)
    if values[0] == 0.0:
        raise InputError('leading coefficient of the sextic must be nonzero')
    return values, normalize_sextic(values)


def _quintic(tokens) -> Tuple[List[float], QuinticDepressed]:
    values = parse_coefficients(tokens, QUINTIC_N_COEFFS)
    return values, QuinticDepressed(*values)


def _params(params):
    return {name: complex_to_dict(getattr(params, name)) for name in 'abcd'}


def _resolvent(q: QuinticDepressed):
    # x^4 .. x^0 coefficients below the monic leading term
    return [complex_to_dict(c) for c in (0.0, q.C, q.D, q.E, q.F)]


def _roots(values):
    return [complex_to_dict(z) for z in values]


def _not_solvable(values, result: NotSolvable):
    logger.warning(f'not Milanez-solvable (branch tolerance ratios {list(result.branch_residuals)})')
    return EXIT_NOT_SOLVABLE, {
        'status': 'not_solvable',
        'input': values,
        'message': 'not Milanez-solvable',
    }


def cmd_solve(tokens, cfg):
    values, sextic = _sextic(tokens)
    result = solve_sextic(sextic, Tolerance.from_cfg(cfg.recover), cfg)
    if isinstance(result, NotSolvable):
        return _not_solvable(values, result)
    return EXIT_OK, {
        'status': 'ok',
        'input': values,
        'params': _params(result.params),
        'resolvent': _resolvent(result.resolvent),
        'quad_roots': _roots(result.quad_roots),
        'cubic_roots': _roots(result.cubic_roots),
        'roots': _roots(result.roots),
        'residual_max': result.residual_max,
    }


def cmd_check(tokens, cfg):
    values, sextic = _sextic(tokens)
    params = recover(sextic, Tolerance.from_cfg(cfg.recover))
    if isinstance(params, NotSolvable):
        return _not_solvable(values, params)
    return EXIT_OK, {'status': 'ok', 'input': values, 'params': _params(params)}


def cmd_resolvent(tokens, cfg):
    values, sextic = _sextic(tokens)
    params = recover(sextic, Tolerance.from_cfg(cfg.recover))
    if isinstance(params, NotSolvable):
        return _not_solvable(values, params)
    return EXIT_OK, {
        'status': 'ok',
        'input': values,
        'params': _params(params),
        'resolvent': _resolvent(resolvent_quintic(params)),
    }


def cmd_split(tokens, cfg):
    values, quintic = _quintic(tokens)
    factors = split_quintic_auto(quintic, cfg)
    quad_roots, cubic_roots = factor_roots(factors)
    lifted = params_from_split(factors)
    logger.info(f'lifted sextic: {forward(lifted).polynomial}')
    return EXIT_OK, {
        'status': 'ok',
        'input': values,
        'quintic': _resolvent(quintic),
        'k': complex_to_dict(factors.k),
        'quadratic': _roots((1.0, -factors.k, factors.n)),
        'cubic': _roots((1.0, factors.k, factors.l, factors.m)),
        'product_residual': factors.product_residual,
        'quad_roots': _roots(quad_roots),
        'cubic_roots': _roots(cubic_roots),
        'roots': _roots(canonical_sort(quad_roots + cubic_roots)),
        'lifted_params': _params(lifted),
    }


def cmd_martinelli(tokens, cfg):
    values, quintic = _quintic(tokens)
    poly = martinelli_coeffs(quintic)
    return EXIT_OK, {
        'status': 'ok',
        'input': values,
        'ascending': _roots(poly.coeffs),
        'descending': _roots(poly.descending()),
    }


COMMANDS = {
    'solve': cmd_solve,
    'check': cmd_check,
    'resolvent': cmd_resolvent,
    'split': cmd_split,
    'martinelli': cmd_martinelli,
}
