#
# For licensing see accompanying LICENSE file.
#

'''
pair-sum polynomial of a depressed quintic and quadratic x cubic splitting

the degree-10 polynomial in k built here vanishes exactly at the ten sums
r_i + r_j of pairs of roots of the quintic. any such k gives the split
    x^5 + Cx^3 + Dx^2 + Ex + F = (x^2 - kx + n)(x^3 + kx^2 + lx + m)
with n the product of the paired roots, l = C - n + k^2 and m = F / n.
'''

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from sextic.cfg.config import cfg as default_cfg
from sextic.poly.core import (
    Polynomial,
    Tolerance,
    canonical_key,
    canonical_sort,
    max_coeff_error,
    max_coeff_violation,
    monic_normalize,
    multiply,
)
from sextic.poly.oracle import find_roots
from sextic.solvers.closed_form import CubicMonic, QuadraticMonic, solve_cubic, solve_quadratic
from sextic.utils.errors import DegenerateSplitError, FactorMismatchError, SexticError, SplitFailedError


@dataclass(frozen=True)
class QuinticDepressed:
    """ x^5 + C*x^3 + D*x^2 + E*x + F """
    C: complex
    D: complex
    E: complex
    F: complex

    def __post_init__(self):
        for name in ('C', 'D', 'E', 'F'):
            value = complex(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f'quintic coefficient {name} must be finite, got {value}')
            object.__setattr__(self, name, value)

    @classmethod
    def from_polynomial(cls, p: Polynomial, atol: float = 1e-10):
        if p.degree != 5:
            raise ValueError(f'expected a quintic, got degree {p.degree}')
        p = monic_normalize(p)
        if abs(p[4]) > atol * max(1.0, float(np.max(np.abs(p.coeffs)))):
            raise ValueError(f'quintic is not depressed: x^4 coefficient is {p[4]}')
        return cls(C=p[3], D=p[2], E=p[1], F=p[0])

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial([self.F, self.E, self.D, self.C, 0.0, 1.0])

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.C), abs(self.D), abs(self.E), abs(self.F))


@dataclass(frozen=True)
class SplitFactors:
    """ (x^2 - k*x + n)(x^3 + k*x^2 + l*x + m) """
    k: complex
    n: complex
    l: complex
    m: complex
    product_residual: float = 0.0

    @property
    def quadratic(self) -> Polynomial:
        return Polynomial([self.n, -self.k, 1.0])

    @property
    def cubic(self) -> Polynomial:
        return Polynomial([self.m, self.l, self.k, 1.0])

    @property
    def product(self) -> Polynomial:
        return multiply(self.quadratic, self.cubic)


def degeneracy_threshold(k: complex, q: QuinticDepressed, degeneracy: float) -> float:
    return degeneracy * (1.0 + abs(k) ** 3) * q.scale


def compute_n(k: complex, q: QuinticDepressed, degeneracy: float = 1e-12) -> complex:
    """ Product of the two quintic roots summing to k: (2(k^5+Ck^3+Dk^2+Ek) - F) / (5k^3 + Ck - D) """
    k = complex(k)
    C, D, E, F = q.C, q.D, q.E, q.F
    den = 5.0 * k ** 3 + C * k - D
    if abs(den) <= degeneracy_threshold(k, q, degeneracy):
        raise DegenerateSplitError(f'n denominator vanishes at k={k} (|5k^3+Ck-D| = {abs(den):.3e})')
    return (2.0 * (k ** 5 + C * k ** 3 + D * k ** 2 + E * k) - F) / den


def martinelli_coeffs(q: QuinticDepressed) -> Polynomial:
    """ Monic degree-10 pair-sum polynomial, expanded form """
    C, D, E, F = q.C, q.D, q.E, q.F
    return Polynomial([
        -F * F + F * D * C - D * D * E,
        4 * E * F - F * C * C - D ** 3,
        7 * D * F - C * D * D - 4 * E * E + E * C * C,
        D * C * C - 4 * D * E - 4 * C * F,
        C ** 3 - D * D - 2 * C * E,
        2 * D * C - 11 * F,
        3 * C * C - 3 * E,
        D,
        3 * C,
        0.0,
        1.0,
    ])


def martinelli_rational_eval(k: complex, q: QuinticDepressed) -> complex:
    """ The pair-sum polynomial at k, evaluated in its unexpanded product form """
    k = complex(k)
    C, D, E, F = q.C, q.D, q.E, q.F
    twice_n_numerator = 2.0 * (k ** 5 + C * k ** 3 + D * k ** 2 + E * k) - F
    second = 13 * k ** 5 + 6 * C * k ** 3 - 5 * D * k ** 2 + (-2 * E + C * C) * k + F - D * C
    quartic = k ** 4 + C * k ** 2 + D * k + E
    n_denominator = 5 * k ** 3 + C * k - D
    return twice_n_numerator * second - quartic * n_denominator ** 2


def split_quintic(
    q: QuinticDepressed,
    k: complex,
    tol: Tolerance = Tolerance(),
    degeneracy: float = 1e-12,
) -> SplitFactors:
    """
    Split q using the pair-sum root k. The product of the factors is checked
    against q; FactorMismatchError means k was not a genuine pair sum.
    """
    k = complex(k)
    n = compute_n(k, q, degeneracy)
    l = q.C - n + k * k
    threshold = degeneracy_threshold(k, q, degeneracy)
    if abs(n) > threshold:
        m = q.F / n
    elif abs(q.F) <= threshold:
        # zero root in the quadratic: take m from E = n*l - k*m instead of F = m*n
        if abs(k) <= threshold:
            raise DegenerateSplitError(f'n and k both vanish at k={k}, cannot recover m')
        m = (n * l - q.E) / k
    else:
        raise DegenerateSplitError(f'n vanishes at k={k} while F={q.F} does not')

    factors = SplitFactors(k=k, n=n, l=l, m=m)
    product = factors.product
    residual = max_coeff_error(product, q.polynomial)
    if max_coeff_violation(product, q.polynomial, tol.rtol, tol.atol) > 1.0:
        raise FactorMismatchError(
            f'factor product does not reproduce the quintic at k={k} (residual {residual:.3e})',
            residual=residual,
        )
    return SplitFactors(k=k, n=n, l=l, m=m, product_residual=residual)


def _try_split(q, k, tol, degeneracy) -> Tuple[complex, Optional[SplitFactors], str]:
    try:
        return k, split_quintic(q, k, tol, degeneracy), 'ok'
    except SexticError as e:
        return k, None, str(e)


def split_candidates(q: QuinticDepressed, cfg=None) -> List[Tuple[complex, Optional[SplitFactors], str]]:
    """ Try every pair-sum root of q; one (k, factors or None, reason) row per root """
    cfg = default_cfg if cfg is None else cfg
    tol = Tolerance.from_cfg(cfg.tolerance)
    ks = find_roots(martinelli_coeffs(q), tol=cfg.oracle.tol, max_iter=cfg.oracle.max_iter)

    rows = Parallel(n_jobs=cfg.martinelli.n_jobs)(
        delayed(_try_split)(q, k, tol, cfg.martinelli.degeneracy) for k in ks
    )
    for k, factors, reason in rows:
        if factors is None:
            logger.debug(f'split candidate k={k:.6g} rejected: {reason}')
        else:
            logger.debug(f'split candidate k={k:.6g} residual {factors.product_residual:.3e}')
    return rows


def split_quintic_auto(q: QuinticDepressed, cfg=None) -> SplitFactors:
    """ Lowest product residual split over all ten pair-sum roots, ties by canonical order of k """
    rows = split_candidates(q, cfg)
    valid = [factors for _, factors, _ in rows if factors is not None]
    if len(valid) == 0:
        raise SplitFailedError(
            f'no pair-sum root splits x^5 + ({q.C})x^3 + ({q.D})x^2 + ({q.E})x + ({q.F})',
            candidates=[(k, reason) for k, _, reason in rows],
        )
    valid.sort(key=lambda f: (f.product_residual, canonical_key(f.k)))
    best = valid[0]
    logger.debug(f'{len(valid)}/{len(rows)} candidates split the quintic, using k={best.k:.6g}')
    return best


def factor_roots(factors: SplitFactors) -> Tuple[Tuple[complex, complex], Tuple[complex, complex, complex]]:
    quad_roots = solve_quadratic(QuadraticMonic(a5=-factors.k, a6=factors.n))
    cubic_roots = solve_cubic(CubicMonic(a2=factors.k, a3=factors.l, a4=factors.m))
    return quad_roots, cubic_roots


def solve_quintic(q: QuinticDepressed, cfg=None) -> Tuple[complex, ...]:
    """ The five roots of a 2x3-splittable quintic from its split, canonical order """
    quad_roots, cubic_roots = factor_roots(split_quintic_auto(q, cfg))
    return canonical_sort(quad_roots + cubic_roots)
