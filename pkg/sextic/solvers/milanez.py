#
# For licensing see accompanying LICENSE file.
#

'''
sextics whose roots are the sums u + v of a root u of x^2 - ax + b and a root
v of x^3 + ax^2 + cx + d

forward:  (a, b, c, d) -> sextic coefficients
recover:  sextic coefficients -> (a, b, c, d) or NotSolvable
solve:    recover, solve both factors in closed form, add the roots pairwise
'''

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from sextic.cfg.config import cfg as default_cfg
from sextic.poly.core import (
    Number,
    Polynomial,
    Tolerance,
    canonical_key,
    canonical_sort,
    max_coeff_violation,
    residual,
)
from sextic.solvers.closed_form import CubicMonic, QuadraticMonic, solve_cubic, solve_quadratic
from sextic.solvers.martinelli import QuinticDepressed, SplitFactors, split_quintic_auto
from sextic.utils.errors import ResidualError


@dataclass(frozen=True)
class MilanezParams:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ('a', 'b', 'c', 'd'):
            value = complex(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f'parameter {name} must be finite, got {value}')
            object.__setattr__(self, name, value)

    @property
    def quadratic(self) -> QuadraticMonic:
        return QuadraticMonic(a5=-self.a, a6=self.b)

    @property
    def cubic(self) -> CubicMonic:
        return CubicMonic(a2=self.a, a3=self.c, a4=self.d)


@dataclass(frozen=True)
class SexticMonic:
    """ x^6 + p1*x^5 + p2*x^4 + p3*x^3 + p4*x^2 + p5*x + p6 """
    p1: complex
    p2: complex
    p3: complex
    p4: complex
    p5: complex
    p6: complex

    def __post_init__(self):
        for name in ('p1', 'p2', 'p3', 'p4', 'p5', 'p6'):
            value = complex(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f'sextic coefficient {name} must be finite, got {value}')
            object.__setattr__(self, name, value)

    @property
    def coeffs(self) -> Tuple[complex, ...]:
        """ p1..p6 """
        return (self.p1, self.p2, self.p3, self.p4, self.p5, self.p6)

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial.from_descending((1.0,) + self.coeffs)


@dataclass(frozen=True)
class NotSolvable:
    """ No (a, b, c, d) reproduces the sextic; one residual per branch of the b quadratic """
    sextic: SexticMonic
    branch_residuals: Tuple[float, ...] = field(default_factory=tuple)

    def __bool__(self):
        return False


@dataclass(frozen=True)
class SexticSolution:
    params: MilanezParams
    resolvent: QuinticDepressed
    quad_roots: Tuple[complex, complex]
    cubic_roots: Tuple[complex, complex, complex]
    roots: Tuple[complex, ...]
    residual_max: float


def normalize_sextic(coeffs: Sequence[Number]) -> SexticMonic:
    """ Seven coefficients in descending degree order, scaled to a monic sextic """
    if len(coeffs) != 7:
        raise ValueError(f'a sextic needs 7 coefficients, got {len(coeffs)}')
    lead = complex(coeffs[0])
    if lead == 0:
        raise ValueError('leading coefficient of the sextic must be nonzero')
    return SexticMonic(*[complex(c) / lead for c in coeffs[1:]])


def forward(params: MilanezParams) -> SexticMonic:
    a, b, c, d = params.a, params.b, params.c, params.d
    return SexticMonic(
        p1=-a,
        p2=-a * a + 3 * b + 2 * c,
        p3=a ** 3 - 2 * a * b - 2 * a * c + 2 * d,
        p4=-a * a * b + c * c + 3 * b * b - a * d,
        p5=-a * c * c - a * b * b + a * a * d + 2 * a * b * c - 6 * b * d + 2 * d * c,
        p6=a * d * b - a * d * c - 2 * b * b * c + d * d + b ** 3 + b * c * c,
    )


def quartic_cofactor(params: MilanezParams) -> Polynomial:
    """ The degree-4 factor of the pair-sum polynomial, holding the within-factor pair sums """
    a, c, d = params.a, params.c, params.d
    return Polynomial([a * d - a * a * c, -a ** 3 - d, c - a * a, a, 1.0])


def resolvent_quintic(params: MilanezParams) -> QuinticDepressed:
    a, b, c, d = params.a, params.b, params.c, params.d
    return QuinticDepressed(C=-a * a + c + b, D=a * b + d - a * c, E=b * c - a * d, F=b * d)


def _linear_in_b(s: SexticMonic, a: complex) -> Tuple[Polynomial, Polynomial]:
    """ c(b) from the p2 equation and d(b) from the p3 equation, both linear in b """
    b = Polynomial([0.0, 1.0])
    c = (s.p2 + a * a - 3 * b) * 0.5
    d = (s.p3 - a ** 3 + 2 * a * b + 2 * a * c) * 0.5
    return c, d


def recover(s: SexticMonic, tol: Tolerance = Tolerance(rtol=1e-8, atol=1e-10)) -> Union[MilanezParams, NotSolvable]:
    """
    Parameters (a, b, c, d) whose forward image matches s within tol.

    a = -p1; c and d are linear in b through the p2 and p3 equations; the p4
    equation is then a quadratic in b with leading coefficient 21/4. Both of
    its roots are tried, and a candidate is kept when the forward image
    matches s in every coefficient.
    """
    a = -s.p1
    c_of_b, d_of_b = _linear_in_b(s, a)
    b = Polynomial([0.0, 1.0])
    p4_equation = -a * a * b + c_of_b * c_of_b + 3 * b * b - a * d_of_b - s.p4

    quadratic = QuadraticMonic(a5=p4_equation[1] / p4_equation[2], a6=p4_equation[0] / p4_equation[2])
    target = s.polynomial
    passing = []
    branch_residuals = []
    for b_value in solve_quadratic(quadratic):
        params = MilanezParams(a=a, b=b_value, c=c_of_b(b_value), d=d_of_b(b_value))
        violation = max_coeff_violation(forward(params).polynomial, target, tol.rtol, tol.atol)
        branch_residuals.append(violation)
        logger.debug(f'recover: branch b={b_value:.6g} tolerance ratio {violation:.3e}')
        if violation <= 1.0:
            passing.append((violation, canonical_key(b_value), params))

    if len(passing) == 0:
        return NotSolvable(sextic=s, branch_residuals=tuple(branch_residuals))
    passing.sort(key=lambda item: item[:2])
    return passing[0][2]


def roots_from_factors(quad_roots: Sequence[complex], cubic_roots: Sequence[complex]) -> Tuple[complex, ...]:
    if len(quad_roots) != 2 or len(cubic_roots) != 3:
        raise ValueError(f'expected 2 and 3 factor roots, got {len(quad_roots)} and {len(cubic_roots)}')
    return canonical_sort(u + v for u in quad_roots for v in cubic_roots)


def solve_sextic(s: SexticMonic, tol: Tolerance = None, cfg=None) -> Union[SexticSolution, NotSolvable]:
    """
    Closed-form roots of a sextic satisfying the coefficient relation.
    Residuals are measured against s itself; exceeding cfg.solve.residual_tol
    raises ResidualError.
    """
    cfg = default_cfg if cfg is None else cfg
    tol = Tolerance.from_cfg(cfg.recover) if tol is None else tol

    params = recover(s, tol)
    if isinstance(params, NotSolvable):
        return params

    quad_roots = solve_quadratic(params.quadratic)
    cubic_roots = solve_cubic(params.cubic)
    roots = roots_from_factors(quad_roots, cubic_roots)
    target = s.polynomial
    residual_max = max(residual(target, r) for r in roots)
    if residual_max > cfg.solve.residual_tol:
        raise ResidualError(
            f'sextic residual {residual_max:.3e} exceeds {cfg.solve.residual_tol:.1e} '
            f'for recovered params {params}',
            residual_max=residual_max, tol=cfg.solve.residual_tol,
        )
    return SexticSolution(
        params=params,
        resolvent=resolvent_quintic(params),
        quad_roots=canonical_sort(quad_roots),
        cubic_roots=canonical_sort(cubic_roots),
        roots=roots,
        residual_max=residual_max,
    )


def solve_sextics(sextics: Sequence[SexticMonic], tol: Tolerance = None, cfg=None, n_jobs: int = None) -> List:
    """ solve_sextic over independent inputs; results keep input order """
    cfg = default_cfg if cfg is None else cfg
    n_jobs = cfg.solve.n_jobs if n_jobs is None else n_jobs
    return Parallel(n_jobs=n_jobs)(delayed(solve_sextic)(s, tol, cfg) for s in sextics)


def params_from_split(factors: SplitFactors) -> MilanezParams:
    """ A split quintic is the resolvent of the sextic with (a, b, c, d) = (k, n, l, m) """
    return MilanezParams(a=factors.k, b=factors.n, c=factors.l, d=factors.m)


def lift_resolvent(q: QuinticDepressed, cfg=None) -> SexticMonic:
    return forward(params_from_split(split_quintic_auto(q, cfg)))
