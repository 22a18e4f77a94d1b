#
# For licensing see accompanying LICENSE file.
#

import itertools

import pytest

from conftest import COS_2PI_9, SQRT2
from sextic.cfg.config import cfg as default_cfg
from sextic.poly.core import Polynomial, coeffs_close, from_roots, residual
from sextic.poly.oracle import find_roots, multiset_match
from sextic.solvers.martinelli import (
    QuinticDepressed,
    SplitFactors,
    compute_n,
    factor_roots,
    martinelli_coeffs,
    martinelli_rational_eval,
    solve_quintic,
    split_candidates,
    split_quintic,
    split_quintic_auto,
)
from sextic.utils.config import get_cfg
from sextic.utils.errors import DegenerateSplitError, FactorMismatchError, SplitFailedError


EQ17 = QuinticDepressed(C=-1, D=1, E=-6, F=2)
X5_MINUS_X = QuinticDepressed(C=0, D=0, E=-1, F=0)
X5 = QuinticDepressed(C=0, D=0, E=0, F=0)


def desc(*coeffs):
    return Polynomial.from_descending(coeffs)


def test_quintic_from_polynomial():
    assert QuinticDepressed.from_polynomial(desc(2, 0, -2, 2, -12, 4)) == EQ17
    with pytest.raises(ValueError):
        QuinticDepressed.from_polynomial(desc(1, 1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        QuinticDepressed.from_polynomial(desc(1, 0, 0, 0))


@pytest.mark.parametrize('q, k, expected', [
    (X5_MINUS_X, 1 + 1j, 1j),
    (EQ17, 0, 2),
    (EQ17, complex(COS_2PI_9, SQRT2), SQRT2 * COS_2PI_9 * 1j),
])
def test_compute_n(q, k, expected):
    assert compute_n(k, q) == pytest.approx(expected, rel=1e-9, abs=1e-12)


def test_compute_n_degenerate_denominator():
    with pytest.raises(DegenerateSplitError):
        compute_n(0, X5_MINUS_X)


def test_compute_n_is_product_of_paired_roots(complex_sampler):
    for _ in range(20):
        roots = [complex_sampler.scalar() for _ in range(4)]
        roots.append(-sum(roots))
        q = QuinticDepressed.from_polynomial(from_roots(roots))
        k = roots[0] + roots[1]
        assert compute_n(k, q) == pytest.approx(roots[0] * roots[1], rel=1e-6, abs=1e-6)


def test_martinelli_coeffs_examples():
    assert martinelli_coeffs(X5) == Polynomial.monomial(10)
    assert martinelli_coeffs(EQ17) == desc(1, 0, -3, 1, 21, -24, -14, 33, -135, -51, 0)
    assert martinelli_coeffs(QuinticDepressed(1, 0, 0, 0)) == desc(1, 0, 3, 0, 3, 0, 1, 0, 0, 0, 0)


def test_martinelli_rational_eval_examples():
    assert martinelli_rational_eval(1, X5) == 1
    assert martinelli_rational_eval(0, EQ17) == 0


def test_rational_form_matches_expanded_form(complex_sampler):
    for _ in range(100):
        q = complex_sampler.quintic()
        k = complex_sampler.scalar()
        expanded = martinelli_coeffs(q)(k)
        bound = 1e-8 * (1 + abs(k)) ** 10 * q.scale
        assert abs(martinelli_rational_eval(k, q) - expanded) <= bound


def test_pair_sums_are_martinelli_roots(sampler):
    for _ in range(50):
        q = sampler.quintic()
        M = martinelli_coeffs(q)
        roots = find_roots(q.polynomial).roots
        for r_i, r_j in itertools.combinations(roots, 2):
            assert residual(M, r_i + r_j) <= 1e-6


def test_split_worked_quintic():
    factors = split_quintic(EQ17, 0)
    assert isinstance(factors, SplitFactors)
    assert factors.quadratic == desc(1, 0, 2)
    assert coeffs_close(factors.cubic, desc(1, 0, -3, 1))
    assert factors.product_residual < 1e-12


def test_split_zero_constant_quintic():
    factors = split_quintic(X5_MINUS_X, 1 + 1j)
    assert factors.n == pytest.approx(1j)
    assert coeffs_close(factors.quadratic, desc(1, -(1 + 1j), 1j))
    assert coeffs_close(factors.cubic, desc(1, 1 + 1j, 1j, 0))


def test_split_zero_root_in_quadratic():
    # pairing 0 with 1 gives n = 0, m comes from the x coefficient
    factors = split_quintic(X5_MINUS_X, 1)
    assert factors.n == 0
    assert factors.m == pytest.approx(1)
    assert coeffs_close(factors.product, X5_MINUS_X.polynomial)


def test_split_rejects_non_pair_sum():
    with pytest.raises(FactorMismatchError) as e:
        split_quintic(EQ17, 7)
    assert e.value.residual > 1e-3


def test_split_quintic_auto_worked_quintic():
    factors = split_quintic_auto(EQ17)
    assert coeffs_close(factors.product, EQ17.polynomial)
    assert factors.product_residual < 1e-9


def test_split_quintic_auto_regroups_roots():
    factors = split_quintic_auto(X5_MINUS_X)
    assert coeffs_close(factors.product, X5_MINUS_X.polynomial)
    quad_roots, cubic_roots = factor_roots(factors)
    assert multiset_match(quad_roots + cubic_roots, [0, 1, -1, 1j, -1j], 1e-9)


def test_split_quintic_auto_degenerate():
    with pytest.raises(SplitFailedError) as e:
        split_quintic_auto(X5)
    assert len(e.value.candidates) == 10


def test_split_candidates_reports_every_pair_sum():
    rows = split_candidates(EQ17)
    assert len(rows) == 10
    assert all(factors is not None for _, factors, _ in rows)


def test_split_candidates_parallel_matches_serial():
    cfg = get_cfg(default_cfg, dotlist=['martinelli.n_jobs=2'])
    serial = split_quintic_auto(EQ17)
    parallel = split_quintic_auto(EQ17, cfg)
    assert parallel.k == serial.k


def test_split_of_random_splittable_quintics(sampler):
    for _ in range(20):
        q = sampler.quintic()
        factors = split_quintic_auto(q)
        assert coeffs_close(factors.product, q.polynomial)
        assert multiset_match(solve_quintic(q), find_roots(q.polynomial), 1e-6)


def test_solve_quintic_worked_quintic():
    roots = solve_quintic(EQ17)
    expected = [SQRT2 * 1j, -SQRT2 * 1j, 1.5320888862380, 0.3472963553339, -1.8793852415718]
    assert multiset_match(roots, expected, 1e-9)
