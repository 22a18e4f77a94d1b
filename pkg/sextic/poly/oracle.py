#
# For licensing see accompanying LICENSE file.
#

'''
independent numerical root finder (Aberth-Ehrlich simultaneous iteration)

every closed-form result in the package is cross-checked against this oracle,
and shares no code with the radical solvers.
'''

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from numpy.polynomial import polynomial as P
from scipy.optimize import linear_sum_assignment

from sextic.cfg.constants import ORACLE_ANGLE_OFFSET, ORACLE_POLISH_SWEEPS, ORACLE_ROUNDOFF_FACTOR
from sextic.poly.core import Polynomial, canonical_sort, monic_normalize, scale
from sextic.utils.errors import NonConvergenceError


@dataclass(frozen=True)
class RootSet:
    roots: Tuple[complex, ...]
    residual_max: float
    iterations: int = 0

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def initial_guesses(p: Polynomial) -> np.ndarray:
    """ Equally spaced points on the circle of radius 1 + max|a_j| (p monic), rotated off-axis """
    n = p.degree
    radius = 1.0 + float(np.max(np.abs(p.coeffs[:-1])))
    angles = 2.0 * np.pi * np.arange(n) / n + ORACLE_ANGLE_OFFSET
    return radius * np.exp(1j * angles)


def aberth_correction(z: np.ndarray, c: np.ndarray, dc: np.ndarray) -> np.ndarray:
    """ One simultaneous Aberth-Ehrlich step for every estimate in z """
    pz = P.polyval(z, c)
    dpz = P.polyval(z, dc)
    newton = np.where(dpz != 0, pz / np.where(dpz != 0, dpz, 1.0), pz)

    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    inv = np.where(diff != 0, 1.0 / np.where(diff != 0, diff, 1.0), 0.0)
    np.fill_diagonal(inv, 0.0)
    repulsion = inv.sum(axis=1)

    denom = 1.0 - newton * repulsion
    return np.where(denom != 0, newton / np.where(denom != 0, denom, 1.0), newton)


def find_roots(p: Polynomial, tol: float = 1e-10, max_iter: int = 1000) -> RootSet:
    """
    All roots of p, multiplicity counted, in canonical order.

    A root estimate is accepted once |p(z)| <= tol * scale(p), or once |p(z)| is
    below the rounding error of evaluating p at z (the residual cannot improve
    further in binary64). In the second case residual_max can exceed tol, which
    is not reported as non-convergence. Raises NonConvergenceError after max_iter
    sweeps.
    Accepted roots get a few polishing sweeps that are kept only where they
    lower the residual.
    """
    if p.degree < 1:
        raise ValueError(f'root finding needs degree >= 1, got degree {p.degree}')
    p = monic_normalize(p)
    c = p.coeffs
    dc = P.polyder(c)
    abs_c = np.abs(c)
    s = scale(p)
    n = p.degree
    eps = np.finfo(np.float64).eps

    z = initial_guesses(p)
    for it in range(max_iter + 1):
        pz = P.polyval(z, c)
        roundoff = ORACLE_ROUNDOFF_FACTOR * eps * P.polyval(np.abs(z), abs_c)
        converged = (np.abs(pz) <= tol * s) | (np.abs(pz) <= roundoff)
        if converged.all():
            break
        if it == max_iter:
            residual_max = float(np.max(np.abs(pz))) / s
            raise NonConvergenceError(
                f'root finding did not converge in {max_iter} iterations '
                f'(degree {n}, residual_max {residual_max:.3e})',
                iterations=it, residual_max=residual_max,
            )
        step = aberth_correction(z, c, dc)
        step[converged] = 0.0
        z = z - step

    for _ in range(ORACLE_POLISH_SWEEPS):
        polished = z - aberth_correction(z, c, dc)
        better = np.abs(P.polyval(polished, c)) < np.abs(P.polyval(z, c))
        z = np.where(better, polished, z)

    residual_max = float(np.max(np.abs(P.polyval(z, c)))) / s
    logger.debug(f'oracle: degree {n} converged in {it} iterations, residual_max {residual_max:.3e}')
    return RootSet(roots=canonical_sort(z), residual_max=residual_max, iterations=it)


def multiset_match(A: Union[RootSet, Sequence[complex]], B: Union[RootSet, Sequence[complex]], tol: float) -> bool:
    """
    True iff each element of A pairs with a distinct element of B within distance tol.

    A greedy pass over the canonically sorted sequences is tried first; if it
    fails, an optimal assignment on the 0/1 "too far" cost matrix decides.
    """
    a = np.array(canonical_sort(A), dtype=np.complex128)
    b = np.array(canonical_sort(B), dtype=np.complex128)
    if a.size != b.size:
        raise ValueError(f'multiset sizes differ: {a.size} vs {b.size}')
    if a.size == 0:
        return True
    if np.all(np.abs(a - b) <= tol):
        return True

    too_far = (np.abs(a[:, None] - b[None, :]) > tol).astype(np.float64)
    rows, cols = linear_sum_assignment(too_far)
    return bool(too_far[rows, cols].sum() == 0)


def max_match_distance(A: Iterable[complex], B: Iterable[complex]) -> float:
    """ Bottleneck distance of the optimal sum-distance pairing of A and B """
    a = np.array(canonical_sort(A), dtype=np.complex128)
    b = np.array(canonical_sort(B), dtype=np.complex128)
    if a.size != b.size:
        raise ValueError(f'multiset sizes differ: {a.size} vs {b.size}')
    dist = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(dist)
    return float(dist[rows, cols].max()) if a.size else 0.0
