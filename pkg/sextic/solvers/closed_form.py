#
# For licensing see accompanying LICENSE file.
#

'''
closed-form quadratic and cubic solvers over the complex numbers

these are the two halves of the sextic root formula: a Cardano root of the
cubic factor plus a root of the quadratic factor.
'''

import cmath
from dataclasses import dataclass
from typing import Tuple

from sextic.cfg.constants import CUBE_ROOTS_OF_UNITY
from sextic.poly.core import Polynomial


@dataclass(frozen=True)
class QuadraticMonic:
    """ x^2 + a5*x + a6 """
    a5: complex
    a6: complex

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial([self.a6, self.a5, 1.0])


@dataclass(frozen=True)
class CubicMonic:
    """ x^3 + a2*x^2 + a3*x + a4 """
    a2: complex
    a3: complex
    a4: complex

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial([self.a4, self.a3, self.a2, 1.0])


def principal_cbrt(z: complex) -> complex:
    """ Cube root with argument in (-pi/3, pi/3] """
    z = complex(z)
    if z == 0:
        return 0j
    r, phi = cmath.polar(z)
    return cmath.rect(r ** (1.0 / 3.0), phi / 3.0)


def solve_quadratic(q: QuadraticMonic) -> Tuple[complex, complex]:
    b, c = complex(q.a5), complex(q.a6)
    sq = cmath.sqrt(b * b - 4.0 * c)
    # pick the sign that avoids cancellation, then recover the other root from the product
    big = -0.5 * (b + sq) if abs(b + sq) >= abs(b - sq) else -0.5 * (b - sq)
    if big == 0:
        return 0j, 0j
    return big, c / big


def solve_cubic(c: CubicMonic) -> Tuple[complex, complex, complex]:
    """
    Cardano's formula. With x = t - a2/3 the cubic becomes t^3 + p*t + q,
    u^3 is a root of y^2 + q*y - p^3/27, u is its principal cube root times a
    cube root of unity, and v is forced by u*v = -p/3. Each root is u + v - a2/3.
    """
    a2, a3, a4 = complex(c.a2), complex(c.a3), complex(c.a4)
    shift = a2 / 3.0
    p = a3 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a3 / 3.0 + a4

    if p == 0:
        u = principal_cbrt(-q)
        return tuple(w * u - shift for w in CUBE_ROOTS_OF_UNITY)

    disc = cmath.sqrt(q * q / 4.0 + p ** 3 / 27.0)
    # larger-modulus branch keeps u away from zero
    u3 = -q / 2.0 + disc
    if abs(-q / 2.0 - disc) > abs(u3):
        u3 = -q / 2.0 - disc
    u = principal_cbrt(u3)
    roots = []
    for w in CUBE_ROOTS_OF_UNITY:
        uk = w * u
        vk = -p / (3.0 * uk)
        roots.append(uk + vk - shift)
    return tuple(roots)
