#
# For licensing see accompanying LICENSE file.
#

import numpy as np

from sextic.poly.core import canonical_sort
from sextic.solvers.closed_form import solve_cubic, solve_quadratic
from sextic.solvers.martinelli import QuinticDepressed
from sextic.solvers.milanez import MilanezParams, SexticMonic


class ParamSampler():
    """ Seeded random draws for property checks; magnitudes are bounded by `magnitude` """
    def __init__(self, seed=0, magnitude=3.0, complex_valued=False):
        self.rng = np.random.default_rng(seed)
        self.magnitude = magnitude
        self.complex_valued = complex_valued

    def scalar(self, complex_valued=None):
        complex_valued = self.complex_valued if complex_valued is None else complex_valued
        if complex_valued:
            # uniform on the disk of radius `magnitude`
            r = self.magnitude * np.sqrt(self.rng.uniform())
            return complex(r * np.exp(2j * np.pi * self.rng.uniform()))
        return complex(self.rng.uniform(-self.magnitude, self.magnitude))

    def params(self):
        return MilanezParams(*[self.scalar() for _ in range(4)])

    def quintic(self):
        return QuinticDepressed(*[self.scalar() for _ in range(4)])

    def sextic(self):
        return SexticMonic(*[self.scalar() for _ in range(6)])


def factor_root_separation(params: MilanezParams) -> float:
    """ Smallest distance between the five roots of the quadratic and cubic factors """
    roots = np.array(canonical_sort(solve_quadratic(params.quadratic) + solve_cubic(params.cubic)))
    dist = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(dist, np.inf)
    return float(dist.min())
