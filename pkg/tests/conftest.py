#
# For licensing see accompanying LICENSE file.
#

import math

import pytest

from sextic.utils.sampler import ParamSampler


# roots of x^6 + 2x^3 + 21x^2 - 18x + 51
COS_2PI_9 = 2.0 * math.cos(2.0 * math.pi / 9.0)
COS_4PI_9 = 2.0 * math.cos(4.0 * math.pi / 9.0)
COS_PI_9 = -2.0 * math.cos(math.pi / 9.0)
SQRT2 = math.sqrt(2.0)
WORKED_ROOTS = [
    complex(r, s * SQRT2) for r in (COS_2PI_9, COS_4PI_9, COS_PI_9) for s in (1.0, -1.0)
]


@pytest.fixture
def sampler():
    return ParamSampler(seed=0, magnitude=3.0)


@pytest.fixture
def complex_sampler():
    return ParamSampler(seed=1, magnitude=3.0, complex_valued=True)
