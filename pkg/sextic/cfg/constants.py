#
# For licensing see accompanying LICENSE file.
#

import math


EXIT_OK = 0
EXIT_NOT_SOLVABLE = 2
EXIT_PARSE_ERROR = 3
EXIT_NUMERICAL_FAILURE = 4

SEXTIC_N_COEFFS = 7
QUINTIC_N_COEFFS = 4

MIN_PRECISION = 1
MAX_PRECISION = 17

# angular offset of the oracle's initial guesses, irrational w.r.t. 2*pi
ORACLE_ANGLE_OFFSET = 0.4
ORACLE_ROUNDOFF_FACTOR = 64.0
ORACLE_POLISH_SWEEPS = 2

# sort keys are rounded so that roots equal up to noise order stably
CANONICAL_KEY_DIGITS = 12

# the principal cube root lives in (-pi/3, pi/3]
CUBE_ROOTS_OF_UNITY = (
    1.0 + 0.0j,
    complex(-0.5, math.sqrt(3.0) / 2.0),
    complex(-0.5, -math.sqrt(3.0) / 2.0),
)
