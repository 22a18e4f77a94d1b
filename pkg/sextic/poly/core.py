#
# For licensing see accompanying LICENSE file.
#

'''
dense univariate polynomials over binary64 complex numbers

coefficients are stored in ascending order: coeffs[j] multiplies x^j.
the zero polynomial is stored as a single zero coefficient and has degree -1.
'''

from dataclasses import dataclass
from typing import Iterable, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P

from sextic.cfg.constants import CANONICAL_KEY_DIGITS
from sextic.utils.errors import ZeroPolynomialError


ComplexScalar = complex
Number = Union[int, float, complex]


@dataclass(frozen=True)
class Tolerance:
    """ Mixed tolerance |x - y| <= atol + rtol * max(|x|, |y|) """
    rtol: float = 1e-9
    atol: float = 1e-10

    @classmethod
    def from_cfg(cls, node):
        return cls(rtol=float(node.rtol), atol=float(node.atol))


class Polynomial():
    def __init__(self, coeffs: Iterable[Number]):
        if isinstance(coeffs, Polynomial):
            coeffs = coeffs.coeffs
        elif not isinstance(coeffs, np.ndarray):
            coeffs = list(coeffs)
        c = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
        if c.ndim != 1:
            raise ValueError(f'coefficients must be one dimensional, got shape {c.shape}')
        if not np.all(np.isfinite(c)):
            raise ValueError(f'coefficients must be finite: {c}')
        if c.size == 0:
            c = np.zeros(1, dtype=np.complex128)
        c = np.array(P.polytrim(c, tol=0), dtype=np.complex128)
        c.flags.writeable = False
        self._coeffs = c

    @classmethod
    def from_descending(cls, coeffs: Iterable[Number]):
        return cls(list(coeffs)[::-1])

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1.0):
        c = np.zeros(degree + 1, dtype=np.complex128)
        c[-1] = coeff
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return self._coeffs.size == 1 and self._coeffs[0] == 0

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else self._coeffs.size - 1

    @property
    def leading(self) -> ComplexScalar:
        return complex(self._coeffs[-1])

    def descending(self) -> np.ndarray:
        return self._coeffs[::-1].copy()

    def __len__(self):
        return self._coeffs.size

    def __iter__(self):
        return (complex(c) for c in self._coeffs)

    def __getitem__(self, j: int) -> ComplexScalar:
        # coefficient of x^j, zero above the degree
        return complex(self._coeffs[j]) if j < self._coeffs.size else 0j

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash(self._coeffs.tobytes())

    def __call__(self, z: Number) -> ComplexScalar:
        return evaluate(self, z)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return Polynomial(self._coeffs * other)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return Polynomial(P.polyadd(self._coeffs, other._coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self._coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else Polynomial([-other]))

    def __rsub__(self, other):
        return (-self) + other

    def __repr__(self):
        return f'Polynomial({[complex(c) for c in self._coeffs]})'

    def __str__(self):
        return format_polynomial(self)


def evaluate(p: Polynomial, z: Number) -> ComplexScalar:
    """ p(z) by Horner accumulation """
    return complex(P.polyval(complex(z), p.coeffs))


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(P.polymul(p.coeffs, q.coeffs))


def divide(p: Polynomial, q: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """ Long division, p = q * quotient + remainder with deg(remainder) < deg(q) """
    if q.is_zero:
        raise ZeroPolynomialError('division by the zero polynomial')
    quotient, remainder = P.polydiv(p.coeffs, q.coeffs)
    return Polynomial(quotient), Polynomial(remainder)


def monic_normalize(p: Polynomial) -> Polynomial:
    if p.is_zero:
        raise ZeroPolynomialError('cannot normalize the zero polynomial')
    c = np.array(p.coeffs) / p.coeffs[-1]
    c[-1] = 1.0
    return Polynomial(c)


def scale(p: Polynomial) -> float:
    return float(np.max(np.abs(p.coeffs)))


def residual(p: Polynomial, z: Number) -> float:
    """ |p(z)| normalized by the coefficient scale of p """
    s = scale(p)
    if s == 0.0:
        return 0.0
    return abs(evaluate(p, z)) / s


def from_roots(roots: Iterable[Number]) -> Polynomial:
    roots = [complex(r) for r in roots]
    if len(roots) == 0:
        return Polynomial([1.0])
    return Polynomial(P.polyfromroots(roots))


def coeffs_close(p: Polynomial, q: Polynomial, rtol: float = 1e-9, atol: float = 1e-10) -> bool:
    """
    Coefficientwise mixed tolerance comparison,
    |x - y| <= atol * s + rtol * max(|x|, |y|) with s = max(1, scale(p), scale(q)).
    """
    return max_coeff_violation(p, q, rtol, atol) <= 1.0


def max_coeff_violation(p: Polynomial, q: Polynomial, rtol: float = 1e-9, atol: float = 1e-10) -> float:
    """ Largest ratio |x - y| / allowed over all coefficients; <= 1 means close """
    n = max(len(p), len(q))
    x = np.zeros(n, dtype=np.complex128)
    y = np.zeros(n, dtype=np.complex128)
    x[:len(p)] = p.coeffs
    y[:len(q)] = q.coeffs
    s = max(1.0, scale(p), scale(q))
    allowed = atol * s + rtol * np.maximum(np.abs(x), np.abs(y))
    return float(np.max(np.abs(x - y) / allowed))


def max_coeff_error(p: Polynomial, q: Polynomial) -> float:
    """ max |x - y| over coefficients, divided by max(1, scale(p), scale(q)) """
    n = max(len(p), len(q))
    x = np.zeros(n, dtype=np.complex128)
    y = np.zeros(n, dtype=np.complex128)
    x[:len(p)] = p.coeffs
    y[:len(q)] = q.coeffs
    return float(np.max(np.abs(x - y))) / max(1.0, scale(p), scale(q))


def canonical_key(z: Number):
    z = complex(z)
    return (round(z.real, CANONICAL_KEY_DIGITS), round(z.imag, CANONICAL_KEY_DIGITS))


def canonical_sort(values: Iterable[Number]) -> Tuple[ComplexScalar, ...]:
    """ Ascending real part, ties by ascending imaginary part """
    return tuple(sorted((complex(v) for v in values), key=canonical_key))


def format_complex(z: Number, precision: int = 10) -> str:
    """ re+imi with the sign attached and no spaces, e.g. 1.532088886-1.414213562i """
    z = complex(z)
    # adding 0.0 turns -0.0 into 0.0
    re = f'{z.real + 0.0:.{precision}g}'
    if z.imag == 0.0:
        return re
    sign = '-' if z.imag < 0 else '+'
    return f'{re}{sign}{abs(z.imag):.{precision}g}i'


def format_polynomial(p: Polynomial, precision: int = 10, var: str = 'x') -> str:
    if p.is_zero:
        return '0'
    terms = []
    for j in range(p.degree, -1, -1):
        c = complex(p.coeffs[j])
        if c == 0:
            continue
        if c.imag == 0.0:
            mag = f'{abs(c.real):.{precision}g}'
            sign = '-' if c.real < 0 else '+'
        else:
            mag = f'({format_complex(c, precision)})'
            sign = '+'
        if j > 0 and mag == '1':
            mag = ''
        power = '' if j == 0 else (var if j == 1 else f'{var}^{j}')
        terms.append((sign, mag + power))
    head_sign, head = terms[0]
    out = ('-' if head_sign == '-' else '') + head
    for sign, term in terms[1:]:
        out += f' {sign} {term}'
    return out

