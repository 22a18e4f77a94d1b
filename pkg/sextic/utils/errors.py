#
# For licensing see accompanying LICENSE file.
#


class SexticError(Exception):
    """ Base class of every failure raised by the sextic package """


class ZeroPolynomialError(SexticError, ZeroDivisionError):
    pass


class NonConvergenceError(SexticError):
    def __init__(self, message, iterations, residual_max):
        super().__init__(message)
        self.iterations = iterations
        self.residual_max = residual_max


class DegenerateSplitError(SexticError):
    pass


class FactorMismatchError(SexticError):
    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class SplitFailedError(SexticError):
    def __init__(self, message, candidates):
        super().__init__(message)
        # list of (k, reason) pairs, one per Martinelli root tried
        self.candidates = candidates


class ResidualError(SexticError):
    def __init__(self, message, residual_max, tol):
        super().__init__(message)
        self.residual_max = residual_max
        self.tol = tol


class InputError(SexticError):
    pass
