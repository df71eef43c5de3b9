"""Exception types shared across the package.

Everything derives from ValueError so callers that do not care about the
fine-grained class can still catch invalid inputs the usual way.
ConsistencyError is the exception: it signals that two independent
computations of the same quantity disagree beyond tolerance, which is a
bug or numerical breakdown rather than bad input, so it derives from
ArithmeticError.
"""


class NotInvertible(ValueError):
    """Residue shares a factor with the modulus."""


class NotPrime(ValueError):
    """Operation requires a prime modulus."""


class PoleError(ValueError):
    """Evaluation requested at a pole (cot of an integer multiple of pi)."""


class DomainError(ValueError):
    """Argument outside the documented domain."""


class WeightSumError(ValueError):
    """Cubature weights do not sum to 1."""


class DimensionError(ValueError):
    """Wrong number of dimensions for the requested operation."""


class LengthMismatch(ValueError):
    """Vectors that must share a length do not."""


class ConsistencyError(ArithmeticError):
    """Two routes to the same quantity disagree beyond tolerance."""
