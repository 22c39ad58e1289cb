"""Exception types shared across the package."""


class GenClusterError(Exception):
    """Base class for everything raised deliberately by this package."""


class DimensionError(GenClusterError, ValueError):
    """Operands built over different semifields, ranks or generator sets."""


class NotLaurentError(GenClusterError, ArithmeticError):
    """An exact division left a nonzero remainder.

    Raised both for quotients of Laurent polynomials and for the
    coefficient divisions inside the group ring.
    """


class NotSkewSymmetrizableError(GenClusterError, ValueError):
    """No positive diagonal matrix skew-symmetrizes the given matrix."""


class NonMonomialCoefficientError(GenClusterError):
    """A coefficient expected to be a tropical monomial was not one."""


class NotHomogeneousError(GenClusterError):
    """A Laurent polynomial is not homogeneous under the principal grading."""


class NegativeCoefficientExponentError(GenClusterError):
    """A coefficient carries a negative generator exponent where the
    principal-coefficient theory guarantees none."""


class InconsistentDegreeTransportError(GenClusterError):
    """Two equivalent seeds fail to transport the exchange degrees or the
    exchange polynomial coefficients along the identifying permutation.
    Signals an engine bug, not bad user input."""


class IncompatibleInitialDataError(GenClusterError, ValueError):
    """Two patterns do not satisfy the companion condition B*R = Bbar*Rbar."""


class UnknownVariableError(GenClusterError, KeyError):
    """A cluster variable was referenced that never occurs in the graph."""


class EvaluationError(GenClusterError, ValueError):
    """Numeric evaluation hit a zero coordinate or a negative coefficient."""


class ConfigError(GenClusterError, ValueError):
    """A JSON config failed validation; message carries the field path."""
