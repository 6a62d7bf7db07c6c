"""Exception hierarchy shared by all subpackages."""


class TelegraphError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(TelegraphError, ValueError):
    """Parameters outside the domain where a representation is defined."""


class PoleError(ParameterError):
    """Argument sits on a pole of the Gamma function."""


class DivergenceError(TelegraphError, ArithmeticError):
    """No series or transformation reaches the requested argument."""


class UndefinedError(ParameterError):
    """Function is not defined for the requested degree/order."""


class UniversalityError(ParameterError):
    """Similarity exponents do not reduce the PDE to an ODE."""


class ComplexOrderError(ParameterError):
    """Legendre order formula has a negative discriminant."""


class ExponentError(ParameterError):
    """Negative power evaluated at the edge of its support."""


class SingularityError(ParameterError):
    """Evaluation requested on a singular point of the reduced ODE."""


class NonIntegrableError(TelegraphError, ArithmeticError):
    """Profile is not integrable over its support."""


class PreconditionError(TelegraphError, ValueError):
    """Audit applied to a family that does not meet its hypotheses."""


class SmoothnessError(PreconditionError):
    """Initial data too rough for the finite-difference oracle."""


class CFLError(TelegraphError, ValueError):
    """Time step violates the CFL bound."""


class BlowupError(TelegraphError, ArithmeticError):
    """Numerical solution grew beyond the blow-up threshold."""


class EmptyDomainError(TelegraphError, ValueError):
    """Every requested sample was masked."""
