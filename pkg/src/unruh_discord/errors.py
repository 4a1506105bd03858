"""Exception types raised across the package."""


class UnruhDiscordError(Exception):
    """Base class for all package errors."""


class DomainError(UnruhDiscordError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotHermitian(UnruhDiscordError, ValueError):
    pass


class NoConvergence(UnruhDiscordError, ArithmeticError):
    pass


class ComplexSpectrum(UnruhDiscordError, ArithmeticError):
    """Eigenvalues expected real carry a non-negligible imaginary part."""


class InvalidState(UnruhDiscordError, ValueError):
    """A density matrix or its parameters violate positivity, trace or Hermiticity."""


class DegenerateOutcome(UnruhDiscordError, ArithmeticError):
    """A measurement outcome has (numerically) zero probability."""


class NoBracket(UnruhDiscordError):
    """The searched quantity does not change sign on the bracket."""


class ParseError(UnruhDiscordError, ValueError):
    pass
