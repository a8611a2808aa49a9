"""Exception types raised by the toolkit."""


class AntihamError(Exception):
    """Base class for all toolkit errors."""


class ShapeError(AntihamError, ValueError):
    """Operand dimensions do not match."""


class ContractError(AntihamError, ValueError):
    """An input violates a documented precondition (self-adjointness, label, ...)."""


class ZeroProbabilityError(AntihamError):
    """Conditioning on a measurement outcome whose probability is below the floor."""


class NotLiftableError(AntihamError):
    """Operator on the doubled space does not commute with V and V^dagger."""


class ConditionViolationError(AntihamError):
    """A candidate Hamiltonian term would break unitarity."""
