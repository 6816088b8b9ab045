class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(RuntimeError):
    """The request exceeds a documented enumeration or search ceiling."""
