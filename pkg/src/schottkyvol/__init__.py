"""Upper bounds and negativity certificates for the renormalized volume of
Schottky fillings of closed hyperbolic surfaces, computed from Fenchel-Nielsen
coordinates on a pants decomposition."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    DomainError,
    HolonomyError,
    NonHyperbolicError,
    ParseError,
    ValidationError,
)

__all__ = [
    "__version__",
    "BudgetExceededError",
    "DomainError",
    "HolonomyError",
    "NonHyperbolicError",
    "ParseError",
    "ValidationError",
]
