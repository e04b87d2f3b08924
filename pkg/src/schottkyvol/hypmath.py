"""Universal constants and the hyperbolic special functions entering the
volume bounds, in binary64 with certified bisection for the one inversion.

All functions are pure and total over their stated domains; anything outside
raises DomainError rather than returning NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "UniversalConstants",
    "universal_constants",
    "collar_halfwidth",
    "tube_injectivity",
    "bc_F",
    "bc_F_inverse",
    "bc_L",
    "bers_length_bound",
    "coth",
    "EPS0",
]


def coth(x: float) -> float:
    return math.cosh(x) / math.sinh(x)


# 2-dimensional Margulis constant, 2*arsinh(1).
EPS0 = 2.0 * math.asinh(1.0)


@dataclass(frozen=True)
class UniversalConstants:
    """The dimensionless constants used by every bound in this package."""

    S: float
    Q: float
    C: float
    eps0: float
    bers_coeff: float

    def as_dict(self) -> dict:
        return {
            "S": self.S,
            "Q": self.Q,
            "C": self.C,
            "eps0": self.eps0,
            "bers_coeff": self.bers_coeff,
        }


def universal_constants() -> UniversalConstants:
    """Compute (never hard-code) the universal constants.

    S = 4*pi^3/sqrt(e), Q = 4*pi*ln(pi*e^{0.502*pi}/arsinh(1)),
    C = 3*coth^2(1/4), eps0 = 2*arsinh(1), bers_coeff = 6*sqrt(3*pi).
    """
    s = 4.0 * math.pi**3 / math.sqrt(math.e)
    q = 4.0 * math.pi * math.log(math.pi * math.exp(0.502 * math.pi) / math.asinh(1.0))
    c = 3.0 * coth(0.25) ** 2
    return UniversalConstants(S=s, Q=q, C=c, eps0=EPS0, bers_coeff=6.0 * math.sqrt(3.0 * math.pi))


def collar_halfwidth(length: float) -> float:
    """Half-width L = arsinh(1/sinh(len/2)) of the embedded collar around a
    closed geodesic of the given length."""
    if not (length > 0.0) or not math.isfinite(length):
        raise DomainError(f"geodesic length must be positive and finite, got {length!r}")
    return math.asinh(1.0 / math.sinh(0.5 * length))


def tube_injectivity(length: float, d: float) -> float:
    """Injectivity radius arsinh(sinh(len/2)*cosh(L-d)) at a point of the thin
    tube, where d is the distance from the tube boundary and L the half-width."""
    if not (length > 0.0) or not math.isfinite(length):
        raise DomainError(f"geodesic length must be positive and finite, got {length!r}")
    half = collar_halfwidth(length)
    if not (0.0 <= d <= half):
        raise DomainError(f"distance {d!r} outside the tube range [0, {half!r}]")
    return math.asinh(math.sinh(0.5 * length) * math.cosh(half - d))


def bc_F(x: float) -> float:
    """Strictly increasing auxiliary function
    F(x) = x/2 + arsinh(sinh(x/2)/sqrt(1 - sinh^2(x/2))) on (0, eps0)."""
    if not (0.0 < x < EPS0):
        raise DomainError(f"argument must lie in (0, {EPS0!r}), got {x!r}")
    s = math.sinh(0.5 * x)
    return 0.5 * x + math.asinh(s / math.sqrt(1.0 - s * s))


_BISECT_PAD = 1e-15
_BISECT_TOL = 1e-12
_BISECT_MAX_ITER = 200


def bc_F_inverse(y: float) -> float:
    """The unique x in (0, eps0) with bc_F(x) = y, to absolute tolerance 1e-12.

    Bracketed bisection; chosen over Newton so that convergence is guaranteed
    arbitrarily close to the eps0 singularity.
    """
    if not (y > 0.0) or not math.isfinite(y):
        raise DomainError(f"target must be positive and finite, got {y!r}")
    lo = _BISECT_PAD
    hi = EPS0 - _BISECT_PAD
    if bc_F(lo) >= y:
        return lo
    if bc_F(hi) <= y:
        return hi
    for _ in range(_BISECT_MAX_ITER):
        if hi - lo <= _BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if bc_F(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bc_L(x: float) -> float:
    """Length-comparison factor 1 + 2*pi/F^{-1}(g(x)) with
    g(x) = e^{-m} * e^{-pi^2/(2x)} / 2 and m = arccosh(e^2)."""
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"argument must be positive and finite, got {x!r}")
    m = math.acosh(math.e**2)
    g = math.exp(-m) * math.exp(-math.pi**2 / (2.0 * x)) / 2.0
    return 1.0 + 2.0 * math.pi / bc_F_inverse(g)


def bers_length_bound(genus: int) -> float:
    """Upper bound 6*sqrt(3*pi)*(genus-1) for the lengths of the curves in some
    pants decomposition of any closed hyperbolic surface of that genus."""
    if not isinstance(genus, int) or genus < 2:
        raise DomainError(f"genus must be an integer >= 2, got {genus!r}")
    return 6.0 * math.sqrt(3.0 * math.pi) * (genus - 1)
