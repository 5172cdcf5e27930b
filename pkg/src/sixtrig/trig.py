"""Evaluation and domain handling for the six-term trigonometric sum
sin x + cos x + sec x + csc x + tan x + cot x."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

SQRT2 = math.sqrt(2.0)
HALF_PI = 0.5 * math.pi
QUARTER_PI = 0.25 * math.pi
TWO_PI = 2.0 * math.pi

#: Default distance (radians) to the singular lattice {K*pi/2} below which a
#: point counts as singular.
DOMAIN_TOL = 1e-12


class DomainKind(enum.Enum):
    """How an angle sits relative to the singular lattice {K*pi/2}."""

    VALID = "valid"
    SINGULAR_SIN = "singular_sin"    # within tolerance of K*pi
    SINGULAR_COS = "singular_cos"    # within tolerance of K*pi + pi/2
    NEAR_SINGULAR = "near_singular"  # inside the caller's guard band


@dataclass(frozen=True)
class DomainStatus:
    kind: DomainKind
    distance: float  # radians to the nearest lattice point

    @property
    def is_valid(self) -> bool:
        return self.kind is DomainKind.VALID


class SingularInputError(ValueError):
    """Evaluation was requested too close to a pole of the six-term sum."""

    def __init__(self, x: float, status: DomainStatus):
        self.x = x
        self.status = status
        super().__init__(
            f"x = {x!r} is {status.kind.value}: distance "
            f"{status.distance:.3e} rad from the singular lattice"
        )


def _check_finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {x!r}")
    return x


def classify_domain(x: float, tol: float = DOMAIN_TOL,
                    near_tol: float | None = None) -> DomainStatus:
    """Classify ``x`` against the singular lattice {K*pi/2}.

    Points within ``tol`` of K*pi are SINGULAR_SIN, points within ``tol`` of
    K*pi + pi/2 are SINGULAR_COS.  When ``near_tol`` is given, points outside
    ``tol`` but within ``near_tol`` of the lattice are NEAR_SINGULAR.
    Everything else is VALID.
    """
    x = _check_finite(x)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    d_sin = abs(math.remainder(x, math.pi))
    d_cos = abs(math.remainder(x - HALF_PI, math.pi))
    if d_sin <= tol:
        return DomainStatus(DomainKind.SINGULAR_SIN, d_sin)
    if d_cos <= tol:
        return DomainStatus(DomainKind.SINGULAR_COS, d_cos)
    nearest = min(d_sin, d_cos)
    if near_tol is not None and nearest <= near_tol:
        return DomainStatus(DomainKind.NEAR_SINGULAR, nearest)
    return DomainStatus(DomainKind.VALID, nearest)


def evaluate(x: float, tol: float = DOMAIN_TOL,
             near_tol: float | None = None) -> float:
    """The sum sin x + cos x + sec x + csc x + tan x + cot x.

    The four derived terms are built from one sin and one cos call, so all
    six terms agree on the same rounded sin/cos values.  Inputs within
    ``tol`` (or ``near_tol``) of the singular lattice raise
    SingularInputError instead of returning huge, ill-conditioned values.
    """
    status = classify_domain(x, tol, near_tol)
    if not status.is_valid:
        raise SingularInputError(x, status)
    s = math.sin(x)
    c = math.cos(x)
    return s + c + 1.0 / c + 1.0 / s + s / c + c / s


def sin_plus_cos(x: float) -> float:
    """S = sin x + cos x; equals sqrt(2)*cos(x - pi/4), so |S| <= sqrt(2)."""
    x = _check_finite(x)
    return math.sin(x) + math.cos(x)


def product_from_sum(s: float) -> float:
    """sin x * cos x expressed through S = sin x + cos x: (S**2 - 1)/2."""
    return (s * s - 1.0) / 2.0


class CosBranch(enum.Enum):
    NO_SOLUTION = "no_solution"
    ODD_MULTIPLES = "odd_multiples"    # x = (2K + 1)*pi
    EVEN_MULTIPLES = "even_multiples"  # x = 2*K*pi
    PLUS_MINUS = "plus_minus"          # x = 2*K*pi +/- theta


@dataclass(frozen=True)
class CosSolutionFamily:
    """Solution set of cos x = b, as one offset pattern modulo 2*pi."""

    branch: CosBranch
    theta: float | None = None  # in (0, pi), only for PLUS_MINUS

    def offsets(self) -> tuple[float, ...]:
        """Distinct solution offsets in [0, 2*pi)."""
        if self.branch is CosBranch.NO_SOLUTION:
            return ()
        if self.branch is CosBranch.EVEN_MULTIPLES:
            return (0.0,)
        if self.branch is CosBranch.ODD_MULTIPLES:
            return (math.pi,)
        return (self.theta, TWO_PI - self.theta)


def solve_cos(b: float) -> CosSolutionFamily:
    """Solve cos x = b over the reals.

    |b| > 1 has no solution; b = 1 gives x = 2*K*pi; b = -1 gives
    x = (2K + 1)*pi; otherwise x = 2*K*pi +/- theta with theta = arccos(b)
    the unique angle in (0, pi).
    """
    b = _check_finite(b)
    if b > 1.0 or b < -1.0:
        return CosSolutionFamily(CosBranch.NO_SOLUTION)
    if b == 1.0:
        return CosSolutionFamily(CosBranch.EVEN_MULTIPLES)
    if b == -1.0:
        return CosSolutionFamily(CosBranch.ODD_MULTIPLES)
    return CosSolutionFamily(CosBranch.PLUS_MINUS, math.acos(b))
