"""Real quadratics: stable root extraction and root location relative to an
open interval."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

#: Roots closer than this to an interval endpoint count as on the boundary.
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class Quadratic:
    """f(t) = a*t**2 + b*t + c with a != 0."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("leading coefficient must be nonzero")

    def __call__(self, t: float) -> float:
        return (self.a * t + self.b) * t + self.c

    def scaled(self, alpha: float) -> "Quadratic":
        """The same roots, coefficients multiplied by alpha (alpha != 0)."""
        return Quadratic(alpha * self.a, alpha * self.b, alpha * self.c)


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi) with lo < hi."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got ({self.lo!r}, {self.hi!r})")

    def contains(self, t: float) -> bool:
        return self.lo < t < self.hi


class Placement(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_BOUNDARY = "on_boundary"


class RootLocationKind(enum.Enum):
    NO_REAL_ROOTS = "no_real_roots"
    DOUBLE_ROOT = "double_root"
    TWO_ROOTS = "two_roots"


@dataclass(frozen=True)
class RootLocation:
    kind: RootLocationKind
    roots: tuple[float, ...]           # ascending; () or (t,) or (p1, p2)
    placements: tuple[Placement, ...]  # aligned with roots


def discriminant(q: Quadratic) -> float:
    return q.b * q.b - 4.0 * q.a * q.c


def roots(q: Quadratic) -> list[float]:
    """All real roots, ascending; a double root appears once.

    For two roots, the one that would lose digits to subtraction is
    recovered as c/q* with q* = -(b + sign(b)*sqrt(D))/2; sign(0) counts
    as +1 (no cancellation either way when b = 0).
    """
    d = discriminant(q)
    if d < 0.0:
        return []
    if d == 0.0:
        return [-q.b / (2.0 * q.a)]
    sign_b = -1.0 if q.b < 0.0 else 1.0
    qstar = -0.5 * (q.b + sign_b * math.sqrt(d))
    return sorted((qstar / q.a, q.c / qstar))


def both_roots_inside(q: Quadratic, iv: Interval) -> bool:
    """True iff f has two distinct real roots, both in the open interval.

    Decided without extracting roots: discriminant positive, a*f positive at
    both endpoints, and the vertex -b/(2a) strictly between them.
    """
    if not discriminant(q) > 0.0:
        return False
    if not (q.a * q(iv.lo) > 0.0 and q.a * q(iv.hi) > 0.0):
        return False
    vertex = -q.b / (2.0 * q.a)
    return iv.lo < vertex < iv.hi


def one_inside_one_outside(q: Quadratic, iv: Interval) -> bool:
    """True iff exactly one root lies in (lo, hi) and the other outside
    [lo, hi]; equivalent to f(lo)*f(hi) < 0."""
    return q(iv.lo) * q(iv.hi) < 0.0


def locate(q: Quadratic, iv: Interval,
           boundary_tol: float = BOUNDARY_TOL) -> RootLocation:
    """Full classification of where the roots of ``q`` sit relative to
    ``iv``; roots within ``boundary_tol`` of an endpoint are ON_BOUNDARY."""
    if boundary_tol < 0.0:
        raise ValueError("boundary_tol must be nonnegative")

    def place(t: float) -> Placement:
        if min(abs(t - iv.lo), abs(t - iv.hi)) <= boundary_tol:
            return Placement.ON_BOUNDARY
        return Placement.INSIDE if iv.contains(t) else Placement.OUTSIDE

    rs = roots(q)
    if not rs:
        return RootLocation(RootLocationKind.NO_REAL_ROOTS, (), ())
    if len(rs) == 1:
        return RootLocation(RootLocationKind.DOUBLE_ROOT, (rs[0],),
                            (place(rs[0]),))
    return RootLocation(RootLocationKind.TWO_ROOTS, tuple(rs),
                        (place(rs[0]), place(rs[1])))
