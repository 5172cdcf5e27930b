"""Reduction of the six-term sum equation to a cubic in S = sin x + cos x,
exact deflation of the guaranteed root S = -1, and the equivalent scalar
form used for independent verification."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .quadratic import Quadratic


@dataclass(frozen=True)
class Target:
    """Right-hand side of the equation.

    Pass an int to keep the cubic and its deflation in exact integer
    arithmetic; floats go through ordinary IEEE arithmetic.
    """

    c: int | float

    def __post_init__(self):
        if not math.isfinite(self.c):
            raise ValueError(f"target must be finite, got {self.c!r}")

    @property
    def m(self) -> int | float:
        return -self.c

    @property
    def is_integer(self) -> bool:
        return isinstance(self.c, int)


@dataclass(frozen=True)
class CubicCoeffs:
    """Monic cubic in S: coefficients (1, m, 1, 2 - m), highest power first."""

    coeffs: tuple[int | float, int | float, int | float, int | float]

    def __call__(self, s):
        acc = self.coeffs[0]
        for co in self.coeffs[1:]:
            acc = acc * s + co
        return acc


def reduce_to_cubic(t: Target) -> CubicCoeffs:
    """Multiply the equation through by sin x cos x and substitute
    S = sin x + cos x, sin x cos x = (S**2 - 1)/2:

        S**3 + m*S**2 + S + (2 - m) = 0,   m = -c.

    The multiplication introduces the spurious root S = -1 (where
    sin x cos x itself vanishes), removed later by deflation.
    """
    m = t.m
    if t.is_integer:
        return CubicCoeffs((1, m, 1, 2 - m))
    return CubicCoeffs((1.0, m, 1.0, 2.0 - m))


class DeflationError(ArithmeticError):
    """Synthetic division by (S + 1) left a nonzero remainder."""


def deflate(cu: CubicCoeffs) -> Quadratic:
    """Divide the cubic by (S + 1) via synthetic division.

    Returns the quotient S**2 + (m - 1)*S + (2 - m).  The remainder is
    computed, not assumed: it must vanish exactly for integer coefficients
    and up to a few ulp for float ones.
    """
    c0, c1, c2, c3 = cu.coeffs
    b0 = c0
    b1 = c1 - b0
    b2 = c2 - b1
    rem = c3 - b2
    if all(isinstance(co, int) for co in cu.coeffs):
        tol = 0
    else:
        scale = max(1.0, *(abs(co) for co in cu.coeffs))
        tol = 8.0 * sys.float_info.epsilon * scale
    if abs(rem) > tol:
        raise DeflationError(
            f"remainder {rem!r} deflating coefficients {cu.coeffs!r}")
    return Quadratic(float(b0), float(b1), float(b2))


def evaluate_from_sum(s: float) -> float:
    """The six-term sum expressed through S = sin x + cos x alone:
    S + 2/(S - 1).

    This is the deflated quadratic condition S**2 + (m-1)*S + (2-m) = 0
    rewritten as S + 2/(S - 1) = -m; it has a single pole at S = 1 and is
    better conditioned near S = +/-1 than re-evaluating the cubic.
    """
    if s == 1.0:
        raise ValueError("pole at S = 1")
    return s + 2.0 / (s - 1.0)
