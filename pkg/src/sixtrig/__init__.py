"""Closed-form solver and numerical verifier for the equation
sin x + cos x + sec x + csc x + tan x + cot x = c.

The closed-form pipeline substitutes S = sin x + cos x, reduces the
equation to a cubic in S, deflates the always-present spurious root
S = -1, keeps the quadratic roots that S can attain, and maps them back
to residue classes mod 2*pi.  The oracle module re-derives everything
numerically -- branch-wise scanning, bisection, tangency refinement --
and matches the two answers one-to-one.
"""

from .trig import (DOMAIN_TOL, SQRT2, TWO_PI, CosBranch, CosSolutionFamily,
                   DomainKind, DomainStatus, SingularInputError,
                   classify_domain, evaluate, product_from_sum, sin_plus_cos,
                   solve_cos)
from .quadratic import (BOUNDARY_TOL, Interval, Placement, Quadratic,
                        RootLocation, RootLocationKind, both_roots_inside,
                        discriminant, locate, one_inside_one_outside)
from .quadratic import roots as quadratic_roots
from .reduction import (CubicCoeffs, DeflationError, Target, deflate,
                        evaluate_from_sum, reduce_to_cubic)
from .solver import (GAP_HIGH, GAP_LOW, M_ENDPOINT_MAX, M_ENDPOINT_MIN,
                     M_VERTEX_MAX, M_VERTEX_MIN, AbsoluteFamily,
                     AdmissibleRoot, ResidueClass, SolutionFamily,
                     admissible_roots, angle_of_root, enumerate_solutions,
                     solve_abs, solve_integer, solve_real)
from .oracle import (CompareReport, GapCertificate, ScanReport, analytic_gap,
                     compare, grid_scan, no_solution_certificate,
                     refine_roots, verify_family)

__version__ = "0.1.0"

__all__ = [
    "AbsoluteFamily", "AdmissibleRoot", "BOUNDARY_TOL", "CompareReport",
    "CosBranch", "CosSolutionFamily", "CubicCoeffs", "DeflationError",
    "DOMAIN_TOL", "DomainKind", "DomainStatus", "GAP_HIGH", "GAP_LOW",
    "GapCertificate", "Interval", "M_ENDPOINT_MAX", "M_ENDPOINT_MIN",
    "M_VERTEX_MAX", "M_VERTEX_MIN", "Placement", "Quadratic", "ResidueClass",
    "RootLocation", "RootLocationKind", "ScanReport", "SingularInputError",
    "SolutionFamily", "SQRT2", "Target", "TWO_PI", "admissible_roots",
    "analytic_gap", "angle_of_root", "both_roots_inside", "classify_domain",
    "compare", "deflate", "discriminant", "enumerate_solutions", "evaluate",
    "evaluate_from_sum", "grid_scan", "locate", "no_solution_certificate",
    "one_inside_one_outside", "product_from_sum", "quadratic_roots",
    "reduce_to_cubic", "refine_roots", "sin_plus_cos", "solve_abs",
    "solve_cos", "solve_integer", "solve_real", "verify_family",
]
