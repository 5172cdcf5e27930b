"""Independent numerical verification: branch-wise grid scanning, sign-change
bisection, tangency refinement, and one-to-one matching against closed-form
residue families.

Everything here works directly on the six-term sum, never on the reduced
polynomial, so it cross-checks the closed-form pipeline end to end.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .solver import GAP_HIGH, GAP_LOW, SolutionFamily
from .trig import HALF_PI, TWO_PI

DEFAULT_POINTS = 1_000_000
DEFAULT_EXCLUSION = 1e-3
DEFAULT_TOL = 1e-12
DEFAULT_MATCH_TOL = 1e-8
MIN_POINTS = 1_000

#: Continuity branches of the six-term sum over one period; the poles all
#: sit on the lattice {K*pi/2}, so each branch supports sign-change search.
BRANCHES = (
    (0.0, HALF_PI),
    (HALF_PI, math.pi),
    (math.pi, 1.5 * math.pi),
    (1.5 * math.pi, TWO_PI),
)

#: Numeric roots closer than this are one root seen twice (e.g. a tangency
#: bracketed by rounding-noise sign changes).
MERGE_TOL = 1e-7

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _value(x: float) -> float:
    s = math.sin(x)
    c = math.cos(x)
    return s + c + 1.0 / c + 1.0 / s + s / c + c / s


def _values(x: np.ndarray) -> np.ndarray:
    s = np.sin(x)
    c = np.cos(x)
    return s + c + 1.0 / c + 1.0 / s + s / c + c / s


@dataclass(frozen=True)
class CompareReport:
    matched: bool
    tol: float
    pairs: tuple[tuple[float, float], ...]     # (closed, numeric)
    unmatched_closed: tuple[float, ...]
    unmatched_numeric: tuple[float, ...]
    notes: tuple[str, ...]


@dataclass(frozen=True)
class ScanReport:
    target: float
    numeric_roots: tuple[float, ...]
    min_gap: float
    argmin: float
    matched: bool | None = None
    comparison: CompareReport | None = None


def grid_scan(c: float, points: int = DEFAULT_POINTS,
              exclusion: float = DEFAULT_EXCLUSION) -> ScanReport:
    """Sample |F - c| on a uniform grid over [0, 2*pi).

    Grid points within ``exclusion`` of a branch endpoint {K*pi/2} are
    skipped.  Reports the minimum gap and where it occurs; the root and
    match fields stay unset.
    """
    if points < MIN_POINTS:
        raise ValueError(f"need at least {MIN_POINTS} points, got {points}")
    if exclusion <= 0.0:
        raise ValueError("exclusion must be positive")
    xs = np.linspace(0.0, TWO_PI, points, endpoint=False)
    rem = np.remainder(xs, HALF_PI)
    dist = np.minimum(rem, HALF_PI - rem)
    xs = xs[dist >= exclusion]
    gaps = np.abs(_values(xs) - c)
    i = int(np.argmin(gaps))
    return ScanReport(target=float(c), numeric_roots=(),
                      min_gap=float(gaps[i]), argmin=float(xs[i]))


def _bisect(c: float, lo: float, hi: float, f_lo: float, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = _value(mid) - c
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def _refine_extremum(c: float, lo: float, hi: float) -> float:
    """Locate an interior extremum of |F - c| without derivatives.

    Golden-section narrows the bracket, but value-only search cannot place a
    smooth minimum better than ~sqrt(eps); a parabolic vertex fit over a
    +/-1e-5 stencil recovers the remaining digits.
    """
    def g(u: float) -> float:
        return abs(_value(u) - c)

    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    g1, g2 = g(x1), g(x2)
    while b - a > 1e-6:
        if g1 <= g2:
            b, x2, g2 = x2, x1, g1
            x1 = b - _INVPHI * (b - a)
            g1 = g(x1)
        else:
            a, x1, g1 = x1, x2, g2
            x2 = a + _INVPHI * (b - a)
            g2 = g(x2)
    x0 = 0.5 * (a + b)
    delta = 1e-5
    for _ in range(2):
        f_m, f_0, f_p = g(x0 - delta), g(x0), g(x0 + delta)
        denom = f_p - 2.0 * f_0 + f_m
        if denom <= 0.0:
            break
        step = -0.5 * delta * (f_p - f_m) / denom
        if not abs(step) < delta:
            break
        x0 += step
    return min(max(x0, lo), hi)


def refine_roots(c: float, exclusion: float = DEFAULT_EXCLUSION,
                 tol: float = DEFAULT_TOL, *, seg_points: int = 8192,
                 tangency_accept: float = 1e-9) -> list[float]:
    """All roots of F(x) = c in [0, 2*pi), found branch by branch.

    Transversal crossings come from sign changes of F - c on a fine grid,
    bisected to width ``tol``.  A branch extremum that touches c without
    crossing (a tangency) shows up as an interior local minimum of |F - c|
    below sqrt(tol); those are refined by derivative-free extremum search
    and accepted when the residual stays within ``tangency_accept``.
    Duplicates within MERGE_TOL collapse, so a tangency straddled by
    rounding-noise sign changes still counts once.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if exclusion <= 0.0:
        raise ValueError("exclusion must be positive")
    if seg_points < 16:
        raise ValueError("seg_points too small to bracket roots")
    found: list[float] = []
    thresh = math.sqrt(tol)
    for blo, bhi in BRANCHES:
        xs = np.linspace(blo + exclusion, bhi - exclusion, seg_points)
        ys = _values(xs) - c
        for i in np.flatnonzero(ys == 0.0):
            found.append(float(xs[i]))
        neg = ys < 0.0
        crossing = (ys[:-1] != 0.0) & (ys[1:] != 0.0) & (neg[:-1] != neg[1:])
        for i in np.flatnonzero(crossing):
            found.append(_bisect(c, float(xs[i]), float(xs[i + 1]),
                                 float(ys[i]), tol))
        mags = np.abs(ys)
        touching = (
            (mags[1:-1] <= mags[:-2]) & (mags[1:-1] <= mags[2:])
            & (mags[1:-1] < thresh)
            & (ys[:-2] * ys[1:-1] > 0.0) & (ys[1:-1] * ys[2:] > 0.0)
        )
        for i in np.flatnonzero(touching):
            x0 = _refine_extremum(c, float(xs[i]), float(xs[i + 2]))
            if abs(_value(x0) - c) <= tangency_accept:
                found.append(x0)
    found.sort()
    merged: list[float] = []
    for x in found:
        if merged and x - merged[-1] <= MERGE_TOL:
            continue
        merged.append(x)
    return merged


def _circular_gap(a: float, b: float) -> float:
    return abs(math.remainder(a - b, TWO_PI))


def compare(closed: SolutionFamily | Sequence[float],
            numeric: Sequence[float], tol: float = DEFAULT_MATCH_TOL,
            target: float | None = None) -> CompareReport:
    """Match closed-form residues against numeric roots one-to-one.

    ``closed`` may be a SolutionFamily or a plain sequence of offsets.
    ``matched`` is True only for a perfect pairing with circular distance
    <= tol on every pair.  Diagnostics name every unmatched value, with the
    equation residual F(x) - c when the target is known.
    """
    if isinstance(closed, SolutionFamily):
        if target is None:
            target = float(closed.target.c)
        closed_offsets = [float(v) for v in closed.offsets]
    else:
        closed_offsets = [float(v) for v in closed]
    numeric_vals = [float(v) for v in numeric]

    # Families carry at most four residues, so brute-force the assignment.
    if len(closed_offsets) <= len(numeric_vals):
        small, large, swapped = closed_offsets, numeric_vals, False
    else:
        small, large, swapped = numeric_vals, closed_offsets, True
    best_pairs: list[tuple[int, int]] = []
    best_cost: tuple[int, float] | None = None
    for combo in itertools.permutations(range(len(large)), len(small)):
        pairs = [(i, j) for i, j in enumerate(combo)
                 if _circular_gap(small[i], large[j]) <= tol]
        cost = (-len(pairs),
                sum(_circular_gap(small[i], large[j]) for i, j in pairs))
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_pairs = pairs
    pair_idx = [(j, i) for i, j in best_pairs] if swapped else best_pairs

    matched_closed = {i for i, _ in pair_idx}
    matched_numeric = {j for _, j in pair_idx}
    unmatched_closed = [v for i, v in enumerate(closed_offsets)
                        if i not in matched_closed]
    unmatched_numeric = [v for j, v in enumerate(numeric_vals)
                         if j not in matched_numeric]
    matched = not unmatched_closed and not unmatched_numeric

    notes = []
    for v in unmatched_closed:
        note = (f"closed-form residue {v:.9f} has no numeric partner "
                f"within {tol:g}")
        if target is not None:
            note += f"; F({v:.9f}) - c = {_value(v) - target:.6f}"
        notes.append(note)
    for v in unmatched_numeric:
        notes.append(f"numeric root {v:.9f} has no closed-form partner "
                     f"within {tol:g}")
    pairs_vals = tuple((closed_offsets[i], numeric_vals[j])
                       for i, j in sorted(pair_idx))
    return CompareReport(matched, tol, pairs_vals, tuple(unmatched_closed),
                         tuple(unmatched_numeric), tuple(notes))


def analytic_gap(c: float) -> float:
    """Distance from c to the attainable range of the six-term sum
    (0 when c is attainable)."""
    if c <= GAP_LOW or c >= GAP_HIGH:
        return 0.0
    return min(c - GAP_LOW, GAP_HIGH - c)


@dataclass(frozen=True)
class GapCertificate:
    target: int
    min_gap: float
    argmin: float
    analytic_gap: float
    numeric_roots: tuple[float, ...]
    passed: bool


def no_solution_certificate(n: int, points: int = DEFAULT_POINTS,
                            exclusion: float = DEFAULT_EXCLUSION,
                            gap_tol: float = 1e-3) -> GapCertificate:
    """Measured evidence that F(x) = n has no solution, for n in the
    no-solution band -1..6.

    Passes when the branch-wise root search finds nothing and the measured
    minimum of |F - n| sits within ``gap_tol`` of the analytic distance to
    the nearer attainment boundary (GAP_LOW below, GAP_HIGH above).
    """
    if not isinstance(n, int) or not -1 <= n <= 6:
        raise ValueError(f"certificate defined for integers -1..6, got {n!r}")
    scan = grid_scan(float(n), points, exclusion)
    roots_found = refine_roots(float(n), exclusion)
    analytic = analytic_gap(float(n))
    passed = not roots_found and scan.min_gap >= analytic - gap_tol
    return GapCertificate(n, scan.min_gap, scan.argmin, analytic,
                          tuple(roots_found), passed)


def verify_family(fam: SolutionFamily, points: int = DEFAULT_POINTS,
                  exclusion: float = DEFAULT_EXCLUSION,
                  tol: float = DEFAULT_TOL,
                  match_tol: float = DEFAULT_MATCH_TOL) -> ScanReport:
    """Full numerical cross-check of a closed-form family: scan, refine,
    and match; the returned report carries the roots and the comparison."""
    c = float(fam.target.c)
    scan = grid_scan(c, points, exclusion)
    roots_found = refine_roots(c, exclusion, tol)
    report = compare(fam, roots_found, match_tol)
    return replace(scan, numeric_roots=tuple(roots_found),
                   matched=report.matched, comparison=report)
