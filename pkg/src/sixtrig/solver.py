"""Closed-form solution families of
sin x + cos x + sec x + csc x + tan x + cot x = c
as residue classes modulo 2*pi."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadratic import discriminant, roots as quadratic_roots
from .reduction import Target, deflate, reduce_to_cubic
from .trig import QUARTER_PI, SQRT2, TWO_PI, CosBranch, solve_cos

#: Range of the six-term sum: (-inf, GAP_LOW] union [GAP_HIGH, +inf).
#: No target strictly between the two is attainable.
GAP_LOW = 1.0 - 2.0 * SQRT2
GAP_HIGH = 2.0 + 3.0 * SQRT2

# Thresholds, in m = -c, of the both-roots-inside test on (-sqrt2, sqrt2):
# endpoint positivity of the deflated quadratic bounds m on each side, and
# the vertex condition bounds it again.
M_ENDPOINT_MAX = (4.0 + SQRT2) / (1.0 + SQRT2)    # =  3*sqrt2 - 2  ~  2.242640687
M_ENDPOINT_MIN = -(4.0 - SQRT2) / (SQRT2 - 1.0)   # = -(3*sqrt2 + 2) ~ -6.242640687
M_VERTEX_MIN = 1.0 - 2.0 * SQRT2                  # ~ -1.828427125
M_VERTEX_MAX = 1.0 + 2.0 * SQRT2                  # ~  3.828427125

#: Admissibility tolerance for real (non-integer) targets: roots this close
#: to +/-sqrt2 snap onto the endpoint, roots this close to +/-1 are dropped.
ROOT_TOL = 1e-12
#: Residue offsets closer than this collapse into one class.
RESIDUE_DEDUP_TOL = 1e-12
#: Relative window for treating a tiny float discriminant as zero.
_DISC_SNAP = 1e-14


@dataclass(frozen=True)
class AdmissibleRoot:
    """A value the sum S = sin x + cos x can actually take: r in
    [-sqrt2, sqrt2] with r not in {-1, 1}, and phi = arccos(r/sqrt2)."""

    r: float
    phi: float
    multiplicity: int = 1


@dataclass(frozen=True)
class ResidueClass:
    """Solution class {offset + 2*K*pi : K integer}, offset in [0, 2*pi)."""

    offset: float
    form: str  # e.g. "pi/4 + phi"


@dataclass(frozen=True)
class SolutionFamily:
    target: Target
    roots: tuple[AdmissibleRoot, ...]
    residues: tuple[ResidueClass, ...]

    @property
    def offsets(self) -> tuple[float, ...]:
        return tuple(rc.offset for rc in self.residues)

    @property
    def is_empty(self) -> bool:
        return not self.residues


def angle_of_root(r: float) -> float:
    """phi in [0, pi] with sqrt(2)*cos(phi) = r."""
    if abs(r) > SQRT2:
        raise ValueError(f"|r| exceeds sqrt(2): {r!r}")
    return math.acos(min(1.0, max(-1.0, r / SQRT2)))


def _s_roots(t: Target) -> list[tuple[float, int]]:
    """Roots of the deflated quadratic with multiplicity, before the
    admissibility filter."""
    quad = deflate(reduce_to_cubic(t))
    if t.is_integer:
        disc = t.m * t.m + 2 * t.m - 7  # exact integer arithmetic
        if disc < 0:
            return []
        if disc == 0:  # impossible for integer m; kept for totality
            return [(-quad.b / 2.0, 2)]
        return [(r, 1) for r in quadratic_roots(quad)]
    disc = discriminant(quad)
    scale = max(1.0, quad.b * quad.b, abs(4.0 * quad.c))
    if abs(disc) <= _DISC_SNAP * scale:
        return [(-quad.b / 2.0, 2)]
    if disc < 0.0:
        return []
    return [(r, 1) for r in quadratic_roots(quad)]


def admissible_roots(t: Target) -> list[AdmissibleRoot]:
    """Deflated-quadratic roots that S can attain, ascending in r.

    Keeps roots in the closed interval [-sqrt2, sqrt2]; a root within
    ROOT_TOL of an endpoint snaps onto it, so boundary targets produce the
    exact merged residue.  The excluded values +/-1 are dropped -- by exact
    comparison for integer targets (r = -1 occurs only at m = 2, where the
    arithmetic is exact) and within ROOT_TOL otherwise.  Endpoints are
    provably unreachable for integer targets, where the quadratic has
    integer coefficients and sqrt2 is irrational, so the closed interval is
    harmless there.
    """
    out = []
    for r, mult in _s_roots(t):
        if abs(r - SQRT2) <= ROOT_TOL:
            r = SQRT2
        elif abs(r + SQRT2) <= ROOT_TOL:
            r = -SQRT2
        elif abs(r) > SQRT2:
            continue
        if t.is_integer:
            if r == -1.0 or r == 1.0:
                continue
        elif abs(r - 1.0) <= ROOT_TOL or abs(r + 1.0) <= ROOT_TOL:
            continue
        r = r + 0.0  # normalize -0.0
        out.append(AdmissibleRoot(r, angle_of_root(r), mult))
    return sorted(out, key=lambda ar: ar.r)


def _mod_two_pi(x: float) -> float:
    off = math.fmod(x, TWO_PI)
    if off < 0.0:
        off += TWO_PI
    if off >= TWO_PI:  # rounding can push a just-below value onto 2*pi
        off = 0.0
    return off


def _residues_for(root: AdmissibleRoot, tag: str) -> list[ResidueClass]:
    # cos(x - pi/4) = r/sqrt2, so x = pi/4 + (solutions of cos y = r/sqrt2)
    fam = solve_cos(min(1.0, max(-1.0, root.r / SQRT2)))
    if fam.branch is CosBranch.EVEN_MULTIPLES:  # r = sqrt2, phi = 0
        return [ResidueClass(_mod_two_pi(QUARTER_PI), "pi/4")]
    if fam.branch is CosBranch.ODD_MULTIPLES:   # r = -sqrt2, phi = pi
        return [ResidueClass(_mod_two_pi(QUARTER_PI + math.pi), "pi/4 + pi")]
    theta = fam.theta
    return [
        ResidueClass(_mod_two_pi(QUARTER_PI + theta), f"pi/4 + {tag}"),
        ResidueClass(_mod_two_pi(QUARTER_PI - theta), f"pi/4 - {tag}"),
    ]


def _solve(t: Target) -> SolutionFamily:
    ad = admissible_roots(t)
    many = len(ad) > 1
    classes: list[ResidueClass] = []
    for i, root in enumerate(ad, start=1):
        tag = f"phi_{i}" if many else "phi"
        for rc in _residues_for(root, tag):
            if any(abs(rc.offset - ex.offset) <= RESIDUE_DEDUP_TOL
                   for ex in classes):
                continue
            classes.append(rc)
    classes.sort(key=lambda rc: rc.offset)
    return SolutionFamily(t, tuple(ad), tuple(classes))


def solve_real(c: float) -> SolutionFamily:
    """Solution family for a real right-hand side.

    Empty exactly when c falls in the open attainment gap
    (GAP_LOW, GAP_HIGH); both endpoints are attained.  Each admissible
    S-root r contributes the residues (pi/4 +/- arccos(r/sqrt2)) mod 2*pi,
    merged into one class when the arccos is 0 or pi.
    """
    return _solve(Target(float(c)))


def _selected_root(n: int) -> float:
    # Conjugate forms of (n+1 +/- sqrt(n^2-2n-7))/2 avoid the subtractive
    # cancellation that grows with |n|.
    d = math.sqrt(float(n * n - 2 * n - 7))
    if n <= -3:
        return (2.0 * n + 4.0) / (n + 1.0 - d)  # = (n+1+d)/2
    return (2.0 * n + 4.0) / (n + 1.0 + d)      # = (n+1-d)/2, n >= 7


def solve_integer(n: int) -> SolutionFamily:
    """Solution family for an integer right-hand side.

    Runs the general pipeline in exact integer arithmetic where it matters,
    then checks the integer case structure on the way out: empty iff
    -1 <= n <= 6; exactly one surviving root otherwise, equal to
    (n+1+sqrt(n^2-2n-7))/2 for n <= -3, to 0 for n = -2, and to
    (n+1-sqrt(n^2-2n-7))/2 for n >= 7.
    """
    if not isinstance(n, int):
        raise TypeError(f"expected int, got {type(n).__name__}")
    fam = _solve(Target(n))
    if -1 <= n <= 6:
        assert fam.is_empty, f"expected no solutions for n = {n}"
        return fam
    assert not fam.is_empty, f"expected solutions for n = {n}"
    assert len(fam.roots) == 1, fam.roots
    got = fam.roots[0].r
    if n == -2:
        assert got == 0.0, got
    else:
        expected = _selected_root(n)
        assert abs(got - expected) <= 1e-12, (n, got, expected)
    return fam


def enumerate_solutions(fam: SolutionFamily, k_lo: int, k_hi: int) -> list[float]:
    """All residues shifted by 2*K*pi for K in [k_lo, k_hi], ascending."""
    if k_lo > k_hi:
        raise ValueError(f"need k_lo <= k_hi, got {k_lo} > {k_hi}")
    vals = [off + TWO_PI * k
            for k in range(k_lo, k_hi + 1) for off in fam.offsets]
    vals.sort()
    return vals


@dataclass(frozen=True)
class AbsoluteFamily:
    """Solutions of six-sum(|x|) = c: x solves it iff |x| is a solution of
    the plain equation, so the set is closed under negation."""

    family: SolutionFamily

    @property
    def is_empty(self) -> bool:
        return self.family.is_empty

    def branch_forms(self) -> list[str]:
        """The sign-combination branches, e.g. 'x = +(2K*pi + pi/4 + phi)'."""
        return [f"x = {sign}(2K*pi + {rc.form})"
                for rc in self.family.residues for sign in ("+", "-")]

    def enumerate_within(self, bound: float) -> list[float]:
        """All solutions in [-bound, bound], ascending."""
        if bound <= 0.0:
            raise ValueError("bound must be positive")
        pos = []
        for off in self.family.offsets:
            y = off
            while y <= bound:
                if y > 0.0:
                    pos.append(y)
                y += TWO_PI
        return sorted([-y for y in pos] + pos)


def solve_abs(c: float) -> AbsoluteFamily:
    """Describe all x with six-sum(|x|) = c."""
    return AbsoluteFamily(solve_real(c))
