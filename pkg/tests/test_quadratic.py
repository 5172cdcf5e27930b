import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixtrig.quadratic import (Interval, Placement, Quadratic,
                               RootLocationKind, both_roots_inside,
                               discriminant, locate, one_inside_one_outside,
                               roots)

SQRT2 = math.sqrt(2.0)

leading = st.floats(-10.0, 10.0).filter(lambda a: abs(a) >= 0.1)


def test_constructor_rejects_degenerate():
    with pytest.raises(ValueError):
        Quadratic(0.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        Interval(1.0, 1.0)
    with pytest.raises(ValueError):
        Interval(2.0, -2.0)


@pytest.mark.parametrize("q, expected", [
    (Quadratic(1, 2, -1), 8.0),
    (Quadratic(1, 0, 1), -4.0),
    (Quadratic(1, -2, 1), 0.0),
])
def test_discriminant(q, expected):
    assert discriminant(q) == expected


class TestRoots:
    def test_two_roots(self):
        got = roots(Quadratic(1, 2, -1))
        assert got == pytest.approx([-1 - SQRT2, -1 + SQRT2], abs=1e-15)

    def test_factored_pair(self):
        assert roots(Quadratic(1, 1, 0)) == [-1.0, 0.0]

    def test_no_real_roots(self):
        assert roots(Quadratic(1, 0, 1)) == []

    def test_double_root(self):
        assert roots(Quadratic(1, -2, 1)) == [1.0]

    def test_zero_linear_coefficient(self):
        # second root comes from c/q*, which rounds one ulp off sqrt2
        assert roots(Quadratic(1, 0, -2)) == pytest.approx([-SQRT2, SQRT2],
                                                           rel=1e-15)

    def test_stability_under_cancellation(self):
        # naive (-b + sqrt(D))/2a loses most digits here; c/q* must not
        q = Quadratic(1.0, -1e8, 1.0)
        small, big = roots(q)
        assert small == pytest.approx(1e-8, rel=1e-12)
        assert big == pytest.approx(1e8, rel=1e-12)

    @given(leading, st.floats(-5.0, 5.0), st.floats(-5.0, 5.0))
    @settings(max_examples=300)
    def test_vieta(self, a, p1, p2):
        q = Quadratic(a, -a * (p1 + p2), a * p1 * p2)
        if discriminant(q) <= 0:
            return
        r1, r2 = roots(q)
        sum_scale = abs(q.a) * (abs(r1) + abs(r2)) + abs(q.b)
        prod_scale = abs(q.a * r1 * r2) + abs(q.c)
        assert abs((r1 + r2) * q.a + q.b) <= 1e-12 * max(1.0, sum_scale)
        assert abs(r1 * r2 * q.a - q.c) <= 1e-12 * max(1.0, prod_scale)


class TestPredicates:
    def test_both_inside_factored_case(self):
        # roots 0 and -1 sit inside (-sqrt2, sqrt2)
        assert both_roots_inside(Quadratic(1, 1, 0), Interval(-SQRT2, SQRT2))

    def test_both_inside_rejects_wide_roots(self):
        # roots +/-2 sit outside
        assert not both_roots_inside(Quadratic(1, 0, -4),
                                     Interval(-SQRT2, SQRT2))

    def test_one_in_one_out(self):
        assert one_inside_one_outside(Quadratic(1, 0, -1),
                                      Interval(0.0, SQRT2))
        assert not one_inside_one_outside(Quadratic(1, 1, 0),
                                          Interval(-SQRT2, SQRT2))

    def test_agree_with_direct_membership(self):
        # brute-force oracle: extract roots, test membership directly
        rng = random.Random(90125)
        checked = 0
        while checked < 2000:
            a = rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 10.0)
            if checked % 4 == 0:  # no real roots
                b = rng.uniform(-5.0, 5.0)
                c = (b * b + rng.uniform(0.5, 4.0)) / (4.0 * a)
            else:
                p1, p2 = rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)
                b = -a * (p1 + p2)
                c = a * p1 * p2
            q = Quadratic(a, b, c)
            lo = rng.uniform(-3.5, 3.0)
            iv = Interval(lo, lo + rng.uniform(0.5, 3.0))
            rs = roots(q)
            if any(min(abs(r - iv.lo), abs(r - iv.hi)) < 1e-6 for r in rs):
                continue
            inside = [r for r in rs if iv.contains(r)]
            outside = [r for r in rs if r < iv.lo or r > iv.hi]
            expect_both = len(rs) == 2 and len(inside) == 2
            expect_split = len(inside) == 1 and len(outside) == 1
            assert both_roots_inside(q, iv) == expect_both, (q, iv)
            assert one_inside_one_outside(q, iv) == expect_split, (q, iv)
            checked += 1


class TestLocate:
    def test_one_in_one_out_example(self):
        loc = locate(Quadratic(1, 2, -1), Interval(-SQRT2, SQRT2))
        assert loc.kind is RootLocationKind.TWO_ROOTS
        assert loc.roots == pytest.approx((-1 - SQRT2, -1 + SQRT2), abs=1e-15)
        assert loc.placements == (Placement.OUTSIDE, Placement.INSIDE)

    def test_double_root_inside(self):
        loc = locate(Quadratic(1, -2, 1), Interval(0.0, 2.0))
        assert loc.kind is RootLocationKind.DOUBLE_ROOT
        assert loc.roots == (1.0,)
        assert loc.placements == (Placement.INSIDE,)

    def test_roots_exactly_on_boundary(self):
        loc = locate(Quadratic(1, 0, -2), Interval(-SQRT2, SQRT2))
        assert loc.placements == (Placement.ON_BOUNDARY, Placement.ON_BOUNDARY)

    def test_zero_guard_band_with_exact_roots(self):
        # integer roots land exactly, so tol = 0 still flags the boundary
        loc = locate(Quadratic(1, -1, 0), Interval(0.0, 2.0),
                     boundary_tol=0.0)
        assert loc.roots == (0.0, 1.0)
        assert loc.placements == (Placement.ON_BOUNDARY, Placement.INSIDE)

    def test_no_real_roots(self):
        loc = locate(Quadratic(1, 0, 1), Interval(0.0, 1.0))
        assert loc.kind is RootLocationKind.NO_REAL_ROOTS
        assert loc.roots == ()

    def test_rejects_negative_boundary_tol(self):
        with pytest.raises(ValueError):
            locate(Quadratic(1, 0, -1), Interval(0.0, 2.0), boundary_tol=-1.0)

    def test_predicates_consistent_with_locate_exact_cases(self):
        # integer-coefficient cases, zero guard band
        q_in = Quadratic(1, 1, 0)
        iv = Interval(-SQRT2, SQRT2)
        assert both_roots_inside(q_in, iv)
        loc = locate(q_in, iv, boundary_tol=0.0)
        assert loc.placements == (Placement.INSIDE, Placement.INSIDE)

        q_split = Quadratic(1, 0, -1)
        iv2 = Interval(0.0, SQRT2)
        assert one_inside_one_outside(q_split, iv2)
        loc2 = locate(q_split, iv2, boundary_tol=0.0)
        assert set(loc2.placements) == {Placement.INSIDE, Placement.OUTSIDE}

    def test_scale_invariance(self):
        rng = random.Random(5517)
        for _ in range(1000):
            a = rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 10.0)
            p1, p2 = rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)
            q = Quadratic(a, -a * (p1 + p2), a * p1 * p2)
            lo = rng.uniform(-3.5, 3.0)
            iv = Interval(lo, lo + rng.uniform(0.5, 3.0))
            if any(min(abs(r - iv.lo), abs(r - iv.hi)) < 1e-6
                   for r in roots(q)):
                continue
            alpha = rng.choice([-1.0, 1.0]) * 10.0 ** rng.uniform(-3.0, 3.0)
            base = locate(q, iv)
            scaled = locate(q.scaled(alpha), iv)
            assert scaled.kind is base.kind
            assert scaled.placements == base.placements
            assert scaled.roots == pytest.approx(base.roots, rel=1e-9)
