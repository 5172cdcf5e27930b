import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixtrig.trig import (CosBranch, DomainKind, SingularInputError,
                          classify_domain, evaluate, product_from_sum,
                          sin_plus_cos, solve_cos)

SQRT2 = math.sqrt(2.0)


class TestClassifyDomain:
    def test_lattice_points(self):
        assert classify_domain(math.pi, 1e-12).kind is DomainKind.SINGULAR_SIN
        assert classify_domain(math.pi / 2).kind is DomainKind.SINGULAR_COS
        assert classify_domain(0.0).kind is DomainKind.SINGULAR_SIN
        assert classify_domain(-7 * math.pi).kind is DomainKind.SINGULAR_SIN

    def test_midpoint_of_lattice_gap(self):
        status = classify_domain(math.pi / 4)
        assert status.kind is DomainKind.VALID
        assert status.distance == pytest.approx(math.pi / 4, abs=1e-15)

    def test_near_singular_band(self):
        status = classify_domain(math.pi + 1e-9, near_tol=1e-6)
        assert status.kind is DomainKind.NEAR_SINGULAR
        assert status.distance == pytest.approx(1e-9, rel=1e-6)
        # outside the band it is valid again
        assert classify_domain(math.pi + 1e-3, near_tol=1e-6).is_valid

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            classify_domain(1.0, tol=0.0)
        with pytest.raises(ValueError):
            classify_domain(float("nan"))
        with pytest.raises(ValueError):
            classify_domain(float("inf"))


class TestEvaluate:
    def test_quarter_pi(self):
        # sin = cos = sqrt2/2, sec = csc = sqrt2, tan = cot = 1
        assert evaluate(math.pi / 4) == pytest.approx(2.0 + 3.0 * SQRT2,
                                                      abs=1e-12)

    def test_minus_quarter_pi(self):
        # sin+cos and sec+csc cancel, tan + cot = -2
        assert evaluate(-math.pi / 4) == pytest.approx(-2.0, abs=1e-12)

    def test_three_quarter_pi(self):
        assert evaluate(3 * math.pi / 4) == pytest.approx(-2.0, abs=1e-12)

    def test_rejects_singular(self):
        with pytest.raises(SingularInputError) as exc_info:
            evaluate(math.pi)
        assert exc_info.value.status.kind is DomainKind.SINGULAR_SIN
        with pytest.raises(SingularInputError):
            evaluate(math.pi / 2)

    def test_refuses_near_singular_guard_band(self):
        x = math.pi + 1e-9
        evaluate(x)  # fine with the default tolerance
        with pytest.raises(SingularInputError) as exc_info:
            evaluate(x, near_tol=1e-6)
        assert exc_info.value.status.kind is DomainKind.NEAR_SINGULAR


class TestSinPlusCos:
    def test_known_values(self):
        assert sin_plus_cos(math.pi / 4) == pytest.approx(SQRT2, abs=1e-15)
        assert sin_plus_cos(3 * math.pi / 4) == pytest.approx(0.0, abs=1e-15)
        assert sin_plus_cos(0.0) == pytest.approx(1.0, abs=1e-15)

    @given(st.floats(-1000.0, 1000.0))
    def test_phase_shift_identity(self, x):
        expected = SQRT2 * math.cos(x - math.pi / 4)
        assert abs(sin_plus_cos(x) - expected) <= 1e-12

    @given(st.floats(-1e6, 1e6))
    def test_pythagorean_anchor(self, x):
        assert abs(math.sin(x) ** 2 + math.cos(x) ** 2 - 1.0) <= 1e-15


class TestProductFromSum:
    @pytest.mark.parametrize("s, expected", [
        (1.0, 0.0),
        (SQRT2, 0.5),
        (0.0, -0.5),  # matches sin(3pi/4)*cos(3pi/4)
    ])
    def test_known_values(self, s, expected):
        assert product_from_sum(s) == pytest.approx(expected, abs=1e-15)

    def test_matches_direct_product_at_three_quarter_pi(self):
        x = 3 * math.pi / 4
        direct = math.sin(x) * math.cos(x)
        assert product_from_sum(sin_plus_cos(x)) == pytest.approx(
            direct, abs=1e-15)
        assert direct == pytest.approx(-0.5, abs=1e-15)

    @given(st.floats(-1e6, 1e6))
    def test_identity_everywhere(self, x):
        lhs = math.sin(x) * math.cos(x)
        assert abs(lhs - product_from_sum(sin_plus_cos(x))) <= 1e-12


class TestSolveCos:
    def test_out_of_range(self):
        assert solve_cos(2.0).branch is CosBranch.NO_SOLUTION
        assert solve_cos(-1.5).branch is CosBranch.NO_SOLUTION
        assert solve_cos(2.0).offsets() == ()

    def test_boundary_values(self):
        assert solve_cos(1.0).branch is CosBranch.EVEN_MULTIPLES
        assert solve_cos(1.0).offsets() == (0.0,)
        assert solve_cos(-1.0).branch is CosBranch.ODD_MULTIPLES
        assert solve_cos(-1.0).offsets() == (math.pi,)

    def test_zero(self):
        fam = solve_cos(0.0)
        assert fam.branch is CosBranch.PLUS_MINUS
        assert fam.theta == pytest.approx(math.pi / 2, abs=1e-15)

    @given(st.floats(-1.0, 1.0, exclude_min=True, exclude_max=True))
    @settings(max_examples=300)
    def test_theta_inverts_cosine(self, b):
        fam = solve_cos(b)
        assert fam.branch is CosBranch.PLUS_MINUS
        assert 0.0 < fam.theta < math.pi
        assert abs(math.cos(fam.theta) - b) <= 1e-15
        lo, hi = fam.offsets()
        assert 0.0 <= lo < hi < 2 * math.pi
