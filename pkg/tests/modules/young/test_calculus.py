import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from src.core.exceptions import (
    ConvexityError,
    DegenerateFunctionError,
    DomainError,
    UnboundedOnRangeError,
)
from src.modules.young.models import Family, YoungFunction
from src.modules.young.services.calculus import (
    certify_convexity,
    complementary,
    complementary_array,
    conjugate,
    custom,
    evaluate,
    is_delta2,
    make_phi_p_gamma,
    power,
    small_x_slope,
)


class TestEvaluate:
    def test_power(self, power2):
        assert evaluate(power2, 3) == 9.0
        assert evaluate(power2, -3) == 9.0

    def test_powerlog_at_zero(self):
        assert evaluate(make_phi_p_gamma(3, 1), 0) == 0.0

    def test_powerlog_at_one(self):
        assert evaluate(make_phi_p_gamma(2, 1), 1) == pytest.approx(math.log(2), rel=1e-15)

    @pytest.mark.parametrize("x", [math.inf, -math.inf, math.nan])
    def test_non_finite_rejected(self, power2, x):
        with pytest.raises(DomainError):
            evaluate(power2, x)


class TestFamilies:
    @pytest.mark.parametrize("p,gamma,member", [(3, 0, True), (1, 0, False), (2, 1, True), (2, 0, False)])
    def test_omega_membership(self, p, gamma, member):
        phi = make_phi_p_gamma(p, gamma)
        assert phi.certificate.passed
        assert phi.omega_member is member

    def test_parameter_ranges(self):
        with pytest.raises(DomainError):
            make_phi_p_gamma(0.5, 0)
        with pytest.raises(DomainError):
            make_phi_p_gamma(2, -1)
        with pytest.raises(DomainError):
            power(math.nan)

    def test_custom_expression(self):
        phi = custom("abs(x) + x^2")
        assert phi(2.0) == pytest.approx(6.0)
        assert phi.family.kind == "custom"

    def test_custom_exponential_near_zero(self):
        phi = custom("exp(abs(x)) - 1")
        assert phi.certificate.passed
        assert phi(1e-6) == pytest.approx(1e-6, rel=1e-6)

    def test_custom_rejects_non_even(self):
        with pytest.raises(ConvexityError) as info:
            custom("x^2 - x")
        assert info.value.context["certificate"]["even"] is False

    def test_custom_rejects_concave(self):
        with pytest.raises(ConvexityError) as info:
            custom("abs(x)^(1/2)")
        assert info.value.context["x"] is not None

    @pytest.mark.parametrize("text", ["x + y", "sin(x)", "x +"])
    def test_custom_outside_grammar(self, text):
        with pytest.raises(DomainError):
            custom(text)

    def test_certificate_fields(self):
        certificate = certify_convexity(lambda t: np.abs(t) ** 3)
        assert certificate.passed
        assert certificate.grid_points == 512
        assert certificate.h_scales == 8
        assert certificate.min_scaled_second_difference >= -1e-12


class TestComplementary:
    def test_power2_complete_square(self, power2):
        assert complementary(power2, 2.0) == pytest.approx(1.0, abs=1e-10)

    def test_at_zero(self, power3):
        assert complementary(power3, 0.0) == 0.0

    def test_power3_calculus_value(self, power3):
        assert complementary(power3, 1.0) == pytest.approx(2 / (3 * math.sqrt(3)), abs=1e-10)

    def test_values_are_lower_bounds(self, power2):
        xs = np.linspace(0.0, 20.0, 41)
        assert np.all(complementary_array(power2, xs) <= xs**2 / 4 + 1e-12)

    def test_unbounded_on_range(self):
        with pytest.raises(UnboundedOnRangeError):
            complementary(power(1.0), 2.0)

    def test_order_reversing(self):
        smaller, larger = custom("x^2"), custom("2*x^2")
        xs = np.linspace(0.0, 10.0, 21)
        assert np.all(complementary_array(smaller, xs) >= complementary_array(larger, xs) - 1e-12)

    @hsettings(max_examples=50, deadline=None)
    @given(
        x=st.floats(min_value=0.0, max_value=50.0, allow_nan=False),
        y=st.floats(min_value=0.0, max_value=50.0, allow_nan=False),
    )
    def test_youngs_inequality(self, x, y):
        phi = power(3.0)
        assert x * y <= phi(x) + complementary(phi, y) + 1e-9 * (1.0 + x * y)

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [2.0, 3.0, 4.0])
    def test_biconjugation(self, p):
        phi = power(p)
        xs = np.geomspace(0.1, 10.0, 64)
        back = complementary_array(conjugate(phi), xs)
        assert np.allclose(back, xs**p, rtol=1e-6, atol=0.0)

    def test_conjugate_is_a_young_function_value(self, power2):
        psi = conjugate(power2)
        assert psi(4.0) == pytest.approx(4.0, abs=1e-9)
        assert psi.to_spec() == {"conjugate_of": {"family": "power", "params": {"p": 2.0}}}
        assert psi.certificate is None


class TestDelta2:
    def test_cubic_certificate(self):
        report = is_delta2(make_phi_p_gamma(3, 0))
        assert report.status == "certificate"
        assert report.k_estimate == pytest.approx(8.0, rel=1e-12)
        assert report.asymptotic_ratio == 8.0
        assert report.evidence.startswith("numeric")

    def test_powerlog_ratio_tends_to_four(self):
        report = is_delta2(make_phi_p_gamma(2, 1))
        assert report.status == "certificate"
        assert report.asymptotic_ratio == 4.0
        assert 4.0 <= report.tail_ratio < 4.2

    def test_exponential_refuted(self):
        report = is_delta2(custom("exp(abs(x)) - 1"))
        assert report.status == "refutation"
        assert report.t_witness is not None

    def test_degenerate(self):
        flat = YoungFunction(
            name="flat", evaluator=lambda t: np.maximum(np.abs(t) - 1.0, 0.0), family=Family(kind="custom")
        )
        with pytest.raises(DegenerateFunctionError):
            is_delta2(flat)

    def test_negative_t0(self, power2):
        with pytest.raises(DomainError):
            is_delta2(power2, t0=-1.0)


class TestSmallSlope:
    def test_positive(self):
        report = small_x_slope(custom("abs(x) + x^2"))
        assert report.status == "positive"
        assert report.infimum == pytest.approx(1.0, rel=1e-9)
        assert report.monotone

    def test_power2_zero(self, power2):
        assert small_x_slope(power2).status == "zero"

    def test_powerlog_zero(self):
        assert small_x_slope(make_phi_p_gamma(3, 1)).status == "zero"

    def test_grid_must_decrease(self, power2):
        with pytest.raises(DomainError):
            small_x_slope(power2, [0.1, 0.2])
