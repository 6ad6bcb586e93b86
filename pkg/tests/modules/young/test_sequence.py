import math

import numpy as np
import pytest

from src.core.exceptions import MethodInapplicableError
from src.modules.young.serialization import witness_from_spec
from src.modules.young.services.calculus import make_phi_p_gamma, power
from src.modules.young.services.sequence import (
    analytic_tail,
    check_sequence_condition,
    closed_form_exponent,
    is_nonincreasing,
    lebesgue_pair_check,
    tail_bounds,
)
from src.modules.young.models import inverse_sqrt_witness

ZETA_3_2 = 2.612375348685488

NON_MONOTONE = {"alpha": {"kind": "expression", "expr": "exp(-n) + abs(n - 5)/n^2"}}


class TestSequenceCondition:
    def test_cubic_pair_satisfied(self, power3):
        verdict = check_sequence_condition(power3, power3, inverse_sqrt_witness(), horizon=10_000)
        assert verdict.verdict == "satisfied"
        assert verdict.phi1.partial_sum < ZETA_3_2
        assert verdict.phi1.tail_bound is not None
        assert verdict.product.partial_sum == pytest.approx(math.fsum(1 / n for n in range(1, 10_001)), rel=1e-12)
        assert verdict.product.partial_sum == pytest.approx(9.787606036, rel=1e-9)
        assert verdict.product_lower_bound <= verdict.product.partial_sum

    def test_quadratic_pair_fails(self, power2):
        verdict = check_sequence_condition(power2, power2)
        assert verdict.verdict == "witness_fails"
        assert "ΣΦ₁(α_n) diverges" in verdict.reasons

    def test_powerlog_pair_satisfied(self):
        phi = make_phi_p_gamma(2, 1)
        verdict = check_sequence_condition(phi, phi, horizon=10_000)
        assert verdict.verdict == "satisfied"
        assert verdict.phi1.decay_exponent == pytest.approx(1.5)
        assert verdict.phi1.exponent_source == "closed_form"

    def test_monotone_in_horizon(self, power3):
        assert check_sequence_condition(power3, power3, horizon=10_000).satisfied
        assert check_sequence_condition(power3, power3, horizon=20_000).satisfied

    def test_non_monotone_rule_with_integral_test(self, power3):
        with pytest.raises(MethodInapplicableError):
            check_sequence_condition(power3, power3, witness_from_spec(NON_MONOTONE))

    def test_partial_sums_only_is_inconclusive(self, power3):
        witness = witness_from_spec({**NON_MONOTONE, "tail_bound_method": "partial_sum_only"})
        verdict = check_sequence_condition(power3, power3, witness, horizon=1_000)
        assert verdict.verdict == "inconclusive"
        assert verdict.method == "partial_sum_only"

    def test_is_nonincreasing(self):
        assert is_nonincreasing(inverse_sqrt_witness().alpha, 100)
        assert not is_nonincreasing(witness_from_spec(NON_MONOTONE).alpha, 100)

    def test_closed_form_exponent(self, power3):
        assert closed_form_exponent(power3, inverse_sqrt_witness().alpha) == 1.5
        assert closed_form_exponent(make_phi_p_gamma(2, 1), inverse_sqrt_witness().alpha) == 1.5


class TestTailBounds:
    def test_cubic_tails_bracket_one_between_four_and_five(self, power3):
        tails = tail_bounds(power3, inverse_sqrt_witness().alpha)
        # tails[k] bounds Σ_{n >= k+1} n^{-3/2}
        assert tails[3] > 1.0 > tails[4]
        exact = ZETA_3_2 - math.fsum(n**-1.5 for n in range(1, 5))
        assert exact <= tails[4] <= exact + 1e-6

    def test_quadrature_tail_is_tight_without_a_closed_form(self):
        # PowerLog(3, 0) is |x|^3 but takes the numerical integration path
        tails = tail_bounds(make_phi_p_gamma(3, 0), inverse_sqrt_witness().alpha)
        exact = ZETA_3_2 - math.fsum(n**-1.5 for n in range(1, 5))
        assert exact <= tails[4] <= exact + 1e-6

    def test_closed_form_tail(self, power3):
        tail = analytic_tail(power3, inverse_sqrt_witness().alpha)
        assert tail(1e5) == pytest.approx(2.0 / math.sqrt(1e5), rel=1e-12)
        assert analytic_tail(make_phi_p_gamma(3, 1), inverse_sqrt_witness().alpha) is None

    def test_tails_are_nonincreasing(self, power3):
        tails = tail_bounds(power3, inverse_sqrt_witness().alpha, cutoff=1_000)
        assert np.all(np.diff(tails) <= 0)

    def test_divergent_tail_is_infinite(self, power2):
        tails = tail_bounds(power2, inverse_sqrt_witness().alpha, cutoff=100)
        assert np.all(np.isinf(tails))


@pytest.mark.parametrize("p,q,satisfied", [(3, 3, True), (2.5, 4, True), (2, 3, False), (1.5, 1.5, False)])
def test_lebesgue_pairs(p, q, satisfied):
    verdict, agrees = lebesgue_pair_check(p, q, horizon=10_000)
    assert agrees
    assert verdict.satisfied is satisfied
