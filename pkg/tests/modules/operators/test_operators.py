import math

import numpy as np
import pytest

from src.core.config import settings
from src.core.exceptions import DomainError
from src.modules.hypergroup.models import FiniteMeasure
from src.modules.hypergroup.services.builders import make_chebyshev, make_cyclic, make_integers
from src.modules.operators.commands import random_functions
from src.modules.operators.services.operators import (
    apply_T,
    apply_T_measure,
    bound_check,
    criterion_profile,
    criterion_value,
    default_windows,
    finite_rank_gap,
    psi_delta2_warning,
)
from src.modules.orlicz.models import OrliczFunction, exponential_weight
from src.modules.orlicz.services.norms import l1_norm, luxemburg_norm
from src.modules.young.services.calculus import power


def delta(H, x=0):
    return OrliczFunction.indicator(H, [x])


class TestApply:
    def test_identity(self, chebyshev):
        g = OrliczFunction(chebyshev, {0: 1.0, 2: -0.5, 3: 2.0})
        result = apply_T(chebyshev, g, OrliczFunction.identity_delta(chebyshev))
        assert result.values == pytest.approx(g.values)

    def test_norm_of_point_mass_on_integers(self, integers, power2):
        g, f = delta(integers), delta(integers, 3)
        lhs = luxemburg_norm(power2, apply_T(integers, g, f))
        assert lhs == pytest.approx(criterion_value(integers, g, power2, x=0, norm="luxemburg") * l1_norm(f))
        assert lhs == pytest.approx(1.0)

    def test_linearity(self, chebyshev):
        rng = np.random.default_rng(3)
        f1, f2, g = random_functions(chebyshev, rng, 3, radius=5)
        combined = apply_T(chebyshev, g, f1.scale(2.0) + f2)
        separate = apply_T(chebyshev, g, f1).scale(2.0) + apply_T(chebyshev, g, f2)
        for x in set(combined.support) | set(separate.support):
            assert combined(x) == pytest.approx(separate(x), abs=1e-12)

    def test_measure_at_identity(self, chebyshev):
        g = OrliczFunction(chebyshev, {1: 1.0, 4: 3.0})
        assert apply_T_measure(chebyshev, g, FiniteMeasure.point(0)).values == pytest.approx(g.values)

    def test_measure_shift_on_integers(self, integers):
        g = OrliczFunction(integers, {0: 1.0, 1: 2.0})
        shifted = apply_T_measure(integers, g, FiniteMeasure.point(3))
        assert shifted.values == pytest.approx({3: 1.0, 4: 2.0})

    def test_measure_matches_function(self, chebyshev):
        rng = np.random.default_rng(11)
        for _ in range(20):
            f, g = random_functions(chebyshev, rng, 2, radius=6)
            mu = FiniteMeasure.from_mapping({y: v * float(chebyshev.haar(y)) for y, v in f.values.items()})
            expected = apply_T(chebyshev, g, f)
            actual = apply_T_measure(chebyshev, g, mu)
            for x in set(expected.support) | set(actual.support):
                assert actual(x) == pytest.approx(expected(x), abs=1e-12)


class TestBoundCheck:
    @pytest.mark.parametrize("H", [make_integers(20), make_chebyshev(20)], ids=["integers", "chebyshev"])
    def test_random_functions(self, H, power3):
        rng = np.random.default_rng(2024)
        (g,) = random_functions(H, rng, 1, radius=5)
        for f in random_functions(H, rng, 100, radius=5):
            check = bound_check(H, g, f, power3, norm="luxemburg")
            assert check.passed
            assert check.rhs == pytest.approx(check.constant * check.l1_norm)

    def test_empty_function(self, integers, power2):
        check = bound_check(integers, delta(integers), OrliczFunction(integers, {}), power2)
        assert check.lhs == 0.0
        assert check.constant == 0.0
        assert check.passed


class TestCriterionProfile:
    def test_integers_fail_to_vanish(self, integers, power2):
        profile = criterion_profile(integers, delta(integers), power2, norm="luxemburg")
        assert profile.values == pytest.approx([1.0] * len(profile.points))
        assert profile.verdict == "FailsToVanish"
        assert any("isometry" in c for c in profile.certificates)
        assert profile.windows == default_windows(20)

    def test_large_window_is_flat(self, power2):
        H = make_integers(100)
        profile = criterion_profile(H, delta(H), power2, norm="luxemburg")
        assert len(profile.points) == 201
        assert max(profile.values) - min(profile.values) < 1e-12

    def test_orlicz_norm_default(self, integers, power2):
        profile = criterion_profile(integers, delta(integers), power2)
        assert profile.norm == "orlicz"
        assert profile.values == pytest.approx([2.0] * len(profile.points), rel=1e-8)
        assert profile.verdict == "FailsToVanish"

    def test_chebyshev(self, chebyshev, power2):
        profile = criterion_profile(chebyshev, delta(chebyshev), power2, norm="luxemburg")
        assert profile.values[0] == pytest.approx(1.0)
        for x, value in zip(profile.points[1:], profile.values[1:]):
            assert value == pytest.approx(1 / math.sqrt(2), rel=1e-11), x
        assert profile.verdict == "FailsToVanish"
        assert not any("isometry" in c for c in profile.certificates)

    @pytest.mark.parametrize("options", [{"probe_radius": 1}, {"windows": [50]}, {"windows": [5, 20]}])
    def test_windows_must_sit_inside_the_probe_ball(self, integers, power2, options):
        with pytest.raises(DomainError):
            criterion_profile(integers, delta(integers), power2, norm="luxemburg", **options)

    def test_cyclic_vanishes(self, power2):
        H = make_cyclic(7)
        profile = criterion_profile(H, delta(H), power2, norm="luxemburg")
        assert profile.verdict == "VanishesNumerically"
        assert profile.tail_sups[-1] == 0.0

    def test_tail_sups_nonincreasing(self, chebyshev, power3):
        g = OrliczFunction(chebyshev, {0: 1.0, 1: -2.0, 5: 0.5})
        profile = criterion_profile(chebyshev, g, power3)
        assert all(b <= a for a, b in zip(profile.tail_sups, profile.tail_sups[1:]))
        assert all(v >= 0 for v in profile.values)

    def test_verdict_stable_under_epsilon(self, integers, power2):
        eps = settings.VANISH_EPSILON
        verdicts = {
            criterion_profile(integers, delta(integers), power2, norm="luxemburg", epsilon=e).verdict
            for e in (eps, 2 * eps)
        }
        assert verdicts == {"FailsToVanish"}

    def test_epsilon_above_tail(self, integers, power2):
        profile = criterion_profile(integers, delta(integers), power2, norm="luxemburg", epsilon=2.0)
        assert profile.verdict == "VanishesNumerically"

    def test_symmetric_weight_keeps_constant(self, integers, power2):
        profile = criterion_profile(integers, delta(integers), power2, exponential_weight(0.1), norm="luxemburg")
        assert profile.values == pytest.approx([1.0] * len(profile.points))
        assert not any("isometry" in c for c in profile.certificates)


class TestFiniteRankGap:
    def test_constant_on_integers(self, integers, power2):
        assert finite_rank_gap(integers, delta(integers), power2, window=5, norm="luxemburg") == pytest.approx(1.0)

    def test_monotone_in_window(self, chebyshev, power3):
        g = OrliczFunction(chebyshev, {0: 1.0, 2: 1.0})
        gaps = [finite_rank_gap(chebyshev, g, power3, window=r) for r in (2, 5, 10, 15)]
        assert all(b <= a for a, b in zip(gaps, gaps[1:]))

    def test_whole_finite_carrier(self, power2):
        H = make_cyclic(7)
        assert finite_rank_gap(H, delta(H), power2, window=H.ball(20)) == 0.0


class TestPsiDelta2Warning:
    def test_quadratic(self, power2):
        warning = psi_delta2_warning(power2)
        assert warning.status == "certificate"
        assert not warning.warned

    def test_cubic(self, power3):
        assert psi_delta2_warning(power3).status == "certificate"

    def test_linear_is_undetermined(self):
        warning = psi_delta2_warning(power(1.0))
        assert warning.status == "undetermined"
        assert warning.warned
