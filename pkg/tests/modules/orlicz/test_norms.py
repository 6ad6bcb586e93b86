import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from src.core.exceptions import MethodInapplicableError
from src.modules.hypergroup.services.builders import make_chebyshev, make_cyclic, make_integers
from src.modules.orlicz.models import OrliczFunction, exponential_weight
from src.modules.orlicz.services.convolution import translate
from src.modules.orlicz.services.norms import (
    dual_sup_norm,
    holder_check,
    l1_norm,
    luxemburg_norm,
    modular,
    orlicz_norm,
)
from src.modules.young.services.calculus import power

CARRIERS = pytest.mark.parametrize(
    "carrier", [make_integers(20), make_cyclic(7), make_chebyshev(20)], ids=["integers", "cyclic7", "chebyshev"]
)

VALUES = st.floats(-5, 5, allow_nan=False).filter(lambda v: v == 0 or abs(v) > 1e-3)


def random_function(H, rng, radius=10, max_support=6):
    pool = H.ball(radius)
    size = int(rng.integers(1, max_support + 1))
    support = rng.choice(pool, size=size, replace=False)
    return OrliczFunction(H, {int(x): float(v) for x, v in zip(support, rng.normal(size=size))})


class TestModular:
    def test_indicator_on_integers(self, integers, power2):
        assert modular(power2, OrliczFunction.indicator(integers, range(4))) == 4.0

    def test_chebyshev_haar_weight(self, chebyshev, power2):
        assert modular(power2, OrliczFunction.indicator(chebyshev, [1])) == 2.0

    def test_block_function(self, power3):
        Z = make_integers(300)
        f = OrliczFunction(Z, {-3 * n: n**-0.5 for n in range(2, 101)})
        assert modular(power3, f) == pytest.approx(math.fsum(n**-1.5 for n in range(2, 101)), rel=1e-13)

    def test_weighted_convention(self, integers, power3):
        w = exponential_weight(0.3)
        f = OrliczFunction(integers, {-2: 0.5, 1: 1.5})
        fw = OrliczFunction(integers, {x: v * w(x) for x, v in f.values.items()})
        assert modular(power3, f, w) == pytest.approx(modular(power3, fw), rel=1e-14)
        assert luxemburg_norm(power3, f, w) == pytest.approx(luxemburg_norm(power3, fw), rel=1e-11)

    def test_zero(self, integers, power3):
        assert modular(power3, OrliczFunction(integers, {})) == 0.0


class TestLuxemburg:
    def test_zero(self, integers, power2):
        assert luxemburg_norm(power2, OrliczFunction(integers, {})) == 0.0

    def test_indicator_closed_form(self, integers, power2):
        assert luxemburg_norm(power2, OrliczFunction.indicator(integers, [0, 1, 2, 3])) == pytest.approx(2.0, rel=1e-11)

    def test_chebyshev_point(self, chebyshev, power2):
        assert luxemburg_norm(power2, OrliczFunction.indicator(chebyshev, [1])) == pytest.approx(math.sqrt(2), rel=1e-11)

    def test_homogeneity(self, integers, power3):
        rng = np.random.default_rng(0)
        for _ in range(20):
            f = random_function(integers, rng)
            assert luxemburg_norm(power3, f.scale(3.0)) == pytest.approx(3.0 * luxemburg_norm(power3, f), rel=1e-10)

    def test_gauge_attained(self, integers, power3):
        rng = np.random.default_rng(1)
        for _ in range(20):
            f = random_function(integers, rng)
            k = luxemburg_norm(power3, f)
            rho = modular(power3, f.scale(1.0 / k))
            assert 1.0 - 1e-9 <= rho <= 1.0

    def test_translation_isometry_on_groups(self, power3):
        rng = np.random.default_rng(2)
        for H in (make_integers(20), make_cyclic(7)):
            f = random_function(H, rng, radius=3)
            for z in H.ball(3):
                assert luxemburg_norm(power3, translate(H, z, f)) == pytest.approx(
                    luxemburg_norm(power3, f), rel=1e-12
                )

    @hsettings(max_examples=40, deadline=None)
    @given(
        a=st.lists(VALUES, min_size=3, max_size=3),
        b=st.lists(VALUES, min_size=3, max_size=3),
    )
    def test_triangle_inequality(self, a, b):
        Z = make_integers(5)
        phi = power(3.0)
        f = OrliczFunction(Z, dict(zip([0, 1, 2], a)))
        g = OrliczFunction(Z, dict(zip([1, 2, 3], b)))
        lhs = luxemburg_norm(phi, f + g)
        assert lhs <= (luxemburg_norm(phi, f) + luxemburg_norm(phi, g)) * (1 + 1e-9) + 1e-12
        assert orlicz_norm(phi, f + g) <= (orlicz_norm(phi, f) + orlicz_norm(phi, g)) * (1 + 1e-9) + 1e-12


class TestOrliczNorm:
    def test_zero(self, integers, power2):
        assert orlicz_norm(power2, OrliczFunction(integers, {})) == 0.0

    def test_amemiya_point_mass(self, integers, power2):
        assert orlicz_norm(power2, OrliczFunction.indicator(integers, [0])) == pytest.approx(2.0, rel=1e-10)

    @CARRIERS
    @pytest.mark.parametrize("p", [2.0, 3.0])
    def test_sandwich_on_random_functions(self, carrier, p):
        phi = power(p)
        rng = np.random.default_rng(42)
        for _ in range(100):
            f = random_function(carrier, rng)
            lux, orl = luxemburg_norm(phi, f), orlicz_norm(phi, f)
            assert lux <= orl * (1 + 1e-9)
            assert orl <= 2 * lux * (1 + 1e-9)
            assert orlicz_norm(phi, f.scale(-2.5)) == pytest.approx(2.5 * orl, rel=1e-8)


class TestDualSup:
    def test_point_mass(self, integers, power2):
        assert dual_sup_norm(power2, OrliczFunction.indicator(integers, [0])) == pytest.approx(2.0, rel=1e-5)

    def test_lower_bound_and_agreement(self, integers, power2):
        rng = np.random.default_rng(3)
        for _ in range(5):
            f = random_function(integers, rng, max_support=3)
            orl = orlicz_norm(power2, f)
            dual = dual_sup_norm(power2, f)
            assert dual <= orl * (1 + 1e-9)
            assert dual >= orl * (1 - 1e-2)

    def test_support_limit(self, integers, power2):
        with pytest.raises(MethodInapplicableError):
            dual_sup_norm(power2, OrliczFunction.indicator(integers, range(5)))


class TestHolder:
    @CARRIERS
    def test_random_pairs(self, carrier, power3):
        rng = np.random.default_rng(4)
        for _ in range(100):
            f = random_function(carrier, rng, radius=4, max_support=4)
            g = random_function(carrier, rng, radius=4, max_support=4)
            report = holder_check(power3, f, g)
            assert report.passed
            assert report.lhs <= report.bound + 1e-6


def test_l1_norm(chebyshev):
    f = OrliczFunction(chebyshev, {0: -1.0, 3: 0.5})
    assert l1_norm(f) == 2.0
    assert l1_norm(f, exponential_weight(0.0)) == 2.0
