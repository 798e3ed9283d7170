import sys

import numpy as np
import numpy.testing as npt
import pytest

from logicblocks.pricing.demand import build_demand_system
from logicblocks.pricing.equilibrium import (
    centralized_optimum,
    equilibrium_pair,
    nash_equilibrium,
)
from logicblocks.pricing.exceptions import ZeroInterceptError
from logicblocks.pricing.testing import DemandSystemBuilder


def symmetric_pair():
    return build_demand_system([1.0, 1.0], [[-1.0, 0.5], [0.5, -1.0]])


class TestCentralizedOptimum:
    def test_symmetric_pair(self):
        p_star, r_star = centralized_optimum(symmetric_pair())

        npt.assert_allclose(p_star.p, [1.0, 1.0])
        assert r_star == pytest.approx(1.0)

    def test_independent_products_price_at_half_intercept(self):
        s = build_demand_system([2.0, 4.0], [[-1.0, 0.0], [0.0, -2.0]])

        p_star, r_star = centralized_optimum(s)

        npt.assert_allclose(p_star.p, [1.0, 1.0])
        assert r_star == pytest.approx(3.0)

    def test_revenue_is_half_intercept_dot_prices(self):
        s = DemandSystemBuilder().build()

        p_star, r_star = centralized_optimum(s)

        assert r_star == pytest.approx(0.5 * float(s.a @ p_star.p))

    def test_zero_intercept_gives_zero_prices(self):
        s = DemandSystemBuilder().with_intercept(np.zeros(3)).with_matrix(
            [[-1.0, 0.1, 0.0], [0.1, -1.0, 0.1], [0.0, 0.1, -1.0]]
        ).build()

        p_star, r_star = centralized_optimum(s)

        npt.assert_array_equal(p_star.p, np.zeros(3))
        assert r_star == 0.0


class TestNashEquilibrium:
    def test_symmetric_pair(self):
        p_ne, r_ne = nash_equilibrium(symmetric_pair())

        npt.assert_allclose(p_ne.p, [2.0 / 3.0, 2.0 / 3.0])
        assert r_ne == pytest.approx(8.0 / 9.0)

    def test_coincides_with_optimum_for_independent_products(self):
        s = build_demand_system([1.0, 3.0], [[-1.0, 0.0], [0.0, -0.5]])

        p_ne, r_ne = nash_equilibrium(s)
        p_star, r_star = centralized_optimum(s)

        npt.assert_allclose(p_ne.p, p_star.p)
        assert r_ne == pytest.approx(r_star)

    def test_revenue_equals_weighted_squared_prices(self):
        s = DemandSystemBuilder().build()
        d = -np.diag(s.b)

        p_ne, r_ne = nash_equilibrium(s)

        assert r_ne == pytest.approx(float(d @ p_ne.p**2))


class TestResidualScaling:
    @pytest.mark.parametrize("c", [1e-8, 1e-6, 1.0, 1e4])
    def test_accepts_rescaled_sensitivities(self, c: float):
        s = build_demand_system(
            [1.0, 1.0], c * np.array([[-1.0, 0.5], [0.5, -1.0]])
        )

        pair = equilibrium_pair(s)

        npt.assert_allclose(pair.p_star.p, [1.0 / c, 1.0 / c], rtol=1e-12)
        npt.assert_allclose(
            pair.p_ne.p, [2.0 / (3.0 * c), 2.0 / (3.0 * c)], rtol=1e-12
        )
        assert pair.r_star == pytest.approx(1.0 / c, rel=1e-12)
        assert pair.r_ne == pytest.approx(8.0 / (9.0 * c), rel=1e-12)

    @pytest.mark.parametrize("c", [0.5, 3.0, 1e3])
    def test_intercept_scaling_scales_prices_and_revenues(self, c: float):
        s = DemandSystemBuilder().build()
        scaled = s.with_intercept(c * s.a)

        pair = equilibrium_pair(s)
        scaled_pair = equilibrium_pair(scaled)

        npt.assert_allclose(
            scaled_pair.p_star.p, c * pair.p_star.p, rtol=1e-9
        )
        npt.assert_allclose(scaled_pair.p_ne.p, c * pair.p_ne.p, rtol=1e-9)
        assert scaled_pair.r_star == pytest.approx(c**2 * pair.r_star)
        assert scaled_pair.r_ne == pytest.approx(c**2 * pair.r_ne)


class TestEquilibriumPair:
    def test_symmetric_pair_price_of_anarchy(self):
        pair = equilibrium_pair(symmetric_pair())

        assert pair.poa == pytest.approx(8.0 / 9.0)

    def test_price_of_anarchy_undefined_for_zero_intercept(self):
        s = build_demand_system([0.0, 0.0], [[-1.0, 0.5], [0.5, -1.0]])

        pair = equilibrium_pair(s)

        with pytest.raises(ZeroInterceptError):
            _ = pair.poa

    def test_serialises_prices_and_revenues(self):
        serialised = equilibrium_pair(symmetric_pair()).serialise()

        assert set(serialised) == {"p_star", "p_ne", "r_star", "r_ne"}
        assert serialised["p_star"] == pytest.approx([1.0, 1.0])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
