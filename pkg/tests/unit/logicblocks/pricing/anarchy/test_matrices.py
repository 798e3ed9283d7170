import sys

import numpy as np
import numpy.testing as npt
import pytest

from logicblocks.pricing.anarchy import (
    build_poa_matrices,
    loewner_comparison_check,
    poa_extremes,
    rayleigh_poa,
)
from logicblocks.pricing.demand import build_demand_system, dominance_profile
from logicblocks.pricing.equilibrium import equilibrium_pair
from logicblocks.pricing.linalg import eig_sym
from logicblocks.pricing.testing import data


def symmetric_pair():
    return build_demand_system([1.0, 1.0], [[-1.0, 0.5], [0.5, -1.0]])


def decoupled(n: int = 3):
    return build_demand_system(np.ones(n), -np.eye(n))


class TestBuildPoaMatrices:
    def test_decoupled_products(self):
        pm = build_poa_matrices(decoupled())

        npt.assert_allclose(pm.y, 0.5 * np.eye(3), atol=1e-12)
        npt.assert_allclose(pm.m, np.eye(3), atol=1e-12)
        npt.assert_allclose(pm.g, 2.0 * np.eye(3))

    def test_symmetric_pair_spectra(self):
        pm = build_poa_matrices(symmetric_pair())

        npt.assert_allclose(
            eig_sym(pm.y).eigenvalues, [1.0 / 3.0, 0.6], atol=1e-12
        )
        npt.assert_allclose(
            eig_sym(pm.m).eigenvalues, [8.0 / 9.0, 0.96], atol=1e-12
        )

    def test_g_is_h_plus_own_effects(self):
        s = data.random_demand_system()

        pm = build_poa_matrices(s)

        npt.assert_allclose(pm.g, pm.h + np.diag(pm.d), atol=1e-12)

    def test_k_tilde_in_terms_of_h_and_g(self):
        s = data.random_demand_system()
        pm = build_poa_matrices(s)
        g_inv = np.linalg.inv(pm.g)

        expected = 4.0 * (g_inv - g_inv @ pm.h @ g_inv)

        npt.assert_allclose(pm.k_tilde, expected, atol=1e-9)
        npt.assert_allclose(pm.k, -expected, atol=1e-9)

    def test_l_tilde_inverts_h(self):
        pm = build_poa_matrices(data.random_demand_system())

        npt.assert_allclose(
            pm.l_tilde @ pm.h, np.eye(pm.h.shape[0]), atol=1e-9
        )

    def test_matrices_are_read_only(self):
        pm = build_poa_matrices(symmetric_pair())

        with pytest.raises(ValueError):
            pm.m[0, 0] = 0.0


class TestRayleighPoa:
    def test_matches_revenue_ratio(self):
        s = data.random_demand_system()
        pm = build_poa_matrices(s)

        assert rayleigh_poa(pm, s.a)[0] == pytest.approx(
            equilibrium_pair(s).poa, abs=1e-9
        )

    def test_is_scale_invariant(self):
        s = data.random_demand_system()
        pm = build_poa_matrices(s)

        values = rayleigh_poa(pm, [s.a, 3.0 * s.a, -s.a])

        npt.assert_allclose(values, values[0])


class TestPoaExtremes:
    def test_symmetric_pair(self):
        poa_min, poa_max = poa_extremes(build_poa_matrices(symmetric_pair()))

        assert poa_min == pytest.approx(8.0 / 9.0, abs=1e-12)
        assert poa_max == pytest.approx(0.96, abs=1e-12)

    def test_decoupled_products(self):
        assert poa_extremes(build_poa_matrices(decoupled())) == (
            pytest.approx(1.0),
            pytest.approx(1.0),
        )

    def test_bound_random_intercepts(self):
        rng = np.random.Generator(np.random.PCG64(23))
        s = data.random_demand_system()
        pm = build_poa_matrices(s)
        poa_min, poa_max = poa_extremes(pm)

        values = rayleigh_poa(pm, rng.standard_normal((1000, s.n)))

        assert np.all(values >= poa_min - 1e-9)
        assert np.all(values <= poa_max + 1e-9)


class TestLoewnerComparisonCheck:
    def test_symmetric_pair(self):
        assert loewner_comparison_check(
            build_poa_matrices(symmetric_pair()), 0.5
        )

    def test_decoupled_products_sit_exactly_at_two(self):
        pm = build_poa_matrices(decoupled())

        npt.assert_allclose(pm.l_tilde, 2.0 * pm.g_inv, atol=1e-9)
        assert loewner_comparison_check(pm, 0.0)

    def test_fails_for_understated_mu(self):
        assert not loewner_comparison_check(
            build_poa_matrices(symmetric_pair()), 0.0
        )

    def test_holds_for_random_systems(self):
        for seed in range(100):
            s = data.random_demand_system(seed=seed)
            mu = dominance_profile(s).mu

            assert loewner_comparison_check(build_poa_matrices(s), mu)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
