import sys

import numpy as np
import numpy.testing as npt
import pytest

from logicblocks.pricing.demand import dominance_profile
from logicblocks.pricing.equilibrium import equilibrium_pair
from logicblocks.pricing.instances import (
    StarSpec,
    SymmetricModelSpec,
    make_star,
    make_symmetric,
    symmetric_reference,
)
from logicblocks.pricing.linalg import eig_sym


class TestSymmetricReference:
    def test_pair_of_products(self):
        reference = symmetric_reference(SymmetricModelSpec(n=2, rho=0.5))

        assert reference.p_star_scalar == pytest.approx(1.0)
        assert reference.r_star == pytest.approx(1.0)
        assert reference.p_ne_scalar == pytest.approx(2.0 / 3.0)
        assert reference.r_ne == pytest.approx(8.0 / 9.0)
        assert reference.poa == pytest.approx(8.0 / 9.0)
        assert reference.eig_b_simple == pytest.approx(-0.5)
        assert reference.eig_b_repeated == pytest.approx(-1.5)

    def test_serialises_every_field(self):
        reference = symmetric_reference(SymmetricModelSpec(n=3, rho=0.1))

        assert set(reference.serialise()) == {
            "p_star_scalar",
            "r_star",
            "p_ne_scalar",
            "r_ne",
            "poa",
            "mu",
            "eig_b_simple",
            "eig_b_repeated",
        }


class TestMakeSymmetric:
    def test_builds_exchangeable_matrix(self):
        s, _ = make_symmetric(SymmetricModelSpec(n=3, rho=0.2, a_scalar=2.0))

        npt.assert_array_equal(
            s.b, [[-1.0, 0.2, 0.2], [0.2, -1.0, 0.2], [0.2, 0.2, -1.0]]
        )
        npt.assert_array_equal(s.a, [2.0, 2.0, 2.0])

    @pytest.mark.parametrize(
        "n, rho", [(1, 0.0), (2, 0.5), (5, 0.1), (10, 0.05), (20, 0.045)]
    )
    def test_reference_matches_computed_equilibria(self, n: int, rho: float):
        s, reference = make_symmetric(SymmetricModelSpec(n=n, rho=rho))

        pair = equilibrium_pair(s)

        npt.assert_allclose(
            pair.p_star.p, reference.p_star_scalar, rtol=1e-10
        )
        npt.assert_allclose(pair.p_ne.p, reference.p_ne_scalar, rtol=1e-10)
        assert pair.r_star == pytest.approx(
            reference.r_star, rel=1e-10
        )
        assert pair.r_ne == pytest.approx(reference.r_ne, rel=1e-10)
        assert pair.poa == pytest.approx(reference.poa, rel=1e-10)

    def test_reference_eigenvalues_match_spectrum(self):
        s, reference = make_symmetric(SymmetricModelSpec(n=4, rho=0.2))

        eigenvalues = eig_sym(s.b).eigenvalues

        npt.assert_allclose(
            eigenvalues,
            [reference.eig_b_repeated] * 3 + [reference.eig_b_simple],
            atol=1e-12,
        )

    def test_ten_products(self):
        _, reference = make_symmetric(SymmetricModelSpec(n=10, rho=0.05))

        assert reference.poa == pytest.approx(0.915713, abs=1e-6)


class TestMakeStar:
    def test_couples_hub_to_spokes_only(self):
        s = make_star(StarSpec(n=4, rho=0.1))

        npt.assert_array_equal(
            s.b,
            [
                [-1.0, 0.1, 0.1, 0.1],
                [0.1, -1.0, 0.0, 0.0],
                [0.1, 0.0, -1.0, 0.0],
                [0.1, 0.0, 0.0, -1.0],
            ],
        )

    def test_dominance_is_set_by_hub(self):
        profile = dominance_profile(make_star(StarSpec(n=5, rho=0.15)))

        assert profile.mu == pytest.approx(0.6)
        assert int(np.argmax(profile.mu_local)) == 0

    def test_uses_scalar_intercept(self):
        s = make_star(StarSpec(n=3, rho=0.2, a_scalar=1.5))

        npt.assert_array_equal(s.a, np.full(3, 1.5))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
