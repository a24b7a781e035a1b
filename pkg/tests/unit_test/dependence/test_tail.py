import numpy as np
import pytest
from scipy import integrate, stats

from zenscope.dependence.tail import lambda_from_rho_nu, lambda_nonparam
from zenscope.utils.exceptions import DependenceError


class TestLambdaT:
    def test_bounds(self):
        assert lambda_from_rho_nu(1.0, 4.0) == 1.0
        assert lambda_from_rho_nu(-1.0, 4.0) == 0.0

    @pytest.mark.parametrize("rho,nu", [(0.5, 4.0), (0.2, 1.5), (0.8, 12.0), (-0.3, 3.0)])
    def test_quadrature(self, rho, nu):
        arg = -np.sqrt((nu + 1.0) * (1.0 - rho) / (1.0 + rho))
        expected = 2.0 * integrate.quad(lambda x: stats.t.pdf(x, nu + 1.0), -np.inf, arg)[0]
        assert lambda_from_rho_nu(rho, nu) == pytest.approx(expected, rel=1e-8)

    @pytest.mark.slow
    def test_quadrature_grid(self):
        for rho in np.linspace(-0.9, 0.99, 20):
            for nu in np.linspace(1.0, 50.0, 20):
                arg = -np.sqrt((nu + 1.0) * (1.0 - rho) / (1.0 + rho))
                # half mass minus the finite piece between arg and 0
                piece = integrate.quad(lambda x: stats.t.pdf(x, nu + 1.0), arg, 0.0, epsabs=1e-13, epsrel=1e-12)[0]
                assert abs(lambda_from_rho_nu(rho, nu) - 2.0 * (0.5 - piece)) < 1e-8, (rho, nu)

    def test_monotone(self):
        lam = [lambda_from_rho_nu(0.5, nu) for nu in (2.0, 5.0, 20.0, 100.0)]
        assert lam == sorted(lam, reverse=True)

    @pytest.mark.parametrize("nu", [1.0, 4.0, 30.0])
    def test_monotone_in_rho(self, nu):
        lam = np.array([lambda_from_rho_nu(rho, nu) for rho in np.linspace(-0.9, 0.99, 40)])
        assert np.all(np.diff(lam) > 0)
        assert lambda_from_rho_nu(1.0, nu) == 1.0

    @pytest.mark.parametrize("rho,nu", [(1.5, 4.0), (0.5, 0.0)])
    def test_invalid(self, rho, nu):
        with pytest.raises(DependenceError):
            lambda_from_rho_nu(rho, nu)


class TestLambdaNonparam:
    def test_comonotone(self):
        u = np.arange(1, 2001) / 2001.0
        assert lambda_nonparam(np.column_stack([u, u]), 0.1) == pytest.approx(1.0, abs=0.01)

    def test_independent(self, rng):
        u = rng.uniform(size=(20000, 2))
        assert lambda_nonparam(u, 0.1) < 0.1

    @pytest.mark.slow
    def test_limits_large_sample(self, rng):
        n = 100_000
        u = np.arange(1, n + 1) / (n + 1.0)
        assert 0.95 <= lambda_nonparam(np.column_stack([u, u]), 0.1) <= 1.0
        assert abs(lambda_nonparam(rng.uniform(size=(n, 2)), 0.1)) <= 0.05

    def test_corner_mass(self, rng):
        with pytest.raises(DependenceError, match="corner"):
            lambda_nonparam(rng.uniform(size=(50, 2)), 0.05)

    def test_invalid_corner(self, rng):
        with pytest.raises(DependenceError):
            lambda_nonparam(rng.uniform(size=(50, 2)), 0.6)
