import numpy as np
import pytest

from zenscope.dataset.objects import ReturnMatrix
from zenscope.margins.garch import (
    _pack,
    _unpack,
    arma_garch_loglik,
    arma_garch_residuals,
    arma_garch_std_errors,
    fit_arma_garch,
    fit_margins,
    residual_matrix,
    simulate_arma_garch,
    standardized_residual_moments,
)
from zenscope.margins.objects import PARAM_NAMES, MarginalFit
from zenscope.run.config import ExecConfig
from zenscope.utils.exceptions import FitError

##############################
# VARIABLES
##############################

TRUE = (2e-4, 0.05, -0.05, 2e-6, 0.08, 0.88, 6.0)


##############################
# DATA
##############################


@pytest.fixture(scope="module")
def series():
    return simulate_arma_garch(TRUE, 500, np.random.default_rng(11))


@pytest.fixture(scope="module")
def fitted(series):
    return fit_arma_garch(series, restarts=2, seed=3, ticker="AAA")


##############################
# TESTS
##############################


class TestSimulate:
    def test_shapes(self, rng):
        assert simulate_arma_garch(TRUE, 50, rng).shape == (50,)
        params = tuple(np.full(3, p) for p in TRUE)
        assert simulate_arma_garch(params, 50, rng, burn=10).shape == (50, 3)

    def test_given_innovations(self, rng):
        z = np.zeros(60)
        x = simulate_arma_garch(TRUE, 50, rng, burn=10, innovations=z)
        # without shocks the mean recursion stays at mu
        np.testing.assert_allclose(x, TRUE[0])


class TestFit:
    def test_fit(self, fitted, series):
        assert isinstance(fitted, MarginalFit)
        assert fitted.ticker == "AAA"
        assert fitted.is_valid()
        assert fitted.residuals.shape == series.shape
        assert fitted.loglik == pytest.approx(arma_garch_loglik(series, fitted.params))
        np.testing.assert_allclose(fitted.residuals, arma_garch_residuals(series, fitted.params))

    def test_fit_beats_truth(self, fitted, series):
        assert fitted.loglik >= arma_garch_loglik(series, TRUE) - 0.5

    def test_reproducible(self, fitted, series):
        again = fit_arma_garch(series, restarts=2, seed=3, ticker="AAA")
        assert again.params == fitted.params

    def test_warm_start(self, fitted, series):
        refit = fit_arma_garch(series, init=fitted)
        assert refit.loglik >= fitted.loglik - 1e-4
        assert fit_arma_garch(series, init=TRUE).is_valid()

    def test_residual_moments(self, fitted):
        mean, var = standardized_residual_moments(fitted)
        assert abs(mean) < 0.2
        assert 0.7 < var < 1.3

    def test_to_dict(self, fitted):
        out = fitted.to_dict()
        assert list(out) == ["ticker", *PARAM_NAMES, "loglik", "converged"]

    def test_std_errors(self, fitted, series):
        se = arma_garch_std_errors(series, fitted)
        assert list(se) == list(PARAM_NAMES)
        assert all(np.isnan(v) or v > 0 for v in se.values())

    @pytest.mark.parametrize(
        "x",
        [np.ones(200), np.arange(50.0), np.r_[np.arange(150.0), np.nan]],
    )
    def test_invalid_series(self, x):
        with pytest.raises(FitError):
            fit_arma_garch(x)


class TestUnconstrainedMap:
    def test_any_vector_is_admissible(self, rng):
        for raw in rng.normal(scale=5.0, size=(200, 7)):
            mu, phi, theta, alpha0, alpha1, beta, nu = _unpack(raw)
            assert abs(phi) < 1 and abs(theta) < 1
            assert alpha0 > 0 and alpha1 > 0 and beta > 0
            assert alpha1 + beta < 1
            assert nu > 2

    def test_inverse(self):
        np.testing.assert_allclose(_unpack(_pack(TRUE)), TRUE, rtol=1e-10)


@pytest.mark.slow
def test_recovery():
    x = simulate_arma_garch(TRUE, 4000, np.random.default_rng(5))
    fit = fit_arma_garch(x, seed=1)
    assert fit.converged
    assert fit.alpha1 + fit.beta == pytest.approx(0.96, abs=0.04)
    assert fit.beta == pytest.approx(0.88, abs=0.08)
    assert fit.nu == pytest.approx(6.0, abs=2.5)


class TestFitMargins:
    @pytest.fixture(scope="class")
    def values(self):
        rng = np.random.default_rng(2)
        return np.column_stack([simulate_arma_garch(TRUE, 300, rng) for _ in range(3)])

    def _matrix(self, values):
        dates = [str(np.datetime64("2015-01-01") + i) for i in range(values.shape[0])]
        return ReturnMatrix(dates, ["A", "B", "C"], values)

    def test_column_order_and_threads(self, values):
        returns = self._matrix(values)
        seq = fit_margins(returns, ExecConfig(), seed=4, restarts=1)
        par = fit_margins(returns, ExecConfig(threads=2, executor="thread"), seed=4, restarts=1)
        assert [f.ticker for f in seq] == ["A", "B", "C"]
        assert [f.params for f in seq] == [f.params for f in par]
        frame = residual_matrix(seq, returns)
        assert list(frame.columns) == ["A", "B", "C"]
        assert frame.shape == (300, 3)

    def test_failure(self, values):
        broken = values.copy()
        broken[:, 1] = 0.0
        with pytest.raises(FitError, match="B"):
            fit_margins(self._matrix(broken), ExecConfig(), seed=0, restarts=0)
