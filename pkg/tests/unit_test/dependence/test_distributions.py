import numpy as np
import pytest
from scipy import stats

from zenscope.dependence.distributions import (
    scaled_t_cdf,
    scaled_t_quantile,
    student_t_cdf,
    student_t_pdf,
    student_t_quantile,
)
from zenscope.utils.exceptions import DependenceError

PROBS = np.array([1e-12, 1e-6, 0.01, 0.3, 0.5, 0.77, 0.999, 1 - 1e-9])


@pytest.mark.parametrize("nu", [0.7, 1.0, 4.0, 30.0, 300.0])
def test_cdf_matches_scipy(nu):
    x = np.linspace(-40, 40, 41)
    np.testing.assert_allclose(student_t_cdf(x, nu), stats.t.cdf(x, nu), rtol=1e-10, atol=1e-14)
    np.testing.assert_allclose(student_t_pdf(x, nu), stats.t.pdf(x, nu), rtol=1e-10)


@pytest.mark.parametrize("nu", [1.0, 2.5, 6.0, 250.0])
def test_quantile_inverts_cdf(nu):
    q = student_t_quantile(PROBS, nu)
    assert np.all(np.diff(q) > 0)
    assert np.max(np.abs(student_t_cdf(q, nu) - PROBS)) < 1e-12


def test_cauchy_quartile():
    assert student_t_quantile(0.75, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert isinstance(student_t_quantile(0.75, 1.0), float)


def test_invalid_arguments():
    with pytest.raises(DependenceError):
        student_t_cdf(0.0, 0.0)
    with pytest.raises(DependenceError):
        student_t_quantile(1.0, 4.0)
    with pytest.raises(DependenceError):
        scaled_t_cdf(0.0, 2.0)


def test_scaled_t_unit_variance(rng):
    nu = 5.0
    q = scaled_t_quantile(np.array([0.1, 0.9]), nu)
    np.testing.assert_allclose(q, stats.t.ppf([0.1, 0.9], nu) * np.sqrt(3.0 / 5.0), rtol=1e-10)
    np.testing.assert_allclose(scaled_t_cdf(q, nu), [0.1, 0.9], atol=1e-12)
    sample = scaled_t_quantile(rng.uniform(size=200_000), nu)
    assert np.var(sample) == pytest.approx(1.0, abs=0.05)
