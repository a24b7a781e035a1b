import itertools

import numpy as np
import pandas as pd
import pytest
from scipy import stats

from zenscope.dependence.concordance import PseudoObsMatrix, kendall_tau, pseudo_observations, spearman_rho
from zenscope.utils.exceptions import DependenceError


def _brute_tau_b(u, v):
    conc = disc = tie_u = tie_v = 0
    for a, b in itertools.combinations(range(len(u)), 2):
        du, dv = np.sign(u[a] - u[b]), np.sign(v[a] - v[b])
        if du == 0 and dv == 0:
            continue
        if du == 0:
            tie_u += 1
        elif dv == 0:
            tie_v += 1
        elif du == dv:
            conc += 1
        else:
            disc += 1
    return (conc - disc) / np.sqrt((conc + disc + tie_u) * (conc + disc + tie_v))


class TestPseudoObservations:
    def test_ranks(self):
        U = pseudo_observations(np.array([[3.0, 1.0], [1.0, 1.0], [2.0, 2.0]]), tickers=["A", "B"])
        np.testing.assert_allclose(U.values[:, 0], [0.75, 0.25, 0.5])
        # ties take the average rank
        np.testing.assert_allclose(U.values[:, 1], [0.375, 0.375, 0.75])
        assert U.tickers == ["A", "B"]
        assert U.d == 2

    def test_frame(self):
        frame = pd.DataFrame({"X": [0.3, -1.0, 2.0]}, index=pd.Index(["d1", "d2", "d3"], name="date"))
        U = pseudo_observations(frame)
        assert U.tickers == ["X"]
        assert U.dates == ["d1", "d2", "d3"]
        again = PseudoObsMatrix.from_frame(U.to_frame())
        np.testing.assert_array_equal(again.values, U.values)

    def test_open_interval(self, rng):
        U = pseudo_observations(rng.normal(size=(50, 3)))
        assert U.values.min() > 0 and U.values.max() < 1
        np.testing.assert_allclose(np.sort(U.values[:, 0]), np.arange(1, 51) / 51)

    def test_invalid(self):
        with pytest.raises(DependenceError):
            pseudo_observations(np.ones((1, 2)))
        with pytest.raises(DependenceError):
            PseudoObsMatrix(np.array([[0.0, 0.5]]), ["A", "B"])


class TestKendall:
    def test_small(self):
        assert kendall_tau([1, 2, 3], [1, 3, 2]) == pytest.approx(1.0 / 3.0)
        assert kendall_tau([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)

    def test_brute_force_with_ties(self, rng):
        u = rng.integers(0, 6, size=60).astype(float)
        v = rng.integers(0, 4, size=60).astype(float)
        assert kendall_tau(u, v) == pytest.approx(_brute_tau_b(u, v), abs=1e-12)
        assert kendall_tau(u, v) == pytest.approx(stats.kendalltau(u, v)[0], abs=1e-12)

    def test_continuous(self, rng):
        x = rng.normal(size=(3000, 2))
        assert kendall_tau(x[:, 0], x[:, 1]) == pytest.approx(stats.kendalltau(x[:, 0], x[:, 1])[0])

    def test_constant(self):
        with pytest.raises(DependenceError):
            kendall_tau([1, 1, 1], [1, 2, 3])

    def test_length(self):
        with pytest.raises(DependenceError):
            kendall_tau([1, 2], [1, 2, 3])


class TestSpearman:
    def test_small(self):
        assert spearman_rho([1, 2, 3], [1, 3, 2]) == pytest.approx(0.5)

    def test_scipy(self, rng):
        x = rng.normal(size=(200, 2))
        assert spearman_rho(x[:, 0], x[:, 1]) == pytest.approx(stats.spearmanr(x[:, 0], x[:, 1])[0])

    def test_constant(self):
        with pytest.raises(DependenceError):
            spearman_rho([2, 2, 2], [1, 2, 3])
