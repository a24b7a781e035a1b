import numpy as np
import pytest

from zenscope.dataset.objects import PriceMatrix, ReturnMatrix, SectorMap
from zenscope.utils.exceptions import DataError

DATES = ["2020-01-01", "2020-01-02", "2020-01-03"]


class TestPriceMatrix:
    def test_shape_mismatch(self):
        with pytest.raises(DataError):
            PriceMatrix(DATES, ["A"], np.ones((2, 1)))

    def test_empty_ticker(self):
        with pytest.raises(DataError):
            PriceMatrix(DATES, [""], np.ones((3, 1)))

    def test_missing_fraction(self):
        prices = PriceMatrix(DATES, ["A", "B"], np.array([[1.0, np.nan], [1.0, np.nan], [1.0, 2.0]]))
        np.testing.assert_allclose(prices.missing_fraction(), [0.0, 2.0 / 3.0])
        assert prices.has_missing()

    def test_select(self):
        prices = PriceMatrix(DATES, ["A", "B", "C"], np.arange(1.0, 10.0).reshape(3, 3))
        sub = prices.select([2, 0])
        assert sub.tickers == ["C", "A"]
        np.testing.assert_array_equal(sub.values[:, 0], [3.0, 6.0, 9.0])

    def test_frame(self):
        prices = PriceMatrix(DATES, ["A"], np.array([[1.0], [2.0], [3.0]]))
        again = PriceMatrix.from_frame(prices.to_frame())
        assert again.dates == DATES
        np.testing.assert_array_equal(again.values, prices.values)


class TestReturnMatrix:
    def test_incomplete(self):
        with pytest.raises(DataError):
            ReturnMatrix(DATES[:1], ["A"], np.array([[np.nan]]))

    def test_column(self):
        returns = ReturnMatrix(DATES[:2], ["A", "B"], np.array([[0.1, 0.2], [0.3, 0.4]]))
        np.testing.assert_array_equal(returns.column("B"), [0.2, 0.4])
        with pytest.raises(DataError):
            returns.column("C")


class TestSectorMap:
    def test_restrict(self):
        sectors = SectorMap({"A": ("X", "x1"), "B": ("Y", "y1"), "C": ("X", "x2")})
        assert sectors.restrict(["C", "A"]).labels(["A", "C"]) == ["X", "X"]
        with pytest.raises(DataError, match="D"):
            sectors.restrict(["A", "D"])

    def test_unknown_ticker(self):
        with pytest.raises(DataError):
            SectorMap({}).sector("A")
