import numpy as np
import pytest

from zenscope.dataset.io import load_prices, load_sectors, write_prices, write_returns, write_sectors
from zenscope.dataset.objects import ReturnMatrix
from zenscope.utils.exceptions import DataError


def _write(tmp_path, text, name="p.csv"):
    pth = tmp_path / name
    pth.write_text(text)
    return pth


class TestLoadPrices:
    def test_one_missing(self, tmp_path):
        pth = _write(tmp_path, "date,A,B\n2020-01-01,1,2\n2020-01-02,NA,3\n2020-01-03,2,4\n")
        prices = load_prices(pth)
        assert prices.shape == (3, 2)
        assert int(np.isnan(prices.values).sum()) == 1
        assert np.isnan(prices.values[1, 0])

    def test_markers(self, prices_path):
        prices = load_prices(prices_path)
        assert prices.tickers == ["AAA", "BBB", "CCC"]
        assert prices.dates[0] == "2020-01-01"
        assert np.isnan(prices.values[1, 1])
        assert np.isnan(prices.values[0, 2])
        assert prices.values[2, 0] == 102.0

    def test_comment_lines(self, tmp_path):
        pth = _write(tmp_path, "# zenscope stamp\ndate,A\n2020-01-01,1\n2020-01-02,2\n")
        assert load_prices(pth).tickers == ["A"]

    def test_header_only(self, tmp_path):
        with pytest.raises(DataError, match="no observations"):
            load_prices(_write(tmp_path, "date,A,B\n"))

    def test_unparseable(self, tmp_path):
        pth = _write(tmp_path, "date,XYZ\n2020-01-01,1\n2020-01-02,abc\n")
        with pytest.raises(DataError, match="row 2.*XYZ"):
            load_prices(pth)

    def test_lowercase_na_rejected(self, tmp_path):
        with pytest.raises(DataError):
            load_prices(_write(tmp_path, "date,A\n2020-01-01,1\n2020-01-02,na\n"))

    def test_duplicate_ticker(self, tmp_path):
        with pytest.raises(DataError, match="Duplicate"):
            load_prices(_write(tmp_path, "date,A,A\n2020-01-01,1,2\n"))

    def test_dates_not_increasing(self, tmp_path):
        with pytest.raises(DataError, match="increasing"):
            load_prices(_write(tmp_path, "date,A\n2020-01-02,1\n2020-01-01,2\n"))

    def test_non_positive(self, tmp_path):
        with pytest.raises(DataError, match="positive"):
            load_prices(_write(tmp_path, "date,A\n2020-01-01,0\n"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError, match="nothing.csv"):
            load_prices(tmp_path / "nothing.csv")

    def test_write_prices(self, prices_path, tmp_path):
        prices = load_prices(prices_path)
        out = tmp_path / "out.csv"
        write_prices(prices, out)
        assert "NA" in out.read_text()
        again = load_prices(out)
        np.testing.assert_array_equal(np.isnan(again.values), np.isnan(prices.values))
        np.testing.assert_array_equal(np.nan_to_num(again.values), np.nan_to_num(prices.values))


class TestLoadSectors:
    def test_load(self, sectors_path):
        sectors = load_sectors(sectors_path)
        assert len(sectors) == 3
        assert sectors.sector("AAA") == "Energy"
        assert sectors.subsector("CCC") == "Power"
        assert sectors.sectors() == ["Energy", "Utilities"]

    def test_bad_header(self, tmp_path):
        with pytest.raises(DataError, match="header"):
            load_sectors(_write(tmp_path, "symbol,sector,subsector\nA,X,Y\n", "s.csv"))

    def test_duplicate(self, tmp_path):
        with pytest.raises(DataError, match="duplicate"):
            load_sectors(_write(tmp_path, "ticker,sector,subsector\nA,X,Y\nA,X,Z\n", "s.csv"))

    def test_write_sectors(self, sectors_path, tmp_path):
        out = tmp_path / "s.csv"
        write_sectors(load_sectors(sectors_path), out)
        assert out.read_text().splitlines()[0] == "ticker,sector,subsector"
        assert load_sectors(out).items() == load_sectors(sectors_path).items()


def test_write_returns(tmp_path):
    returns = ReturnMatrix(["2020-01-02"], ["A"], np.array([[0.25]]))
    out = tmp_path / "r.csv"
    write_returns(returns, out)
    assert out.read_text().splitlines() == ["date,A", "2020-01-02,0.25"]
