import numpy as np
import pytest

from zenscope.utils.exceptions import PathError
from zenscope.zenpath.objects import PairList, Zenpath


class TestPairList:
    def test_normalized(self):
        pl = PairList([(2, 0, 0.5), (1, 3, 0.2)])
        assert pl.pairs() == [(0, 2), (1, 3)]
        assert pl.scores() == [0.5, 0.2]
        assert len(pl) == 2
        assert pl[0] == (0, 2, 0.5)

    @pytest.mark.parametrize(
        "items",
        [
            [(1, 1, 0.3)],
            [(0, 1, 0.3), (1, 0, 0.2)],
            [(0, 1, np.nan)],
            [(0, 1, np.inf)],
        ],
    )
    def test_invalid(self, items):
        with pytest.raises(PathError):
            PairList(items)


class TestZenpath:
    def test_pairs_and_variates(self):
        path = Zenpath([[3, 2, 4], [0, 1]])
        assert path.pairs() == [(3, 2), (2, 4), (0, 1)]
        assert path.variates() == [3, 2, 4, 0, 1]
        assert len(path) == 2

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"groups": [[0]]},
            {"groups": [[0, 0]]},
            {"groups": [[0, 1, 2]], "scores": [[0.1]]},
            {"groups": [[0, 1]], "scores": [[0.1], [0.2]]},
            {"groups": [[0, 1]], "labels": ["a", "b"]},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(PathError):
            Zenpath(**kwargs)

    def test_dict(self):
        tickers = ["A", "B", "C"]
        path = Zenpath([[0, 2, 1]], [[0.4, None]], ["Sector 01"])
        data = path.to_dict(tickers)
        assert data["groups"] == [["A", "C", "B"]]
        assert data["labels"] == ["Sector 01"]
        again = Zenpath.from_dict(data, tickers)
        assert again.groups == path.groups
        assert np.isnan(again.scores[0][1])

    def test_unknown_ticker(self):
        with pytest.raises(PathError, match="Q"):
            Zenpath.from_dict({"groups": [["A", "Q"]]}, ["A", "B"])
