import numpy as np
import pytest

from zenscope.dataset.objects import SectorMap
from zenscope.dependence.matrix import DependenceMatrix
from zenscope.utils.exceptions import PathError
from zenscope.zenpath.objects import PairList
from zenscope.zenpath.ranking import extreme_pairs, rank_pairs, sector_filter


def _matrix(entries, tickers):
    d = len(tickers)
    values = np.eye(d)
    for (i, j), v in entries.items():
        values[i, j] = values[j, i] = v
    return DependenceMatrix("lambda_t", values, tickers)


@pytest.fixture
def three():
    return _matrix({(0, 1): 0.9, (0, 2): 0.1, (1, 2): 0.5}, ["A", "B", "C"])


class TestRankPairs:
    def test_desc(self, three):
        assert rank_pairs(three).pairs() == [(0, 1), (1, 2), (0, 2)]

    def test_asc(self, three):
        assert rank_pairs(three, "asc").pairs() == [(0, 2), (1, 2), (0, 1)]

    def test_ties(self):
        mat = _matrix({(0, 1): 0.3, (0, 2): 0.3, (1, 2): 0.3}, ["A", "B", "C"])
        assert rank_pairs(mat).pairs() == [(0, 1), (0, 2), (1, 2)]

    def test_nan_skipped(self):
        mat = _matrix({(0, 1): np.nan, (0, 2): 0.2, (1, 2): 0.4}, ["A", "B", "C"])
        assert rank_pairs(mat).pairs() == [(1, 2), (0, 2)]

    def test_sector_filter(self, three):
        sectors = SectorMap({"A": ("X", "x"), "B": ("X", "x"), "C": ("Y", "y")})
        assert rank_pairs(three, predicate=sector_filter(sectors, three.tickers, "cross")).pairs() == [
            (1, 2),
            (0, 2),
        ]
        assert rank_pairs(three, predicate=sector_filter(sectors, three.tickers, "within")).pairs() == [(0, 1)]
        with pytest.raises(PathError):
            sector_filter(sectors, three.tickers, "diagonal")

    def test_nothing_left(self, three):
        with pytest.raises(PathError):
            rank_pairs(three, predicate=lambda i, j: False)
        with pytest.raises(PathError):
            rank_pairs(three, "sideways")


class TestExtremePairs:
    @pytest.fixture
    def ranked(self):
        return PairList([(0, k, 1.0 - k / 100.0) for k in range(1, 31)])

    def test_top_and_bottom(self, ranked):
        out = extreme_pairs(ranked, 10, 10)
        assert len(out) == 20
        assert out.pairs()[:10] == ranked.pairs()[:10]
        assert out.pairs()[10:] == ranked.pairs()[20:]
        assert out.scores() == sorted(out.scores(), reverse=True)

    def test_top_only(self, ranked):
        assert extreme_pairs(ranked, 5, 0).pairs() == ranked.pairs()[:5]

    def test_everything(self, ranked):
        assert sorted(extreme_pairs(ranked, 12, 18).pairs()) == sorted(ranked.pairs())

    @pytest.mark.parametrize("top,bottom", [(-1, 2), (20, 11)])
    def test_invalid(self, ranked, top, bottom):
        with pytest.raises(PathError):
            extreme_pairs(ranked, top, bottom)
