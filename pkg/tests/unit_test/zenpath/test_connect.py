import numpy as np
import pytest

from zenscope.dataset.objects import SectorMap
from zenscope.dependence.matrix import DependenceMatrix
from zenscope.utils.exceptions import DataError, PathError
from zenscope.zenpath.connect import connect_pairs, per_sector_paths
from zenscope.zenpath.objects import PairList


class TestConnectPairs:
    def test_shared_variate(self):
        # (C, D), (C, E) with C=2, D=3, E=4
        path = connect_pairs(PairList([(2, 3, 0.9), (2, 4, 0.8)]))
        assert path.groups == [[3, 2, 4]]
        assert path.scores == [[0.9, 0.8]]

    def test_disjoint(self):
        path = connect_pairs(PairList([(0, 1, 0.9), (2, 3, 0.8)]))
        assert path.groups == [[0, 1], [2, 3]]

    def test_cycle(self):
        # four pairs over four variates, the first variate closes the path
        path = connect_pairs(PairList([(0, 1, 0.9), (1, 2, 0.8), (2, 3, 0.7), (0, 3, 0.6)]))
        assert path.groups == [[0, 1, 2, 3, 0]]

    def test_inactive_end(self):
        # (0, 2) shares 0 but the active end is 2 after (0, 1), (1, 2)
        path = connect_pairs(PairList([(0, 1, 0.9), (1, 2, 0.8), (0, 3, 0.7)]))
        assert path.groups == [[0, 1, 2], [0, 3]]

    def test_flattening_preserves_pairs(self, rng):
        d = 8
        items = [(i, j, rng.uniform()) for i in range(d) for j in range(i + 1, d)]
        items.sort(key=lambda p: -p[2])
        path = connect_pairs(PairList(items))
        assert sorted(tuple(sorted(p)) for p in path.pairs()) == sorted((i, j) for i, j, _ in items)
        assert connect_pairs(PairList(items), dedup=True).groups == path.groups

    def test_dedup_concatenated(self):
        # the second ranked list repeats (0, 1) reversed and (1, 2)
        pairs = [*PairList([(0, 1, 0.9), (1, 2, 0.8)]), (1, 2, 0.7), (1, 0, 0.6), (0, 3, 0.5)]
        assert connect_pairs(pairs).groups == [[0, 1, 2, 1, 0, 3]]
        kept = connect_pairs(pairs, dedup=True)
        assert kept.groups == [[0, 1, 2], [0, 3]]
        assert kept.scores == [[0.9, 0.8], [0.5]]

    def test_self_pair(self):
        with pytest.raises(PathError):
            connect_pairs([(0, 1, 0.9), (2, 2, 0.8)])

    def test_empty(self):
        assert len(connect_pairs(PairList([]))) == 0


class TestPerSector:
    TICKERS = ["A", "B", "C", "D", "E", "F", "G"]

    @pytest.fixture
    def matrix(self):
        values = np.full((7, 7), 0.1)
        np.fill_diagonal(values, 1.0)
        for (i, j), v in {(0, 1): 0.9, (2, 3): 0.7, (4, 5): 0.5, (1, 4): 0.95}.items():
            values[i, j] = values[j, i] = v
        return DependenceMatrix("lambda_t", values, self.TICKERS)

    @pytest.fixture
    def sectors(self):
        labels = ["X", "X", "X", "X", "Y", "Y", "Z"]
        return SectorMap({t: (s, s.lower()) for t, s in zip(self.TICKERS, labels)})

    def test_first_group_per_sector(self, matrix, sectors):
        path = per_sector_paths(matrix, sectors)
        assert path.labels == ["X", "Y"]
        assert path.groups == [[0, 1], [4, 5]]
        assert path.scores == [[0.9], [0.5]]

    def test_shared_top_pairs(self, matrix, sectors):
        matrix.values[1, 2] = matrix.values[2, 1] = 0.8
        path = per_sector_paths(matrix, sectors)
        assert path.groups[0] == [0, 1, 2, 3]

    def test_unmapped(self, matrix):
        with pytest.raises(DataError):
            per_sector_paths(matrix, SectorMap({"A": ("X", "x")}))
