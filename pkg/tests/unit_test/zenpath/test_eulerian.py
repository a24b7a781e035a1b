import itertools

import pytest

from zenscope.utils.exceptions import PathError
from zenscope.zenpath.eulerian import eulerian_all_pairs


def _covered(path):
    return [frozenset(p) for p in path.pairs()]


def test_triangle():
    assert eulerian_all_pairs(3).groups == [[0, 1, 2, 0]]


def test_two():
    assert eulerian_all_pairs(2).groups == [[0, 1]]


@pytest.mark.parametrize("d", [5, 7, 11])
def test_odd_once(d):
    pairs = _covered(eulerian_all_pairs(d))
    assert len(pairs) == d * (d - 1) // 2
    assert set(pairs) == {frozenset(p) for p in itertools.combinations(range(d), 2)}


@pytest.mark.parametrize("d", [4, 6, 10])
def test_even_matching(d):
    path = eulerian_all_pairs(d)
    group = path.groups[0]
    pairs = _covered(path)
    assert len(group) == d * (d - 1) // 2 + d // 2
    assert group[0] == 0 and group[-1] == 1
    assert set(pairs) == {frozenset(p) for p in itertools.combinations(range(d), 2)}
    doubled = {p for p in pairs if pairs.count(p) > 1}
    assert doubled == {frozenset((k, k + 1)) for k in range(2, d, 2)}


def test_large_universe():
    pairs = _covered(eulerian_all_pairs(465))
    assert len(set(pairs)) == 107_880
    assert len(pairs) == 107_880


def test_too_small():
    with pytest.raises(PathError):
        eulerian_all_pairs(1)


def test_even_walk_order():
    path = eulerian_all_pairs(4)
    assert path.groups == [[0, 1, 2, 0, 3, 2, 3, 1]]
    assert _covered(path).count(frozenset((0, 1))) == 1
