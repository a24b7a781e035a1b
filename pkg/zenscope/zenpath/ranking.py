"""
Pair ranking and selection.
"""
from __future__ import annotations

import typing
from typing import Callable, Literal, Optional, Sequence

import numpy as np

from zenscope.utils.exceptions import PathError
from zenscope.zenpath.objects import PairList

if typing.TYPE_CHECKING:
    from zenscope.dataset.objects import SectorMap
    from zenscope.dependence.matrix import DependenceMatrix

PairPredicate = Callable[[int, int], bool]


def sector_filter(sectors: SectorMap, tickers: Sequence[str], mode: Literal["within", "cross"]) -> PairPredicate:
    """
    Predicate keeping pairs of the same sector (within) or of different sectors (cross).

    Raises
    ------
    PathError
        On an unknown mode.
    """
    labels = sectors.labels(tickers)
    if mode == "within":
        return lambda i, j: labels[i] == labels[j]
    if mode == "cross":
        return lambda i, j: labels[i] != labels[j]
    raise PathError(f"Unknown sector filter {mode!r}.")


def rank_pairs(
    matrix: DependenceMatrix,
    direction: Literal["desc", "asc"] = "desc",
    predicate: Optional[PairPredicate] = None,
) -> PairList:
    """
    Sort the finite off-diagonal entries of a matrix.

    Parameters
    ----------
    matrix : DependenceMatrix
        Dependence matrix.
    direction : str
        "desc" for the largest scores first, "asc" for the smallest.
    predicate : PairPredicate
        Optional filter applied before ranking.

    Returns
    -------
    PairList
        Ranked pairs, ties broken by ascending (i, j).

    Raises
    ------
    PathError
        If no pair is left.
    """
    if direction not in ("desc", "asc"):
        raise PathError(f"Unknown direction {direction!r}.")
    items = [(i, j, s) for i, j, s in matrix.pairs() if np.isfinite(s)]
    if predicate is not None:
        items = [(i, j, s) for i, j, s in items if predicate(i, j)]
    if not items:
        raise PathError("No pair left to rank.")
    sign = -1.0 if direction == "desc" else 1.0
    return PairList(sorted(items, key=lambda p: (sign * p[2], p[0], p[1])))


def extreme_pairs(pl: PairList, k_top: int, k_bottom: int) -> PairList:
    """
    First k_top pairs followed by the last k_bottom pairs of a descending list.

    The bottom pairs keep their order in the list, so the result reads from
    the strongest to the weakest pair.

    Raises
    ------
    PathError
        If the counts are negative or exceed the list length.
    """
    if k_top < 0 or k_bottom < 0:
        raise PathError("Pair counts must not be negative.")
    if k_top + k_bottom > len(pl):
        raise PathError(f"Requested {k_top} + {k_bottom} pairs out of {len(pl)}.")
    return PairList(pl[:k_top] + pl[len(pl) - k_bottom :])
