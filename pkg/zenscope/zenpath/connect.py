"""
Connection of ranked pairs into zenpaths.
"""
from __future__ import annotations

import typing
from typing import Iterable

from zenscope.utils.exceptions import PathError
from zenscope.utils.logger import LOGGER
from zenscope.zenpath.objects import PairList, Zenpath
from zenscope.zenpath.ranking import rank_pairs

if typing.TYPE_CHECKING:
    from zenscope.dataset.objects import SectorMap
    from zenscope.dependence.matrix import DependenceMatrix


def _adjacent(seq: list[int], a: int, b: int) -> bool:
    return any({x, y} == {a, b} for x, y in zip(seq, seq[1:]))


def connect_pairs(pl: PairList | Iterable[tuple[int, int, float]], dedup: bool = False) -> Zenpath:
    """
    Chain ranked pairs into groups sharing variates.

    Pairs are scanned once in order. A pair that contains the active end of
    the current group extends it by its other variate; any other pair closes
    the group and starts a new one. A group made of a single pair may still be
    flipped so that its first variate becomes the active end.

    A ``PairList`` holds each unordered pair once. Plain sequences of
    ``(i, j, score)`` triples, such as the concatenation of several ranked
    lists, may repeat a pair in either order.

    Parameters
    ----------
    pl : PairList | Iterable[tuple[int, int, float]]
        Ranked pairs.
    dedup : bool
        Drop pairs already adjacent in the current group.

    Returns
    -------
    Zenpath
        Groups with the score of each consecutive pair.

    Raises
    ------
    PathError
        If a plain sequence holds a self-pair.
    """
    groups, scores = [], []
    seq, sc = [], []
    for a, b, score in pl:
        a, b = int(a), int(b)
        if a == b:
            raise PathError(f"Self-pair ({a}, {b}).")
        if seq:
            if dedup and _adjacent(seq, a, b):
                continue
            if len(seq) == 2 and seq[0] in (a, b) and seq[1] not in (a, b):
                seq.reverse()
            end = seq[-1]
            if end in (a, b):
                seq.append(b if a == end else a)
                sc.append(float(score))
                continue
            groups.append(seq)
            scores.append(sc)
        seq, sc = [a, b], [float(score)]
    if seq:
        groups.append(seq)
        scores.append(sc)
    return Zenpath(groups, scores)


def per_sector_paths(matrix: DependenceMatrix, sectors: SectorMap) -> Zenpath:
    """
    Strongest connected group of each sector, sectors in lexicographic order.

    Sectors with fewer than two members, or without a finite pair, are skipped.

    Parameters
    ----------
    matrix : DependenceMatrix
        Dependence matrix.
    sectors : SectorMap
        Sector of every ticker of the matrix.

    Returns
    -------
    Zenpath
        One group per retained sector, labelled by sector.
    """
    labels = sectors.labels(matrix.tickers)
    groups, scores, names = [], [], []
    for sector in sectors.sectors():
        members = {k for k, s in enumerate(labels) if s == sector}
        if len(members) < 2:
            LOGGER.info(f"Sector {sector!r} has fewer than two members, skipped.")
            continue
        try:
            ranked = rank_pairs(matrix, "desc", lambda i, j, m=members: i in m and j in m)
        except PathError:
            LOGGER.info(f"Sector {sector!r} has no finite pair, skipped.")
            continue
        first = connect_pairs(ranked, dedup=True)
        groups.append(first.groups[0])
        scores.append(first.scores[0])
        names.append(sector)
    return Zenpath(groups, scores, names)
