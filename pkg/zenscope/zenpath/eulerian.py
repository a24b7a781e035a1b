"""
Zenpath through all pairs of variates.
"""
from __future__ import annotations

import numpy as np

from zenscope.utils.exceptions import PathError
from zenscope.zenpath.objects import Zenpath


def eulerian_all_pairs(d: int) -> Zenpath:
    """
    Single group whose consecutive pairs visit every pair of {0, ..., d - 1}.

    For odd d the complete graph is Eulerian and every pair appears once. For
    even d every vertex has odd degree. The walk is an open path from 0 to 1,
    so 0 and 1 may stay odd and only the matching (2, 3), (4, 5), ...,
    (d - 2, d - 1) is doubled: d / 2 - 1 repeated pairs, one fewer than
    closing a circuit over the full matching (0, 1), (2, 3), .... The pair
    (0, 1) is never repeated. Hierholzer's algorithm always takes the smallest
    available neighbour.

    Parameters
    ----------
    d : int
        Number of variates, at least 2.

    Returns
    -------
    Zenpath
        One group of C(d, 2) + 1 variates for odd d, C(d, 2) + d / 2 for even d.

    Raises
    ------
    PathError
        If d < 2.
    """
    if d < 2:
        raise PathError(f"At least two variates are needed, got {d}.")
    counts = np.ones((d, d), dtype=np.int64)
    np.fill_diagonal(counts, 0)
    if d % 2 == 0:
        for k in range(2, d, 2):
            counts[k, k + 1] += 1
            counts[k + 1, k] += 1

    nxt = np.zeros(d, dtype=np.int64)
    stack, walk = [0], []
    while stack:
        v = stack[-1]
        while nxt[v] < d and counts[v, nxt[v]] == 0:
            nxt[v] += 1
        if nxt[v] < d:
            w = int(nxt[v])
            counts[v, w] -= 1
            counts[w, v] -= 1
            stack.append(w)
        else:
            walk.append(stack.pop())
    return Zenpath([walk[::-1]])
