"""
Zenpath objects module.
"""
from __future__ import annotations

from typing import Iterator, Optional, Sequence

import numpy as np

from zenscope.utils.exceptions import PathError


class PairList:
    """
    Ordered list of scored variate pairs.

    Attributes
    ----------
    items : list[tuple[int, int, float]]
        Pairs (i, j, score) with i < j.
    """

    def __init__(self, items: Sequence[tuple[int, int, float]]) -> None:
        """
        Constructor.

        Raises
        ------
        PathError
            On self-pairs, duplicated pairs or non finite scores.
        """
        self.items = []
        seen = set()
        for i, j, score in items:
            i, j = int(i), int(j)
            if i == j:
                raise PathError(f"Self-pair ({i}, {j}).")
            i, j = min(i, j), max(i, j)
            if (i, j) in seen:
                raise PathError(f"Duplicated pair ({i}, {j}).")
            if not np.isfinite(score):
                raise PathError(f"Pair ({i}, {j}) has a non finite score.")
            seen.add((i, j))
            self.items.append((i, j, float(score)))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[tuple[int, int, float]]:
        return iter(self.items)

    def __getitem__(self, key: int | slice) -> tuple | list:
        return self.items[key]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.items]

    def scores(self) -> list[float]:
        return [s for _, _, s in self.items]

    def __repr__(self) -> str:
        return f"PairList({self.items})"


class Zenpath:
    """
    Ordered groups of variates.

    Consecutive variates of a group are the pairs to display. No connection is
    implied between the last variate of a group and the first of the next.

    Attributes
    ----------
    groups : list[list[int]]
        Variate indices, each group of length at least 2.
    scores : list[list[float]]
        Optional score of each consecutive pair, aligned with the groups.
    labels : list[str]
        Optional group labels, e.g. the sector of a per-sector path.
    """

    def __init__(
        self,
        groups: Sequence[Sequence[int]],
        scores: Optional[Sequence[Sequence[float]]] = None,
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        """
        Constructor.

        Raises
        ------
        PathError
            On short groups, self-pairs or misaligned scores and labels.
        """
        self.groups = [[int(v) for v in g] for g in groups]
        for g in self.groups:
            if len(g) < 2:
                raise PathError("Every group needs at least two variates.")
            if any(a == b for a, b in zip(g, g[1:])):
                raise PathError(f"Group {g} pairs a variate with itself.")
        self.scores = [[np.nan if s is None else float(s) for s in sc] for sc in scores] if scores is not None else None
        if self.scores is not None:
            if len(self.scores) != len(self.groups) or any(
                len(sc) != len(g) - 1 for sc, g in zip(self.scores, self.groups)
            ):
                raise PathError("Scores are not aligned with the groups.")
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != len(self.groups):
            raise PathError("Labels are not aligned with the groups.")

    def __len__(self) -> int:
        return len(self.groups)

    def pairs(self) -> list[tuple[int, int]]:
        """
        Consecutive pairs of every group, in display order.
        """
        return [(a, b) for g in self.groups for a, b in zip(g, g[1:])]

    def variates(self) -> list[int]:
        """
        Distinct variates in order of first appearance.
        """
        return list(dict.fromkeys(v for g in self.groups for v in g))

    def to_dict(self, tickers: Sequence[str]) -> dict:
        """
        JSON form with tickers in place of indices.
        """
        out = {"groups": [[tickers[v] for v in g] for g in self.groups], "scores": self.scores}
        if self.labels is not None:
            out["labels"] = self.labels
        return out

    @classmethod
    def from_dict(cls, data: dict, tickers: Sequence[str]) -> Zenpath:
        """
        Rebuild a path from its JSON form.

        Raises
        ------
        PathError
            If a ticker is unknown.
        """
        index = {t: k for k, t in enumerate(tickers)}
        try:
            groups = [[index[t] for t in g] for g in data["groups"]]
        except KeyError as exc:
            raise PathError(f"Unknown ticker {exc.args[0]!r} in zenpath.") from exc
        return cls(groups, data.get("scores"), data.get("labels"))

    def __repr__(self) -> str:
        return f"Zenpath({self.groups})"
