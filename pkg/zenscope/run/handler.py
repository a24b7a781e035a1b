"""
Task handler module.
"""
from __future__ import annotations

import concurrent.futures
import typing
from typing import Any, Callable, Sequence

from zenscope.utils.logger import LOGGER

if typing.TYPE_CHECKING:
    from zenscope.run.config import ExecConfig
    from zenscope.run.utils import Result


class TaskHandler:
    """
    Task handler.

    Runs a chunk function over a list of items, sequentially or on a
    thread/process pool. Chunks are mapped with ``pool.map`` so results are
    registered in submission order whatever the scheduling.

    Attributes
    ----------
    _config : ExecConfig
        Execution configuration.
    _registry : list
        Results in item order.
    """

    def __init__(self, config: ExecConfig) -> None:
        """
        Constructor.
        """
        self._config = config
        self._registry = []

    #############################
    # Execution methods
    #############################

    def run(self, fnc: Callable[[Any, list], list[Result]], payload: Any, items: Sequence) -> list[Result]:
        """
        Execute a chunk function over the items.

        Parameters
        ----------
        fnc : Callable
            Top level function ``fnc(payload, chunk) -> list[Result]``. It must be
            picklable for process pools.
        payload : Any
            Read-only input shared by every chunk.
        items : Sequence
            Items to process.

        Returns
        -------
        list[Result]
            One result per item, in item order.
        """
        self._registry = []
        chunks = self._chunk(list(items))
        tasks = [(fnc, payload, chunk) for chunk in chunks]
        if self._config.threads <= 1 or len(chunks) <= 1:
            self._sequential_execute(tasks)
        elif self._config.executor == "thread":
            self._pool_execute_multithread(tasks)
        else:
            self._pool_execute_multiprocess(tasks)
        return self._registry

    def _chunk(self, items: list) -> list[list]:
        """
        Split items into contiguous chunks.
        """
        if not items:
            return []
        n_chunks = max(1, min(len(items), self._config.threads * self._config.chunks_per_worker))
        size, rest = divmod(len(items), n_chunks)
        chunks, start = [], 0
        for k in range(n_chunks):
            stop = start + size + (1 if k < rest else 0)
            chunks.append(items[start:stop])
            start = stop
        return chunks

    def _sequential_execute(self, tasks: list[tuple]) -> None:
        """
        Execute chunks in sequence.
        """
        for task in tasks:
            self._register_results(self._execute(task))

    def _pool_execute_multiprocess(self, tasks: list[tuple]) -> None:
        """
        Instantiate a concurrent.future.ProcessPoolExecutor pool to execute chunks in
        multiprocessing.
        """
        LOGGER.debug(f"Dispatching {len(tasks)} chunks on {self._config.threads} processes.")
        with concurrent.futures.ProcessPoolExecutor(max_workers=self._config.threads) as pool:
            for data in pool.map(self._execute, tasks):
                self._register_results(data)

    def _pool_execute_multithread(self, tasks: list[tuple]) -> None:
        """
        Instantiate a concurrent.future.ThreadPoolExecutor pool to execute chunks in
        multithreading.
        """
        LOGGER.debug(f"Dispatching {len(tasks)} chunks on {self._config.threads} threads.")
        with concurrent.futures.ThreadPoolExecutor(max_workers=self._config.threads) as pool:
            for data in pool.map(self._execute, tasks):
                self._register_results(data)

    @staticmethod
    def _execute(task: tuple) -> list[Result]:
        """
        Unpack a task and run its chunk function.
        """
        fnc, payload, chunk = task
        return fnc(payload, chunk)

    #############################
    # Registry methods
    #############################

    def _register_results(self, results: list[Result]) -> None:
        """
        Register the results of a chunk.
        """
        self._registry.extend(results)

    def failures(self) -> list[Result]:
        """
        Results of the last run that ended with an error.
        """
        return [r for r in self._registry if not r.ok]
