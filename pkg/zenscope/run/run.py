"""
Run module.
"""
from __future__ import annotations

import typing
from pathlib import Path

import pandas as pd

from zenscope.metadata.blob import Blob
from zenscope.run.status import RunStatus
from zenscope.utils.commons import RUN_METADATA
from zenscope.utils.logger import LOGGER
from zenscope.utils.utils import get_time

if typing.TYPE_CHECKING:
    from zenscope.run.run_info import RunInfo
    from zenscope.stores.local import LocalOutputStore


class Run:
    """
    Run object.
    The Run is the interface between a CLI command and its output directory.
    With the Run object you can:

    - Persist stamped artifacts
    - Read artifacts of earlier stages
    - Log run metadata

    Attributes
    ----------
    run_info : RunInfo
        Run information.
    store : LocalOutputStore
        Output store.
    """

    def __init__(self, run_info: RunInfo, store: LocalOutputStore) -> None:
        """
        Constructor.
        """
        self.run_info = run_info
        self.store = store

    ############################
    # Artifacts
    ############################

    @property
    def seed(self) -> int | None:
        return self.run_info.run_config.seed

    def blob(self, kind: str, contents: dict | list) -> Blob:
        """
        Wrap a payload with the run stamp.

        Parameters
        ----------
        kind : str
            Artifact kind.
        contents : dict | list
            Payload.

        Returns
        -------
        Blob
            Stamped payload.
        """
        return Blob(kind, self.seed, self.run_info.run_config.digest(), contents)

    def _register(self, pth: Path) -> Path:
        if pth not in self.run_info.output_files:
            self.run_info.output_files.append(pth)
        LOGGER.info(f"Artifact written: {pth}")
        return pth

    def persist_json(self, kind: str, contents: dict | list, filename: str) -> Path:
        """
        Persist a stamped JSON artifact.
        """
        return self._register(self.store.persist_blob(self.blob(kind, contents), filename))

    def persist_frame(self, kind: str, frame: pd.DataFrame, filename: str, index_label: str = "date") -> Path:
        """
        Persist a stamped CSV artifact.
        """
        return self._register(self.store.persist_frame(frame, filename, self.blob(kind, {}), index_label))

    def persist_svg(self, kind: str, render: typing.Callable[[str], str], filename: str) -> Path:
        """
        Persist an SVG artifact. ``render`` receives the stamp text.
        """
        return self._register(self.store.persist_text(render(self.blob(kind, {}).stamp()), filename))

    ############################
    # Metadata
    ############################

    def _log_run(self) -> None:
        """
        Log run's metadata.

        Returns
        -------
        None
        """
        self.store.log_metadata(self.run_info.to_dict(), RUN_METADATA)

    ############################
    # Context manager
    ############################

    def __enter__(self) -> Run:
        LOGGER.info(f"Starting run {self.run_info.run_id} ({self.run_info.command})")
        self.store.init_run()
        self.run_info.status = RunStatus.RUNNING.value
        self.run_info.started = get_time()
        self._log_run()
        return self

    def __exit__(self, exc_type, exc_value, traceback) -> None:
        if exc_type is None:
            self.run_info.status = RunStatus.FINISHED.value
        elif exc_type in (InterruptedError, KeyboardInterrupt):
            self.run_info.status = RunStatus.INTERRUPTED.value
        else:
            self.run_info.status = RunStatus.ERROR.value
            self.run_info.error = str(exc_value)
        self.run_info.finished = get_time()
        self._log_run()
        LOGGER.info(f"Run {self.run_info.run_id} {self.run_info.status}.")

    def __repr__(self) -> str:
        return str(self.run_info.to_dict())
