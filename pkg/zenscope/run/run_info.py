"""
RunInfo module.
"""
from __future__ import annotations

import typing
from pathlib import Path

from zenscope.metadata.env import Env
from zenscope.run.status import RunStatus
from zenscope.utils.commons import ZENSCOPE_VERSION

if typing.TYPE_CHECKING:
    from zenscope.run.config import PipelineConfig


class RunInfo:
    """
    Run's metadata.

    Attributes
    ----------
    run_id : str
        Run id.
    command : str
        CLI command executed by the run.
    run_path : Path
        Output directory of the run.
    run_config : PipelineConfig
        Run configuration.
    """

    def __init__(self, run_id: str, command: str, run_path: Path, run_config: PipelineConfig) -> None:
        """
        Constructor.
        """
        self.run_id = run_id
        self.command = command

        # Execution info
        self.run_path = run_path
        self.run_config = run_config

        # Outputs
        self.output_files = []

        # Execution environment
        self.zenscope_version = ZENSCOPE_VERSION
        self.execution_environment = Env()

        # Status
        self.status = RunStatus.CREATED.value
        self.error = None

        # Timings
        self.started = None
        self.finished = None

    def to_dict(self) -> dict:
        """
        Render the run information as a dictionary.

        Returns
        -------
        dict
            Dictionary representation of the object.
        """
        return {
            "run_id": self.run_id,
            "command": self.command,
            "run_path": str(self.run_path),
            "run_config": self.run_config.dict(),
            "config_hash": self.run_config.digest(),
            "output_files": [str(i) for i in self.output_files],
            "zenscope_version": self.zenscope_version,
            "execution_environment": self.execution_environment.to_dict(),
            "status": self.status,
            "error": self.error,
            "started": self.started,
            "finished": self.finished,
        }
