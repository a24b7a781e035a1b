"""
Local output store module.
"""
from __future__ import annotations

from pathlib import Path

import pandas as pd

from zenscope.metadata.blob import Blob
from zenscope.utils.commons import ARTIFACTS_DIR, METADATA_DIR
from zenscope.utils.exceptions import StoreError
from zenscope.utils.io_utils import dump_json, frame_to_csv, read_json, write_json, write_text


class LocalOutputStore:
    """
    Local output store object.

    Artifacts are written under ``<path>/artifacts`` and run metadata under
    ``<path>/metadata``. Existing artifacts are kept so later commands can
    resume from earlier stages.
    """

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self._artifact_path = self.path / ARTIFACTS_DIR
        self._metadata_path = self.path / METADATA_DIR
        self._initialized = False

    ############################
    # Run methods
    ############################

    def init_run(self) -> None:
        """
        Create the output folders if they do not exist.

        Returns
        -------
        None
        """
        try:
            self._artifact_path.mkdir(parents=True, exist_ok=True)
            self._metadata_path.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StoreError(f"Cannot create output directory {self.path}: {exc}") from exc
        self._initialized = True

    def _check(self) -> None:
        if not self._initialized:
            raise StoreError("Output store not initialized.")

    ############################
    # Write methods
    ############################

    def log_metadata(self, obj: dict, filename: str) -> Path:
        """
        Method that log metadata.

        Parameters
        ----------
        obj: dict
            Metadata dictionary to be logged.
        filename: str
            Filename for the metadata.

        Returns
        -------
        Path
            Path to the metadata file.
        """
        self._check()
        if not isinstance(obj, dict):
            raise StoreError("Metadata must be a dictionary.")
        dst = self._metadata_path / filename
        write_json(obj, dst)
        return dst

    def persist_blob(self, blob: Blob, filename: str) -> Path:
        """
        Persist a stamped JSON artifact.

        Parameters
        ----------
        blob : Blob
            Stamped payload.
        filename : str
            Artifact filename.

        Returns
        -------
        Path
            Path to the artifact.
        """
        self._check()
        dst = self._artifact_path / filename
        write_text(dump_json(blob.to_dict()), dst)
        return dst

    def persist_frame(self, frame: pd.DataFrame, filename: str, blob: Blob, index_label: str = "date") -> Path:
        """
        Persist a frame as a stamped CSV artifact.

        Parameters
        ----------
        frame : pd.DataFrame
            Frame to persist.
        filename : str
            Artifact filename.
        blob : Blob
            Stamp source, its contents are ignored.
        index_label : str
            Header of the index column.

        Returns
        -------
        Path
            Path to the artifact.
        """
        self._check()
        dst = self._artifact_path / filename
        write_text(frame_to_csv(frame, blob.stamp(), index_label=index_label), dst)
        return dst

    def persist_text(self, text: str, filename: str) -> Path:
        """
        Persist a text artifact (SVG documents).

        Parameters
        ----------
        text : str
            Artifact content.
        filename : str
            Artifact filename.

        Returns
        -------
        Path
            Path to the artifact.
        """
        self._check()
        dst = self._artifact_path / filename
        write_text(text, dst)
        return dst

    ############################
    # Read methods
    ############################

    def artifact(self, filename: str) -> Path:
        """
        Path of an existing artifact.

        Parameters
        ----------
        filename : str
            Artifact filename.

        Returns
        -------
        Path
            Path to the artifact.

        Raises
        ------
        StoreError
            If the artifact does not exist.
        """
        pth = self._artifact_path / filename
        if not pth.is_file():
            raise StoreError(f"Missing artifact {pth}, run the stage that produces it first.")
        return pth

    def exists(self, filename: str) -> bool:
        return (self._artifact_path / filename).is_file()

    def read_blob(self, filename: str) -> dict:
        """
        Read the contents of a stamped JSON artifact.
        """
        return read_json(self.artifact(filename))["contents"]

    def read_frame(self, filename: str) -> pd.DataFrame:
        """
        Read a stamped CSV artifact.
        """
        frame = pd.read_csv(self.artifact(filename), comment="#", index_col=0)
        frame.index = frame.index.astype(str)
        return frame
