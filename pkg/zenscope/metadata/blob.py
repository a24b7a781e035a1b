"""
Blob module.
"""
from __future__ import annotations

from zenscope.utils.commons import ZENSCOPE_VERSION


class Blob:
    """
    Stamped envelope around an artifact payload.

    Attributes
    ----------
    kind : str
        Artifact kind, one of the published schema names.
    seed : int
        Seed of the run that produced the artifact.
    config_hash : str
        Hash of the configuration that produced the artifact.
    contents : dict | list
        Artifact payload.
    """

    def __init__(self, kind: str, seed: int, config_hash: str, contents: dict | list) -> None:
        """
        Constructor.
        """
        self.kind = kind
        self.seed = seed
        self.config_hash = config_hash
        self.contents = contents
        self.zenscope_version = ZENSCOPE_VERSION

    def stamp(self) -> str:
        """
        One-line stamp for text artifacts.

        Returns
        -------
        str
            Stamp text.
        """
        return f"zenscope {self.zenscope_version} kind={self.kind} seed={self.seed} config={self.config_hash}"

    def to_dict(self) -> dict:
        """
        Render the object as a dictionary.

        Returns
        -------
        dict
            Dictionary representation of the object.
        """
        return self.__dict__
