"""
Common IO utils.
"""
from __future__ import annotations

import json
from io import StringIO
from pathlib import Path

import pandas as pd

from zenscope.utils.utils import jsonable


def dump_json(data: dict | list) -> str:
    """
    Serialize data to a deterministic JSON string.

    Parameters
    ----------
    data : dict | list
        The data to be serialized.

    Returns
    -------
    str
        JSON text with sorted keys, trailing newline included.
    """
    return json.dumps(jsonable(data), indent=4, sort_keys=True, allow_nan=False) + "\n"


def write_json(data: dict | list, path: Path) -> None:
    """
    Store JSON file.

    Parameters
    ----------
    data : dict | list
        The data to be stored.
    path : Path
        The path to the file.

    Returns
    -------
    None
    """
    Path(path).write_text(dump_json(data), encoding="utf-8")


def read_json(path: Path) -> dict | list:
    """
    Read JSON file.

    Parameters
    ----------
    path : Path
        The path to the file.

    Returns
    -------
    dict | list
        Parsed content.
    """
    return json.loads(Path(path).read_text(encoding="utf-8"))


def frame_to_csv(frame: pd.DataFrame, stamp: str | None = None, index_label: str = "date") -> str:
    """
    Render a frame as CSV text, optionally preceded by a comment line.

    Parameters
    ----------
    frame : pd.DataFrame
        Frame to render.
    stamp : str
        Text of the leading comment line.
    index_label : str
        Header of the index column.

    Returns
    -------
    str
        CSV text.
    """
    buff = StringIO()
    if stamp is not None:
        buff.write(f"# {stamp}\n")
    frame.to_csv(buff, index_label=index_label, float_format="%.17g", lineterminator="\n")
    return buff.getvalue()


def write_text(text: str, path: Path) -> None:
    """
    Write text on a file.

    Parameters
    ----------
    text : str
        The text to be written.
    path : Path
        The path to the file.

    Returns
    -------
    None
    """
    Path(path).write_text(text, encoding="utf-8")
