import json

import pandas as pd
import pytest

from zenscope.run.run_info import RunInfo
from zenscope.utils.commons import RUN_METADATA


def _metadata(run):
    return json.loads((run.store.path / "metadata" / RUN_METADATA).read_text())


class TestRun:
    def test_finished(self, run):
        with run:
            assert run.run_info.status == "running"
        meta = _metadata(run)
        assert meta["status"] == "finished"
        assert meta["started"] is not None
        assert meta["finished"] is not None

    def test_error(self, run):
        with pytest.raises(ValueError):
            with run:
                raise ValueError("broken stage")
        meta = _metadata(run)
        assert meta["status"] == "error"
        assert meta["error"] == "broken stage"

    def test_persist_json(self, run, config):
        with run:
            pth = run.persist_json("test", {"x": 1.0}, "test.json")
        data = json.loads(pth.read_text())
        assert data["kind"] == "test"
        assert data["seed"] == config.seed
        assert data["config_hash"] == config.digest()
        assert data["contents"] == {"x": 1.0}
        assert str(pth) in _metadata(run)["output_files"]

    def test_persist_frame(self, run):
        frame = pd.DataFrame({"a": [1.0]}, index=pd.Index(["2020-01-01"], name="date"))
        with run:
            pth = run.persist_frame("returns", frame, "returns.csv")
        first = pth.read_text().splitlines()[0]
        assert first.startswith("# zenscope")
        assert "kind=returns" in first

    def test_persist_svg(self, run):
        with run:
            pth = run.persist_svg("zenplot", lambda stamp: f"<svg>{stamp}</svg>", "plot.svg")
        assert "kind=zenplot" in pth.read_text()

    def test_read_back(self, run):
        frame = pd.DataFrame({"a": [0.1, 0.2]}, index=pd.Index(["2020-01-01", "2020-01-02"], name="date"))
        with run:
            run.persist_frame("returns", frame, "returns.csv")
            run.persist_json("test", [1, 2], "test.json")
        pd.testing.assert_frame_equal(run.store.read_frame("returns.csv"), frame, check_names=False)
        assert run.store.read_blob("test.json") == [1, 2]


def test_run_info_to_dict(config, tmp_path):
    info = RunInfo("run_id", "depmat", tmp_path, config)
    data = info.to_dict()
    assert data["run_id"] == "run_id"
    assert data["command"] == "depmat"
    assert data["run_config"] == config.dict()
    assert data["config_hash"] == config.digest()
    assert data["status"] == "created"
    assert data["output_files"] == []
