import json
import re

import pytest

from zenscope.cli.artifacts import SCHEMAS, validate_artifact
from zenscope.cli.main import build_parser, config_from_args, main
from zenscope.utils.exceptions import ConfigError, StoreError

##############################
# VARIABLES
##############################


PIPELINE_ARGS = ["--d", "4", "--n-obs", "300", "--nsim", "100", "--restarts", "1", "--seed", "7"]

JSON_ARTIFACTS = [
    "ingest.json",
    "margins.json",
    "diagnostics.json",
    "depmat_lambda_t.json",
    "depmat_lambda_joint.json",
    "depmat_lambda_diff.json",
    "joint.json",
    "gof.json",
    "zenpath.json",
]

SVG_ARTIFACTS = ["zenplot.svg", "acf.svg", "acf_squared.svg", "qq.svg", "heatmap_lambda_t.svg"]


##############################
# DATA
##############################


@pytest.fixture(scope="module")
def pipeline_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("pipeline")
    assert main(["pipeline", *PIPELINE_ARGS, "--out-dir", str(out)]) == 0
    return out


@pytest.fixture(scope="module")
def single_thread_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("single")
    assert main(["pipeline", *PIPELINE_ARGS, "--threads", "1", "--out-dir", str(out)]) == 0
    return out


def _artifact(out, name):
    return out / "artifacts" / name


def _strip_stamp(text):
    return re.sub(r"<metadata>.*?</metadata>", "", text, flags=re.S)


##############################
# TESTS
##############################


class TestParser:
    def test_config_from_args(self):
        args = build_parser().parse_args(["zenpath", "--measure", "lambda-emp", "--source", "nu", "--top", "0"])
        config = config_from_args(args)
        assert config.measure == "lambda_emp"
        assert config.source == "nu"
        assert config.top == 0
        assert config.order == "desc"

    def test_invalid_config(self):
        args = build_parser().parse_args(["depmat", "--corner", "0.9"])
        with pytest.raises(ConfigError):
            config_from_args(args)

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["zenpath", "--order", "sideways"])
        assert exc.value.code == 1
        assert "invalid choice" in capsys.readouterr().err

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["plot"])
        assert exc.value.code == 1


class TestSchema:
    def test_list(self, capsys):
        assert main(["schema"]) == 0
        assert capsys.readouterr().out.split() == list(SCHEMAS)

    def test_kind(self, capsys):
        assert main(["schema", "--kind", "depmat"]) == 0
        schema = json.loads(capsys.readouterr().out)
        assert "measure" in schema["properties"]

    def test_nu_bound_required(self, pipeline_dir):
        data = json.loads(_artifact(pipeline_dir, "depmat_lambda_t.json").read_text())
        flags = data["contents"]["aux"]["nu_at_bound"]
        assert all(v in (None, 0.0, 1.0) for v in flags)
        del data["contents"]["aux"]["nu_at_bound"]
        with pytest.raises(StoreError):
            validate_artifact(data)
        data["contents"]["aux"]["nu_at_bound"] = [0.5] * len(flags)
        with pytest.raises(StoreError):
            validate_artifact(data)
        data["contents"]["aux"]["nu_at_bound"] = flags
        assert validate_artifact(data).aux["nu_at_bound"] == flags


class TestErrors:
    def test_missing_prices(self, tmp_path, capsys):
        missing = tmp_path / "nope.csv"
        assert main(["ingest", "--prices", str(missing), "--out-dir", str(tmp_path / "out")]) == 1
        err = capsys.readouterr().err
        assert err.startswith("zenscope ingest: error:")
        assert "nope.csv" in err

    def test_seed_required(self, tmp_path, capsys):
        assert main(["synth", "--out-dir", str(tmp_path)]) == 1
        assert "seed" in capsys.readouterr().err

    def test_missing_artifact(self, tmp_path, capsys):
        assert main(["depmat", "--out-dir", str(tmp_path)]) == 1
        assert "pobs.csv" in capsys.readouterr().err

    def test_bad_config(self, tmp_path, capsys):
        assert main(["depmat", "--width", "0", "--out-dir", str(tmp_path)]) == 1
        assert "zenscope depmat: error:" in capsys.readouterr().err


class TestPipeline:
    def test_artifacts(self, pipeline_dir):
        for name in JSON_ARTIFACTS:
            data = json.loads(_artifact(pipeline_dir, name).read_text())
            assert data["seed"] == 7
            validate_artifact(data)
        for name in SVG_ARTIFACTS:
            text = _artifact(pipeline_dir, name).read_text()
            assert text.startswith("<?xml")
            assert text.rstrip().endswith("</svg>")

    def test_ingest_filter(self, pipeline_dir):
        ingest = json.loads(_artifact(pipeline_dir, "ingest.json").read_text())["contents"]
        assert len(ingest["retained"]) + len(ingest["dropped"]) == 4
        assert ingest["dropped"]
        header = _artifact(pipeline_dir, "returns.csv").read_text().splitlines()
        assert header[0].startswith("# zenscope")
        assert header[1].split(",")[1:] == ingest["retained"]

    def test_pobs_range(self, pipeline_dir):
        rows = [r for r in _artifact(pipeline_dir, "pobs.csv").read_text().splitlines() if not r.startswith("#")]
        values = [float(v) for r in rows[1:] for v in r.split(",")[1:]]
        assert all(0 < v < 1 for v in values)

    def test_zenpath_order(self, pipeline_dir, capsys):
        assert main(["zenpath", "--order", "all", "--out-dir", str(pipeline_dir)]) == 0
        contents = json.loads(_artifact(pipeline_dir, "zenpath.json").read_text())["contents"]
        assert contents["order"] == "all"
        d = len(json.loads(_artifact(pipeline_dir, "ingest.json").read_text())["contents"]["retained"])
        pairs = {frozenset(p) for g in contents["groups"] for p in zip(g, g[1:])}
        assert len(pairs) == d * (d - 1) // 2

    def test_resume_zenplot(self, pipeline_dir):
        args = ["zenplot", "--panel", "qq", "--nsim", "100", "--seed", "7", "--out", "qq_again.svg"]
        assert main([*args, "--out-dir", str(pipeline_dir)]) == 0
        again, first = (_strip_stamp(_artifact(pipeline_dir, n).read_text()) for n in ("qq_again.svg", "qq.svg"))
        assert again == first

    def test_depmat_measure(self, pipeline_dir):
        assert main(["depmat", "--measure", "tau", "--out-dir", str(pipeline_dir)]) == 0
        data = json.loads(_artifact(pipeline_dir, "depmat_tau.json").read_text())
        assert validate_artifact(data).measure == "tau"
        assert _artifact(pipeline_dir, "depmat_tau.csv").is_file()


@pytest.mark.slow
@pytest.mark.parametrize("threads", [1, 2, 8])
def test_reproducible(single_thread_dir, tmp_path, threads):
    out = tmp_path / f"threads_{threads}"
    assert main(["pipeline", *PIPELINE_ARGS, "--threads", str(threads), "--out-dir", str(out)]) == 0
    names = sorted(p.name for p in (single_thread_dir / "artifacts").iterdir())
    assert names == sorted(p.name for p in (out / "artifacts").iterdir())
    for name in names:
        assert (single_thread_dir / "artifacts" / name).read_bytes() == (out / "artifacts" / name).read_bytes(), name
