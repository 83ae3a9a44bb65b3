import io
import json

import pytest

from egqldpc.cli import run
from egqldpc.gf2 import BinMatrix
from egqldpc.io import parse_alist, parse_mtx, write_alist


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_geom_stats():
    code, out, _ = call("geom", "--m", "2", "--q", "2", "--stats")
    assert code == 0
    assert out == "points=4 lines=6 classes=3 lines/point=3 points/line=2 parallels/line=1\n"


def test_geom_listings():
    code, out, _ = call("geom", "--m", "2", "--q", "2", "--list-lines")
    assert code == 0 and out.splitlines()[0] == "class=0 base=(0,0) points=(0,0) (0,1)"
    assert len(out.splitlines()) == 6
    code, out, _ = call("geom", "--m", "2", "--q", "3", "--list-classes")
    assert len(out.splitlines()) == 4


@pytest.mark.parametrize(
    "argv,status",
    [
        (["check", "--family", "h1", "--m", "2", "--q", "2"], 0),
        (["check", "--family", "h2", "--m", "2", "--q", "2"], 0),
        (["check", "--family", "parallel", "--m", "2", "--q", "2", "--class", "1"], 0),
        (["check", "--family", "h1", "--m", "2", "--q", "3"], 2),
        (["check", "--family", "h2", "--m", "3", "--q", "2"], 2),
        (["check", "--family", "h2", "--m", "3", "--q", "2", "--exact-cap", "4", "--budget", "10"], 2),
        (["check", "--family", "h2", "--m", "3", "--q", "3", "--exact-cap", "4", "--budget", "10"], 3),
        (["check", "--family", "h3", "--m", "2", "--q", "2"], 64),
        (["check", "--family", "h1", "--m", "1", "--q", "2"], 64),
        (["check", "--family", "h1", "--m", "2", "--q", "6"], 64),
        (["frobnicate"], 64),
        (["check", "--family", "parallel", "--m", "2", "--q", "2", "--class", "7"], 65),
        (["check", "--family", "h2", "--m", "4", "--q", "9"], 66),
    ],
)
def test_exit_codes(argv, status):
    assert call(*argv)[0] == status


def test_check_output_and_errors():
    code, out, _ = call("check", "--family", "h1", "--m", "2", "--q", "2")
    assert "n=7" in out.splitlines() and "d_computed=3" in out.splitlines()
    code, _, err = call("check", "--family", "parallel", "--m", "2", "--q", "2")
    assert code == 65 and err.startswith("InvalidClassIndex")


def test_size_cap_env(monkeypatch):
    monkeypatch.setenv("EGQLDPC_SIZE_CAP", "8")
    assert call("geom", "--m", "2", "--q", "3")[0] == 66
    assert call("geom", "--m", "3", "--q", "2")[0] == 0


def test_check_deterministic():
    argv = ["check", "--family", "h1", "--m", "2", "--q", "3"]
    assert call(*argv) == call(*argv)


@pytest.mark.parametrize("fmt", ["alist", "mtx", "json"])
def test_build_writes_bundle(tmp_path, fmt):
    code, out, _ = call("build", "--family", "h2", "--m", "2", "--q", "2", "--out", str(tmp_path), "--format", fmt)
    assert code == 0
    if fmt == "json":
        meta = json.loads((tmp_path / "code.json").read_text())
        mats = {k: BinMatrix.from_supports(v["supports"], v["cols"]) for k, v in meta["matrices"].items()}
    else:
        meta = json.loads((tmp_path / "metadata.json").read_text())
        parse = parse_alist if fmt == "alist" else parse_mtx
        mats = {k: parse((tmp_path / v).read_text()) for k, v in meta["matrices"].items()}
    assert mats["h_orth"].shape == (4, 15) and mats["stabilizer"].shape == (8, 30)
    for name, shape in meta["shapes"].items():
        assert list(mats[name].shape) == shape
    assert meta["n"] == 15 and meta["k_computed"] == 7 and meta["self_orthogonal"] is True
    assert meta["ordering_version"] == 1 and meta["family"] == "h2"


def test_distance_command(tmp_path):
    steane = BinMatrix.from_dense([[0, 1, 1, 1, 1, 0, 0], [1, 0, 1, 1, 0, 1, 0], [1, 1, 0, 1, 0, 0, 1]])
    path = tmp_path / "steane.alist"
    path.write_text(write_alist(steane))
    code, out, _ = call("distance", "--in", str(path))
    assert code == 0 and "kind=exact" in out and "value=3" in out
    code, out, _ = call("distance", "--in", str(path), "--floor", "2", "--budget", "1000")
    assert "kind=lower-bound-verified" in out and "value=3" in out
    assert call("distance", "--in", str(path), "--exact-cap", "2")[0] == 66
    bad = tmp_path / "bad.alist"
    bad.write_text("0 3\n")
    assert call("distance", "--in", str(bad))[0] == 65


def test_sweep_command(tmp_path):
    cfg = tmp_path / "sweep.json"
    cfg.write_text(json.dumps({"families": ["parallel", "h2"], "cases": [[2, 2], [2, 6]]}))
    code, out, _ = call("sweep", "--config", str(cfg))
    assert code == 0
    assert out.count("schema=report-v1") == 4
    assert "error=NotPrime" in out
    assert "class_consistency.m2.q2=true" in out
    cfg.write_text(json.dumps({"families": ["h1"], "m": [2], "q": [2, 3]}))
    assert call("sweep", "--config", str(cfg))[0] == 2
    cfg.write_text("{not json")
    assert call("sweep", "--config", str(cfg))[0] == 64
