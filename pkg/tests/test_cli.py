import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from pmaxsat.cli import main
from pmaxsat.formula import count_satisfied

INST = Path(__file__).resolve().parent.parent / "instances"

COMMANDS = [
    ["maxsat", "--k", "4", "example.cnf"],
    ["naesat", "--k", "2", "example.cnf"],
    ["exactsat", "--k", "2", "--x", "1", "example.cnf"],
    ["dnf", "--k", "2", "small.dnf"],
    ["abovehalf", "--g", "2", "example.cnf"],
    ["edsataa", "--g", "1", "twocnf.cnf"],
    ["almost2sat", "--k", "1", "twocnf.cnf"],
    ["almostnae2sat", "--k", "1", "twocnf.cnf"],
    ["cnf2", "cnf2.cnf"],
    ["cnf2", "--mode", "nae", "--k", "0", "cnf2.cnf"],
    ["minsat", "--k", "1", "example.cnf"],
    ["almostdnf", "--k", "1", "small.dnf"],
    ["vc", "--k", "3", "figure.gr"],
    ["vcam", "--g", "1", "figure.gr", "figure.matching"],
    ["flow", "small.max"],
    ["partial", "--param", "tw", "--k", "3", "small.wcnf"],
    ["partial", "--param", "vc", "--k", "4", "small.wcnf"],
    ["oracle", "--problem", "max", "example.cnf"],
]


def _paths(argv):
    return [str(INST / a) if (INST / a).exists() else a for a in argv]


def run(capsys, *argv):
    code = main(_paths(list(argv)))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def test_maxsat_example(capsys):
    code, out, _ = run(capsys, "maxsat", "--k", "4", "example.cnf")
    assert code == 0 and out["assignment"] == [1, 1] and out["satisfied"] == 4


def test_vcam_figure(capsys):
    code, _, _ = run(capsys, "vcam", "--g", "0", "figure.gr", "figure.matching")
    assert code == 1
    code, out, _ = run(capsys, "vcam", "--g", "1", "figure.gr", "figure.matching")
    assert code == 0 and out["cover"] == [0, 2, 4] and out["size"] == 3


def test_partial_reject(capsys):
    code, out, _ = run(capsys, "partial", "--param", "vc", "--k", "1", "small.wcnf")
    assert code == 2 and out["status"] == "reject"


def test_partial_fields(capsys):
    code, out, _ = run(capsys, "partial", "--param", "tw", "--k", "3", "small.wcnf")
    assert code == 0
    assert set(out) >= {"status", "weight", "assignment", "param_value_used", "decomposition_stats"}
    assert out["weight"] == 4


def test_flow_per_arc(capsys):
    code, out, _ = run(capsys, "flow", "small.max")
    assert out["value"] == 3 and out["arc_flow"] == [2, 1, 1, 1, 2]


def test_minsat_certificate(capsys, example):
    code, out, _ = run(capsys, "minsat", "--k", "1", "example.cnf")
    assert code == 0 and count_satisfied(tuple(out["assignment"]), example) <= 1


@pytest.mark.parametrize("argv", [
    ["maxsat", "--k", "x", "example.cnf"],
    ["maxsat", "--k", "1", "missing.cnf"],
    ["maxsat", "example.cnf"],
    ["nosuchcommand"],
    ["vc", "--k", "1", "example.cnf"],
])
def test_input_errors_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out is None and err


def test_malformed_cnf(tmp_path, capsys):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 1 1\n5 0\n")
    assert main(["maxsat", "--k", "1", str(bad)]) == 3
    assert "error" in capsys.readouterr().err


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "vc", "--k", "3", "figure.gr")
    assert "elapsed" not in out
    _, out, _ = run(capsys, "--timing", "vc", "--k", "3", "figure.gr")
    assert out["elapsed"] >= 0


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--count", "20", "--family", "vc", "--family", "flow")
    assert code == 0 and out["all_agree"]
    assert [r["seed"] for r in out["rows"]] == [0, 1, 2, 0, 1, 2]
    assert "p50_ms" not in out["rows"][0]


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--count", "10")
    assert code == 0 and out["passed"] and out["figure"]


def _subprocess(argv, workers):
    env = dict(os.environ, PMAX_WORKERS=str(workers))
    return subprocess.run([sys.executable, "-m", "pmaxsat", *_paths(argv)], env=env, capture_output=True)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_json_is_identical_across_runs_and_workers(argv):
    runs = [_subprocess(argv, w) for w in (1, 1, 4)]
    assert len({(r.returncode, r.stdout) for r in runs}) == 1
    assert runs[0].stdout.endswith(b"}\n")
    json.loads(runs[0].stdout)


def test_digest_tracks_input_bytes(tmp_path, capsys):
    a = tmp_path / "a.cnf"
    a.write_text("p cnf 1 1\n1 0\n")
    main(["maxsat", "--k", "1", str(a)])
    first = json.loads(capsys.readouterr().out)["input_digest"]
    a.write_text("p cnf 1 1\n-1 0\n")
    main(["maxsat", "--k", "1", str(a)])
    assert json.loads(capsys.readouterr().out)["input_digest"] != first
