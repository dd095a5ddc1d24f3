"""CLI behavior: exit codes, JSON/CSV payloads, determinism."""

from __future__ import annotations

import json

import pytest

from diagcheck import (
    Rhomboid,
    TriploidParams,
    parse_diagram,
    rhomboid_gap_labeling,
    serialize_diagram,
    strip_loops,
    triploid,
)
from diagcheck.cli import main

from .conftest import kirchhoff_square, rhomboid_square_graph


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_verify_commutative_exit_zero(tmp_path, capsys):
    path = _write(tmp_path, "square.json", serialize_diagram(kirchhoff_square()))
    assert main(["verify", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["commutative"] is True
    assert payload["counters"] == {
        "eq_loops": 0,
        "eq_multi": 0,
        "eq_dfs": 1,
        "mult_dfs": 6,
        "reduced_edges": 4,
    }
    assert payload["witness"] is None


def test_verify_noncommutative_exit_one(tmp_path, capsys):
    d = rhomboid_gap_labeling(rhomboid_square_graph(), Rhomboid(0, 1, 2, 3))
    path = _write(tmp_path, "gap.json", serialize_diagram(d))
    assert main(["verify", path]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["commutative"] is False
    assert payload["witness"]["kind"] == "path_mismatch"
    assert payload["witness"]["path1"] == {"edges": [0, 1], "origin": 0, "tail": 3}
    assert payload["witness"]["path2"] == {"edges": [2, 3], "origin": 0, "tail": 3}


def test_verify_malformed_input_exit_two(tmp_path, capsys):
    path = _write(tmp_path, "broken.json", "{not json")
    assert main(["verify", path]) == 2
    captured = capsys.readouterr()
    assert "error:" in captured.err


def test_verify_trace_and_report_file(tmp_path, capsys):
    diagram_path = _write(tmp_path, "square.json", serialize_diagram(kirchhoff_square()))
    report_path = tmp_path / "report.json"
    assert main(["verify", diagram_path, "--trace", "--report", str(report_path)]) == 0
    stdout_payload = json.loads(capsys.readouterr().out)
    file_payload = json.loads(report_path.read_text(encoding="utf-8"))
    assert stdout_payload == file_payload
    assert len(stdout_payload["trace"]["relations"]) == 1
    assert len(stdout_payload["trace"]["products"]) == 6


def test_oracle_command(tmp_path, capsys):
    path = _write(tmp_path, "square.json", serialize_diagram(kirchhoff_square()))
    assert main(["oracle", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"commutative": True, "counters": None, "witness": None, "trace": None}

    gap = rhomboid_gap_labeling(rhomboid_square_graph(), Rhomboid(0, 1, 2, 3))
    gap_path = _write(tmp_path, "gap.json", serialize_diagram(gap))
    assert main(["oracle", gap_path, "--length", "2"]) == 1
    assert json.loads(capsys.readouterr().out)["commutative"] is False


def test_gen_fit(capsys):
    assert main(["gen", "--fit", "100", "50"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vertices"] == 100
    assert len(payload["edges"]) == 50


def test_gen_rejects_tiny_inputs(capsys):
    assert main(["gen", "--fit", "3", "10"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bounds_command(capsys):
    assert main(["bounds", "11", "16"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["eta_upper"] == 192
    assert payload["nu_upper"] == 176

    assert main(["bounds", "4", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["eta_lower"] == "20/16384"
    assert payload["nu_lower"] == "16/16384"


def test_rhomboids_explicit(capsys):
    assert main(["rhomboids", "--explicit", "--params", "3", "2", "4", "2", "16"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 12
    assert payload[0] == {"a": 0, "b": 6, "c": 1, "d": 10}


def test_rhomboids_greedy_from_graph_file(tmp_path, capsys):
    from diagcheck import serialize_graph

    graph = triploid(TriploidParams(3, 2, 4, 2, 16))
    path = _write(tmp_path, "fig4.json", serialize_graph(graph))
    assert main(["rhomboids", "--greedy", "--graph", path]) == 0
    assert len(json.loads(capsys.readouterr().out)) >= 12


def test_fixtures_rhomboid_gap_round_trips(tmp_path, capsys):
    args = [
        "fixtures",
        "rhomboid-gap",
        "--params",
        "3", "2", "4", "2", "16",
        "--strip-loops",
        "--rhomboid-index",
        "0",
    ]
    assert main(args) == 0
    text = capsys.readouterr().out
    diagram = parse_diagram(text)
    assert diagram.graph == strip_loops(triploid(TriploidParams(3, 2, 4, 2, 16)))
    assert main(["verify", _write(tmp_path, "gap.json", text)]) == 1
    capsys.readouterr()


def test_fixtures_loop_kernel(capsys):
    assert main(["fixtures", "loop-kernel", "--params", "1", "2", "1", "0", "6", "--kernel", "1,-1"]) == 0
    diagram = parse_diagram(capsys.readouterr().out)
    assert diagram.graph.edge_count == 6


def test_fixtures_precondition_failure_exit_two(capsys):
    # Without stripping loops the fixture preconditions fail.
    assert main(["fixtures", "nz-edge", "--fit", "10", "12", "--edge", "0"]) == 2
    assert "loop-free" in capsys.readouterr().err


def test_fixtures_missing_flag_exit_two(capsys):
    assert main(["fixtures", "nz-edge", "--fit", "10", "12", "--strip-loops"]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify"])
    assert excinfo.value.code == 2


def test_bench_is_deterministic_and_within_bounds(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["bench", "--n-grid", "4,6", "--m-grid", "4,9", "--seed", "7", "--instances", "2"]
    assert main(args + ["--csv", str(out1)]) == 0
    assert main(args + ["--csv", str(out2)]) == 0
    first = out1.read_bytes()
    assert first == out2.read_bytes()

    lines = first.decode().strip().splitlines()
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    # 2 random + 1 triploid row per cell, sorted by (n, m, instance).
    assert len(rows) == 4 * 3
    keys = [(int(r["n"]), int(r["m"]), int(r["instance"])) for r in rows]
    assert keys == sorted(keys)
    for row in rows:
        assert row["within_bounds"] == "true"
        if row["kind"] == "triploid":
            assert row["nu_ge_eq_ok"] == "true"
            assert row["nu_ge_mult_ok"] == "true"


def test_bench_different_seed_changes_output(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    base = ["bench", "--n-grid", "5", "--m-grid", "8", "--instances", "3"]
    assert main(base + ["--seed", "1", "--csv", str(out1)]) == 0
    assert main(base + ["--seed", "2", "--csv", str(out2)]) == 0
    assert out1.read_bytes() != out2.read_bytes()


def test_bench_requires_seed():
    with pytest.raises(SystemExit) as excinfo:
        main(["bench", "--n-grid", "4", "--m-grid", "4"])
    assert excinfo.value.code == 2
