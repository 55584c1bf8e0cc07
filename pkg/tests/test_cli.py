from __future__ import annotations

import json

import pytest

from mixedgraphs import bdm, diameter, format_edge_list, parse_edge_list
from mixedgraphs.cli import graph_from_json, graph_to_dot, graph_to_json, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--k", "9")
    assert code == 0
    assert "moore(1,1,9) = 176" in out
    assert "improved(k=9) = 158" in out
    assert "crm_upper(k=9) = 50" in out


def test_construct_and_analyze_round_trip(tmp_path, capsys):
    path = tmp_path / "graph.edges"
    code, _, _ = run_cli(capsys, "construct", "bdm", "--m", "5", "--out", str(path))
    assert code == 0
    assert parse_edge_list(path.read_text()) is not None

    code, out, _ = run_cli(capsys, "analyze", str(path))
    assert code == 0
    assert "vertices: 20" in out
    assert "diameter: 6" in out
    assert "totally regular: (1,1)" in out
    assert "bipartite: yes" in out


def test_construct_json_round_trip(tmp_path, capsys):
    path = tmp_path / "graph.json"
    code, _, _ = run_cli(
        capsys, "construct", "crm", "--n", "18", "--c", "5",
        "--format", "json", "--out", str(path),
    )
    assert code == 0
    payload = json.loads(path.read_text())
    assert list(payload) == ["n", "edges", "arcs", "labels"]
    code, out, _ = run_cli(capsys, "analyze", str(path))
    assert code == 0
    assert "vertices: 18" in out
    assert "diameter: 5" in out


def test_construct_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "construct", "bd", "--m", "2")
    assert code == 0
    assert out.startswith("mixedgraph 4\n")


def test_construct_canonical_parameter(capsys):
    code, out, _ = run_cli(capsys, "construct", "bdm", "--n", "4")
    assert code == 0
    assert out.startswith("mixedgraph 40\n")


def test_dot_export_shape():
    g = bdm(5)
    dot = graph_to_dot(g)
    assert dot.startswith("digraph mixedgraph {")
    assert "[dir=none];" in dot
    assert 'label="(0,0)_0"' in dot


def test_json_helpers_round_trip():
    g = bdm(5)
    again = graph_from_json(graph_to_json(g))
    assert again == g


def test_cli_reports_errors_via_exit_code(capsys):
    code, _, err = run_cli(capsys, "construct", "crm", "--n", "9", "--c", "3")
    assert code == 1
    assert err.startswith("error:")


def test_search_exhaustive_command(capsys):
    code, out, _ = run_cli(
        capsys, "search", "exhaustive", "--k", "3", "--n-max", "8"
    )
    assert code == 0
    assert out.startswith("searchreport kind=exhaustive k=3")
    assert "best_order=8" in out


def test_search_lift_command(capsys):
    code, out, _ = run_cli(
        capsys, "search", "lift", "--k", "6", "--template", "4",
        "--q", "5", "--budget", "20000", "--seed", "7",
    )
    assert code == 0
    assert "best_order=20" in out
    assert "seed=7" in out


def test_search_cdrm_command(capsys):
    code, out, _ = run_cli(capsys, "search", "cdrm-scan", "--m", "10")
    assert code == 0
    assert "diameter=6" in out


def test_spectrum_command(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "bdm5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("z = zeta^0:")
    assert "+2.0000+0.0000i" in lines[0]
    assert "-0.8266" in lines[1]


def test_table_1(capsys):
    code, out, _ = run_cli(capsys, "table", "1")
    assert code == 0
    rows = {int(line.split()[0]): line.split() for line in out.splitlines()[1:]}
    assert rows[9][1] == "176" and rows[9][2] == "158"
    assert rows[14][3] == "320"
    assert rows[6][3] == "20"


def test_table_6(capsys):
    code, out, _ = run_cli(capsys, "table", "6")
    assert code == 0
    rows = {int(line.split()[0]): line.split() for line in out.splitlines()[1:]}
    assert rows[18][1:3] == ["148", "107"]
    assert rows[18][5] == "180"
    assert rows[16][1] == "130"


@pytest.mark.parametrize(
    "suite", ["bdm-diameter", "automorphisms", "tables34", "crm-table6"]
)
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run_cli(capsys, "verify", suite)
    assert code == 0
    assert "FAIL" not in out
    assert "PASS" in out


def test_analyze_matches_construction_claims(tmp_path, capsys):
    # construct -> file -> analyze agrees with direct measurement
    path = tmp_path / "crm.edges"
    run_cli(capsys, "construct", "crm", "--n", "32", "--c", "7", "--out", str(path))
    g = parse_edge_list(path.read_text())
    assert g.n == 32
    assert diameter(g) == 7
    assert format_edge_list(g) == path.read_text()
