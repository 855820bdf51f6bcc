"""Command-line interface: envelopes, exit codes, thin composition."""

from __future__ import annotations

import importlib.resources
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from pancyclic import (
    BUDGET_NOTE,
    __version__,
    canonical_code,
    canonical_graph,
    cli,
    cycle,
    cycle_spectrum,
    emit_graph6,
    h_block,
    min_size_edge_pancyclic,
    min_size_triangle_cover,
    parse_graph6,
    wheel,
)

SCHEMA = json.loads(
    importlib.resources.files("pancyclic")
    .joinpath("schema/report.schema.json")
    .read_text()
)
C4 = emit_graph6(cycle(4))
C5 = emit_graph6(cycle(5))


def run_cli(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def envelopes(out):
    rows = [json.loads(line) for line in out.splitlines() if line]
    for row in rows:
        jsonschema.validate(row, SCHEMA)
    return rows


# -- construct ---------------------------------------------------------------


def test_construct_ring(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["construct", "g-ring", "--k", "3"])
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.order == 39 and g.size == 75


def test_construct_labels(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["construct", "h-block", "--k", "3", "--labels"]
    )
    assert code == 0
    g6, labels_line = out.splitlines()
    labels = json.loads(labels_line)
    built = h_block(3)
    assert sorted(parse_graph6(g6).edges()) == sorted(built.graph.edges())
    assert labels == {name: v for name, v in built.labels.items()}
    assert labels["v"] == 0 and "u" in labels


def test_construct_dot_is_deterministic(monkeypatch, capsys):
    first = run_cli(monkeypatch, capsys, ["construct", "wheel", "--n", "5", "--format", "dot"])
    second = run_cli(monkeypatch, capsys, ["construct", "wheel", "--n", "5", "--format", "dot"])
    assert first == second
    assert first[0] == 0
    assert first[1].startswith("graph") and "--" in first[1]


def test_construct_usage_errors(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["construct", "no-such-family", "--n", "5"])
    assert code == 2 and "no-such-family" in err
    code, _, err = run_cli(monkeypatch, capsys, ["construct", "g-ring"])
    assert code == 2 and "--k" in err
    code, _, err = run_cli(monkeypatch, capsys, ["construct", "wheel", "--n", "5", "--format", "png"])
    assert code == 2


# -- check -------------------------------------------------------------------


def test_check_edge_pancyclic_counterexample(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["check", "edge-pancyclic"], stdin=C4 + "\n"
    )
    assert code == 1
    (row,) = envelopes(out)
    assert row["command"] == "check"
    assert row["result"]["verdict"] is False
    assert row["result"]["evidence"]["missing_length"] == 3
    assert row["result"]["evidence"]["missing_edge"] == [0, 1]


def test_check_edge_pancyclic_witnesses(monkeypatch, capsys):
    w6 = emit_graph6(wheel(6))
    code, out, _ = run_cli(
        monkeypatch, capsys, ["check", "edge-pancyclic", "--witnesses"], stdin=w6
    )
    assert code == 0
    (row,) = envelopes(out)
    assert row["result"]["verdict"] is True
    witnesses = row["result"]["evidence"]["witnesses"]
    assert set(witnesses) == {f"{u}-{v}" for u, v in wheel(6).edges()}
    cyc = witnesses["0-1"]["4"]
    assert len(cyc) == 4 and {0, 1} <= set(cyc)


def test_check_batch_reports_worst_exit(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["check", "edge-pancyclic"], stdin="C~\n" + C4 + "\n"
    )
    assert code == 1
    rows = envelopes(out)
    assert [r["result"]["verdict"] for r in rows] == [True, False]
    assert [r["inputs"]["line"] for r in rows] == [1, 2]


def test_check_connectivity(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["check", "connectivity", "--kappa", "3"], stdin="C~"
    )
    assert code == 0
    (row,) = envelopes(out)
    assert row["result"]["evidence"] == {"kappa": 3, "required": 3}
    code, _, _ = run_cli(
        monkeypatch, capsys, ["check", "connectivity", "--kappa", "3"], stdin=C4
    )
    assert code == 1


def test_check_triangle_cover_and_layers(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["check", "triangle-cover"], stdin=C4)
    assert code == 1
    (row,) = envelopes(out)
    assert row["result"]["evidence"]["uncovered_edges"]
    code, out, _ = run_cli(
        monkeypatch, capsys, ["check", "layer-bounds"], stdin=emit_graph6(cycle(8))
    )
    assert code == 1
    (row,) = envelopes(out)
    assert row["result"]["evidence"]["first_layer_min3"] is False


def test_malformed_graph6_names_line_and_offset(monkeypatch, capsys):
    code, out, err = run_cli(monkeypatch, capsys, ["canon"], stdin="C~~\n")
    assert code == 2 and out == ""
    assert "line 1" in err and "offset" in err


def test_empty_stdin_is_usage_error(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["check", "pancyclic"], stdin="")
    assert code == 2 and "standard input" in err


# -- spectrum and canon --------------------------------------------------------


def test_spectrum_matches_module_call(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["spectrum"], stdin=C5)
    assert code == 0
    (row,) = envelopes(out)
    direct = cycle_spectrum(cycle(5)).to_json_dict()
    assert row["result"] == json.loads(json.dumps(direct))
    assert row["result"]["edges"]["0-1"] == [5]
    assert row["result"]["complete"] is True


def test_spectrum_budget_exit(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["spectrum", "--budget", "1"], stdin=C5)
    assert code == 3
    (row,) = envelopes(out)
    assert row["result"]["complete"] is False


def test_canon_matches_module_calls(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["canon"], stdin="DqK\nC~\n")
    assert code == 0
    rows = envelopes(out)
    for row, line in zip(rows, ("DqK", "C~")):
        g = parse_graph6(line)
        assert row["result"]["graph6"] == emit_graph6(canonical_graph(g))
        assert row["result"]["code_hex"] == canonical_code(g).hex()
    assert rows[0]["result"]["code_hex"] == "0323"
    assert rows[1]["result"]["code_hex"] == "3f"


# -- search ------------------------------------------------------------------


def test_search_min_size_is_thin_composition(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch,
        capsys,
        ["search", "min-size", "--order", "4", "--predicate", "edge-pancyclic"],
    )
    assert code == 0
    (row,) = envelopes(out)
    direct = min_size_edge_pancyclic(4).to_json_dict()
    assert row["result"] == json.loads(json.dumps(direct))
    assert row["result"]["value"] == 6


def test_search_budget_exhausted_exit(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch,
        capsys,
        ["search", "min-size", "--order", "9", "--predicate", "triangle-cover",
         "--kappa", "2", "--max-classes", "5"],
    )
    assert code == 3
    (row,) = envelopes(out)
    assert row["result"]["notes"] == BUDGET_NOTE
    assert row["result"]["exhaustive"] is False


def test_search_stream_file(monkeypatch, capsys, tmp_path):
    stream = tmp_path / "order6.g6"
    stream.write_text("\n".join(min_size_edge_pancyclic(6).witnesses) + "\n")
    code, out, _ = run_cli(
        monkeypatch,
        capsys,
        ["search", "min-size", "--order", "6", "--predicate", "edge-pancyclic",
         "--stream", str(stream)],
    )
    assert code == 0
    (row,) = envelopes(out)
    assert row["result"]["value"] == 10
    assert row["result"]["exhaustive"] is False


def test_search_max_diameter(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["search", "max-diameter", "--order", "6", "--exhaustive"]
    )
    assert code == 0
    (row,) = envelopes(out)
    assert row["result"]["value"] == 2 and row["result"]["exhaustive"] is True
    code, out, _ = run_cli(
        monkeypatch, capsys, ["search", "max-diameter", "--order", "10", "--witness"]
    )
    assert code == 0
    (row,) = envelopes(out)
    assert row["result"]["value"] == 4 and row["result"]["exhaustive"] is False
    code, _, _ = run_cli(
        monkeypatch, capsys,
        ["search", "max-diameter", "--order", "6", "--exhaustive", "--witness"],
    )
    assert code == 2


# -- verify ------------------------------------------------------------------


def test_verify_lemma2_example(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["verify", "lemma2", "--n", "8"])
    assert code == 0
    (row,) = envelopes(out)
    assert row["result"]["pass"] is True
    direct = min_size_triangle_cover(8, 3)
    by_name = {c["name"]: c for c in row["result"]["claims"]}
    assert by_name["minimum size"]["actual"] == direct.value == 14
    assert by_name["extremal census"]["actual"] == direct.witnesses
    assert by_name["extremal census"]["expected"] == [
        emit_graph6(canonical_graph(wheel(8)))
    ]


def test_verify_fast_claims(monkeypatch, capsys):
    for argv in (
        ["verify", "erdos", "--n", "7"],
        ["verify", "hk-props", "--k", "3"],
        ["verify", "thm6", "--n", "10"],
    ):
        code, out, _ = run_cli(monkeypatch, capsys, argv)
        assert code == 0, argv
        (row,) = envelopes(out)
        assert row["result"]["pass"] is True
        assert all(c["pass"] for c in row["result"]["claims"])


def test_verify_usage_errors(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["verify", "lemma1"])
    assert code == 2 and "--n" in err
    code, _, _ = run_cli(monkeypatch, capsys, ["verify", "no-such-claim", "--n", "5"])
    assert code == 2


# -- envelope metadata and entry point ------------------------------------------


def test_envelope_metadata(monkeypatch, capsys):
    _, out, _ = run_cli(monkeypatch, capsys, ["canon"], stdin="C~")
    (row,) = envelopes(out)
    assert row["version"] == __version__
    assert isinstance(row["elapsed_ms"], int) and row["elapsed_ms"] >= 0
    assert row["inputs"]["graph6"] == "C~"


def test_console_script_runs():
    version = subprocess.run(
        [sys.executable, "-m", "pancyclic.cli", "--version"],
        capture_output=True, text=True,
    )
    assert version.returncode == 0
    assert __version__ in version.stdout
    piped = subprocess.run(
        ["pancyclic", "canon"], input="C~\n", capture_output=True, text=True
    )
    assert piped.returncode == 0
    assert json.loads(piped.stdout)["result"]["code_hex"] == "3f"
