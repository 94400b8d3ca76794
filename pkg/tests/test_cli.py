import csv

import pytest

from resolvedim.graph.edgelist import write_edge_list
from resolvedim.graph.operations import build_graph
from resolvedim.main import main
from resolvedim.theorems import routes as theorems_routes
from resolvedim.theorems.schemas import ClaimOutcome, ClaimStatus


# ==========================================================
# 🧬 gen
# ==========================================================

@pytest.mark.parametrize(
    "spec, header",
    [("jfg:3,2", "9 9"), ("cp:4", "8 24"), ("cayley-zn:8,3", "8 24")],
)
def test_gen_writes_header(tmp_path, spec, header):
    out = tmp_path / "g.txt"
    assert main(["gen", spec, "-o", str(out)]) == 0
    assert out.read_text().splitlines()[0] == header


def test_gen_to_stdout(capsys):
    assert main(["gen", "cycle:4"]) == 0
    assert capsys.readouterr().out.splitlines() == ["4 4", "0 1", "0 3", "1 2", "2 3"]


def test_gen_bad_spec(capsys):
    assert main(["gen", "jfg:2,2"]) == 2
    assert "❌" in capsys.readouterr().err


# ==========================================================
# 📐 dim
# ==========================================================

def test_dim_beta(capsys):
    assert main(["dim", "jfg:3,2", "--invariant", "beta"]) == 0
    out = capsys.readouterr().out
    assert "β = 3" in out
    assert "{3, 5, 7}" in out
    assert "etiquetas: v1,1  v2,1  v3,1" in out


def test_dim_sdim_via_mmd(capsys):
    assert main(["dim", "jfg:3,2", "--invariant", "sdim", "--method", "mmd"]) == 0
    out = capsys.readouterr().out
    assert "sdim = 5" in out
    assert "MmdVertexCover" in out


def test_dim_psi_on_cocktail_party(capsys):
    assert main(["dim", "cp:4", "--invariant", "psi", "--threads", "2"]) == 0
    assert "ψ = 4" in capsys.readouterr().out


def test_dim_from_file_with_csv(tmp_path, capsys):
    graph_path = tmp_path / "p.txt"
    write_edge_list(build_graph(4, [(0, 1), (1, 2), (2, 3)]), graph_path)
    csv_path = tmp_path / "dim.csv"
    assert main(["dim", str(graph_path), "--invariant", "beta", "--csv", str(csv_path)]) == 0
    with open(csv_path, newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 1
    assert rows[0]["value"] == "1"
    assert rows[0]["witness"] == "0"
    assert rows[0]["invariant"] == "beta"
    assert "etiquetas" not in capsys.readouterr().out


def test_dim_disconnected_exits_3(tmp_path, capsys):
    graph_path = tmp_path / "d.txt"
    graph_path.write_text("4 2\n0 1\n2 3\n")
    assert main(["dim", str(graph_path), "--invariant", "beta"]) == 3
    assert "no es conexo" in capsys.readouterr().err


def test_dim_invalid_utf8_exits_3(tmp_path, capsys):
    graph_path = tmp_path / "roto.txt"
    graph_path.write_bytes(b"2 1\n\xff 1\n")
    assert main(["dim", str(graph_path), "--invariant", "beta"]) == 3
    assert "línea 2" in capsys.readouterr().err


def test_unwritable_outputs_exit_2(tmp_path, capsys):
    missing = tmp_path / "falta"
    assert main(["gen", "jfg:3,2", "-o", str(missing / "g.txt")]) == 2
    assert main(["dim", "cycle:4", "--invariant", "beta", "--csv", str(missing / "d.csv")]) == 2
    argv = ["sweep", "--family", "cycle", "--n", "4", "--invariants", "beta", "-o", str(missing / "s.csv")]
    assert main(argv) == 2
    assert "No se pudo escribir" in capsys.readouterr().err


def test_dim_oracle_guard_exits_4():
    assert main(["dim", "cycle:15", "--invariant", "beta", "--method", "brute"]) == 4


def test_dim_usage_errors():
    assert main(["dim", "jfg:3,2", "--invariant", "gamma"]) == 2
    assert main(["dim", "missing-file.txt", "--invariant", "beta"]) == 2
    assert main(["dim", "jfg:3,2"]) == 2
    assert main(["dim", "jfg:3,2", "--invariant", "beta", "--method", "mmd"]) == 2


# ==========================================================
# 🔁 sweep
# ==========================================================

def test_sweep_to_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    argv = ["sweep", "--family", "jfg", "--n", "3..5", "--m", "2..3",
            "--invariants", "beta,psi,sdim,adjdim", "-o", str(out)]
    assert main(argv) == 0
    with open(out, newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 24
    assert {row["match"] for row in rows} == {"PASS"}


def test_sweep_config_invalid_utf8_exits_2(tmp_path):
    config_path = tmp_path / "grid.yaml"
    config_path.write_bytes(b"family: jfg\n\xff\n")
    assert main(["sweep", "--config", str(config_path)]) == 2


def test_sweep_cocktail_party_by_r(capsys):
    assert main(["sweep", "--family", "cp", "--r", "4", "--invariants", "beta"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].startswith("cp:4,8,beta,4,4,PASS,")


def test_sweep_flags_override_config(tmp_path, capsys):
    config_path = tmp_path / "grid.yaml"
    config_path.write_text("family: jfg\nn: 3..5\nm: 2\ninvariants: beta\n")
    assert main(["sweep", "--config", str(config_path), "--n", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[1].startswith('"jfg:3,2",9,beta,3,3,PASS,')


# ==========================================================
# ✅ verify
# ==========================================================

def test_verify_single_claim(capsys):
    assert main(["verify", "--claim", "JFG-psi"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") >= 3
    assert "JFG-psi(3,2)" in out


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    assert "CP-iso-d2n" in out
    assert "n >= 3, m >= 2" in out


def test_verify_unknown_claim():
    assert main(["verify", "--claim", "NOPE"]) == 2


def test_verify_failure_exits_5(monkeypatch, capsys):
    failing = [ClaimOutcome(claim_id="JFG-beta", params=(3, 2), status=ClaimStatus.FAIL, detail="roto")]
    monkeypatch.setattr(theorems_routes, "run_registry", lambda claim_ids: failing)
    assert main(["verify"]) == 5
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "❌" in captured.err


def test_no_command_is_usage_error():
    assert main([]) == 2
