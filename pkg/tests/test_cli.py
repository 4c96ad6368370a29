import pytest

from sqfree import presets
from sqfree.cli import main
from sqfree.rauzy import build_psi_graph, deserialize_graph, serialize_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_graph(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "build-graph", "--k", "3", "--p", "3", "--out", str(path))
    assert code == 0 and "|V|=12 |A|=18" in out and "peak_mem=" in out
    g, meta = deserialize_graph(path.read_bytes())
    assert (g.n_vertices, g.n_arcs, meta.mode) == (12, 18, "exhaustive")
    code, out, _ = run(capsys, "build-graph", "--k", "2", "--p", "3", "--out", str(path))
    assert code == 0 and "|V|=2 |A|=0" in out


def test_build_graph_full_and_reachable(tmp_path, capsys):
    for mode in ("full", "reachable"):
        path = tmp_path / f"{mode}.txt"
        assert run(capsys, "build-graph", "--k", "3", "--p", "5", "--mode", mode, "--out", str(path))[0] == 0
        assert deserialize_graph(path.read_bytes())[1].mode == mode


def test_build_graph_validation(capsys):
    assert run(capsys, "build-graph", "--k", "3", "--p", "1")[0] == 2
    assert run(capsys, "build-graph", "--k", "3")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_build_graph_budget(capsys):
    code, out, err = run(capsys, "build-graph", "--k", "3", "--p", "12", "--max-nodes", "50")
    assert code == 1 and "budget_exceeded" in out and "vertices" in err


@pytest.mark.parametrize("name", ["six", "quaternary", "ternary"])
def test_check_cert_presets(name, capsys):
    code, out, _ = run(capsys, "check-cert", "--preset", name)
    assert code == 0 and "verdict: PASS" in out


def test_check_cert_files(tmp_path, capsys):
    good = tmp_path / "six.cert"
    good.write_text(presets.CERTIFICATES["six", "paper"])
    assert run(capsys, "check-cert", "--cert", str(good))[0] == 0
    bad = tmp_path / "bad.cert"
    bad.write_text(presets.CERTIFICATES["six", "paper"].replace("x 1 2/5", "x 1 1/100"))
    code, out, _ = run(capsys, "check-cert", "--cert", str(bad))
    assert code == 1 and "verdict: FAIL" in out
    broken = tmp_path / "broken.cert"
    broken.write_text("CERT v1\nk=6\np=12\npattern .\nf 1 three\n")
    code, _, err = run(capsys, "check-cert", "--cert", str(broken))
    assert code == 2 and "line 5" in err
    assert run(capsys, "check-cert", "--cert", str(tmp_path / "missing.cert"))[0] == 2


def test_flags_override_file(capsys):
    # p=7 is too small for patterns of length 4
    assert run(capsys, "check-cert", "--preset", "six", "--p", "7")[0] == 2


def test_check_singleton(capsys):
    assert run(capsys, "check-singleton", "--C", "3", "--len", "1", "--p", "10", "--x", "1/2")[0] == 0
    assert run(capsys, "check-singleton", "--C", "2", "--len", "1", "--p", "10", "--x", "1/2")[0] == 1
    assert run(capsys, "check-singleton", "--C", "2", "--len", "3", "--p", "10", "--x", "1/2")[0] == 2


@pytest.mark.parametrize("argv, count", [
    (["--preset", "quaternary"], 636),
    (["--preset", "ternary"], 4281),
    (["--k", "4", "--mu", "(0.1.2.3.)"], 636),
    (["--k", "3", "--mu", "00(.)"], 2),
])
def test_lower_bound(argv, count, capsys):
    code, out, _ = run(capsys, "lower-bound", *argv)
    assert code == 0
    assert out.strip().startswith(f"status=exhausted count={count} ")


def test_lower_bound_budget(capsys):
    code, out, _ = run(capsys, "lower-bound", "--k", "3", "--mu", "(.)", "--max-len", "30")
    assert code == 1 and "status=budget_exceeded" in out


def test_oracle_verify(capsys):
    code, out, _ = run(capsys, "oracle-verify", "--k", "3", "--p", "3", "4", "5", "--samples", "10")
    assert code == 0 and out.count("walks=ok") == 3


def test_oracle_verify_corrupted_graph(tmp_path, capsys):
    g, meta = build_psi_graph(3, 4)
    lines = serialize_graph(g, meta).decode().split("\n")
    victim = lines[1]
    lines[1] = "2" + victim[1:] if victim[0] != "2" else "0" + victim[1:]
    assert lines[1] not in lines[2:]
    path = tmp_path / "bad.txt"
    path.write_text("\n".join(lines))
    code, out, _ = run(capsys, "oracle-verify", "--graph", str(path))
    assert code == 1 and "vertices=FAIL" in out and "missing_vertices" in out and victim in out


def test_prune_command(tmp_path, capsys):
    cert = tmp_path / "c.cert"
    cert.write_text(presets.CERTIFICATES["quaternary", "desk"])
    out_path = tmp_path / "x.txt"
    code, out, _ = run(capsys, "prune", "--cert", str(cert), "--out", str(out_path))
    assert code == 0 and "|X|=480" in out
    assert out_path.read_text().startswith("PRUNE v1 |X|=480\n# graph: RAUZY v1 k=4 p=5")


def test_prove_desk(capsys):
    code, out, _ = run(capsys, "prove", "--preset", "quaternary", "--scale", "desk")
    assert code == 0 and "PROVEN: for any mu in W^omega" in out


def test_prove_certificate_failure(capsys):
    code, out, _ = run(capsys, "prove", "--preset", "ternary", "--scale", "desk")
    assert code == 1 and "NOT PROVEN: certificate inequality fails" in out


def test_prove_empty_subgraph(tmp_path, capsys):
    cert = tmp_path / "c.cert"
    cert.write_text("CERT v1\nk=3\np=6\npattern .\nf 1 3\nx 1 1/2\n")
    code, out, _ = run(capsys, "prove", "--cert", str(cert))
    assert code == 1 and "NOT PROVEN: pruned subgraph empty" in out


def test_prove_mismatched_graph(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    graph.write_bytes(serialize_graph(*build_psi_graph(4, 4)))
    code, _, err = run(capsys, "prove", "--preset", "quaternary", "--scale", "desk", "--graph", str(graph))
    assert code == 2 and "p=4" in err


def test_prove_with_graph_file(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    graph.write_bytes(serialize_graph(*build_psi_graph(4, 5)))
    code, out, _ = run(capsys, "prove", "--preset", "quaternary", "--scale", "desk", "--graph", str(graph))
    assert code == 0 and "PROVEN" in out


@pytest.mark.parametrize("name", ["six", "quaternary", "ternary"])
def test_paper_scale_runs_to_budget(name, capsys):
    code, out, _ = run(capsys, "prove", "--preset", name, "--max-nodes", "500")
    assert code == 1 and "NOT PROVEN: graph construction exceeded its budget" in out
