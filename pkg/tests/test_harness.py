import json
import subprocess
import sys

import pytest

from kernelpaint import (
    Certificate,
    FormatError,
    extract_reducible,
    make_named,
    parse_graph6,
    run_suite,
    validate_certificate,
)
from kernelpaint.cli import main as cli_main
from kernelpaint.harness import SUITE_NAMES
from kernelpaint.orient import Digraph


# -- certificate validation -----------------------------------------------------


def test_validate_good_certificate(c4):
    cert = extract_reducible(c4, c4.degrees, [0, 2])
    ok, why = validate_certificate(cert, c4, c4.degrees)
    assert ok, why
    ok, _ = validate_certificate(cert.to_json(), c4, c4.degrees)
    assert ok
    ok, _ = validate_certificate(cert.dumps(), c4, c4.degrees)
    assert ok


def test_validate_rejects_reversed_arc(c4):
    cert = extract_reducible(c4, c4.degrees, [0, 2])
    t, h = cert.digraph.arcs[0]
    arcs = ((h, t),) + cert.digraph.arcs[1:]
    mutated = Certificate(cert.h_vertices, Digraph(cert.h_vertices, arcs), cert.f_h)
    ok, why = validate_certificate(mutated, c4, c4.degrees)
    assert not ok and "out-degree" in why


def test_validate_rejects_directed_triangle():
    k3 = make_named("complete", [3])
    cert = Certificate(
        (0, 1, 2),
        Digraph(range(3), [(0, 1), (1, 2), (2, 0)]),
        {0: 2, 1: 2, 2: 2},
    )
    ok, why = validate_certificate(cert, k3, k3.degrees)
    assert not ok and "kernel-perfect" in why


def test_validate_rejects_missing_edge_and_wrong_f(c4):
    cert = extract_reducible(c4, c4.degrees, [0, 2])
    short = Certificate(cert.h_vertices, Digraph(cert.h_vertices, cert.digraph.arcs[1:]),
                        cert.f_h)
    ok, why = validate_certificate(short, c4, c4.degrees)
    assert not ok and "carries no arc" in why
    wrong_f = Certificate(cert.h_vertices, cert.digraph,
                          {v: cert.f_h[v] + 1 for v in cert.h_vertices})
    ok, why = validate_certificate(wrong_f, c4, c4.degrees)
    assert not ok and "f_h" in why


def test_validate_malformed_json(c4):
    with pytest.raises(FormatError):
        validate_certificate("{not json", c4, c4.degrees)
    with pytest.raises(FormatError):
        validate_certificate({"vertices": [0]}, c4, c4.degrees)


# -- suite runner ----------------------------------------------------------------


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("no-such-suite")


def test_suite_ceiling_enforced():
    with pytest.raises(ValueError, match="ceiling"):
        run_suite("in-orient-oracle", max_n=6)


def test_reports_are_byte_identical():
    a = run_suite("mic-basics", max_n=5, seed=3).to_jsonl()
    b = run_suite("mic-basics", max_n=5, seed=3).to_jsonl()
    assert a == b


def test_report_records_reparse():
    rep = run_suite("mic-basics", max_n=4)
    for record in rep.records:
        assert parse_graph6(record["graph6"]).n <= 4
    summary = rep.summary()
    assert summary["total"] == summary["passed"] + summary["failed"] + summary["skipped"]


def test_file_source(tmp_path):
    from kernelpaint import write_graph6_file

    graphs = [make_named("cycle", [5]), make_named("cycle", [4]),
              make_named("complete", [4])]
    path = tmp_path / "corpus.g6"
    write_graph6_file(path, graphs)
    rep = run_suite("mic-basics", source=str(path))
    assert rep.passed and len(rep.records) == 3


def test_skip_records_for_oversized_file_graphs(tmp_path):
    from kernelpaint import write_graph6_file

    big = make_named("cycle", [9])
    path = tmp_path / "big.g6"
    write_graph6_file(path, [big, make_named("cycle", [5])])
    rep = run_suite("mic-strength", source=str(path))
    verdicts = [r["verdict"] for r in rep.records]
    assert "skip" in verdicts  # the 9-cycle exceeds the OC-reducibility cap
    assert rep.passed


def test_timings_flag_controls_meta():
    rep = run_suite("mic-basics", max_n=3)
    assert "elapsed_s" not in rep.summary()
    assert all("elapsed_ms" not in r for r in rep.records)
    rep = run_suite("mic-basics", max_n=3, timings=True)
    assert "elapsed_s" in rep.summary()
    assert all("elapsed_ms" in r for r in rep.records)


def test_jobs_flag_validated():
    with pytest.raises(ValueError, match="jobs"):
        run_suite("mic-basics", max_n=3, jobs=0)
    rep = run_suite("mic-basics", max_n=3, jobs=4)
    assert rep.passed


def test_cli_unreadable_corpus_is_usage_error(capsys):
    assert cli_main(["suite", "mic-basics", "--source", "/no/such/file.g6"]) == 2
    assert "error" in capsys.readouterr().err


def test_suite_names_stable():
    assert set(SUITE_NAMES) == {
        "brooks-alpha", "mic-basics", "main-lemma-d0", "at-classify",
        "kp-classify", "kernel-game", "in-orient-oracle", "mic-strength",
        "gallai-count", "triangle-free-mic", "edges-4critical",
        "ore-precursors", "cut-lemma",
    }


# -- CLI --------------------------------------------------------------------------


def test_cli_gen_g6(capsys):
    assert cli_main(["gen", "cycle", "5"]) == 0
    out = capsys.readouterr().out.strip()
    assert parse_graph6(out) == make_named("cycle", [5])


def test_cli_gen_dot(capsys):
    assert cli_main(["gen", "petersen", "--dot"]) == 0
    assert capsys.readouterr().out.count("--") == 15


def test_cli_gen_error(capsys):
    assert cli_main(["gen", "no_such_family"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_suite_jsonl_and_exit_codes(tmp_path, capsys):
    out_file = tmp_path / "report.jsonl"
    code = cli_main([
        "suite", "mic-basics", "--max-n", "4",
        "--out", str(out_file), "--format", "jsonl",
    ])
    assert code == 0
    lines = out_file.read_text().strip().split("\n")
    assert json.loads(lines[-1])["summary"]["ok"] is True
    stdout_lines = capsys.readouterr().out.strip().split("\n")
    assert len(stdout_lines) == len(lines)


def test_cli_suite_refuses_oversize(capsys):
    assert cli_main(["suite", "mic-basics", "--max-n", "9"]) == 2
    assert "ceiling" in capsys.readouterr().err


def test_cli_cert_validate(tmp_path, capsys):
    c4 = make_named("cycle", [4])
    cert = extract_reducible(c4, c4.degrees, [0, 2])
    payload = {
        "graph6": "Cr",  # C4 in graph6 (0-1-2-3-0)... replaced below
        "f": {str(v): 2 for v in range(4)},
        "certificate": cert.to_json(),
    }
    from kernelpaint import encode_graph6

    payload["graph6"] = encode_graph6(c4)
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(payload))
    assert cli_main(["cert", "validate", str(path)]) == 0
    assert "valid" in capsys.readouterr().out
    # break it: out-degree bound
    t, h = cert.digraph.arcs[0]
    payload["certificate"]["arcs"] = [[h, t]] + payload["certificate"]["arcs"][1:]
    path.write_text(json.dumps(payload))
    assert cli_main(["cert", "validate", str(path)]) == 1


def test_cli_entry_point_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "kernelpaint.cli", "gen", "complete", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "Bw"
