import io
import json
from pathlib import Path

import pytest

from hamcount.main import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def k4(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("4\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n")
    return str(path)


@pytest.fixture
def ones3(tmp_path):
    path = tmp_path / "ones3.txt"
    path.write_text("3\n1 1 1\n1 1 1\n1 1 1\n")
    return str(path)


def run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# ---------------- counting subcommands ----------------

def test_cycles_k4(capsys, k4):
    code, payload = run_json(capsys, "cycles", k4)
    assert code == 0
    assert payload["count"] == "6"
    assert payload["method"] == "hc_identity"
    assert set(payload) == {"n", "method", "count", "terms_evaluated", "elapsed_ms"}


def test_brute_agrees(capsys, k4):
    _, fast = run_json(capsys, "cycles", k4)
    _, brute = run_json(capsys, "cycles", k4, "--brute")
    assert brute["method"] == "hc_bruteforce"
    assert brute["count"] == fast["count"]


def test_count_is_exact_decimal(capsys, tmp_path):
    path = tmp_path / "big.txt"
    path.write_text("2\n0 100000000000000000000\n100000000000000000000 0\n")
    _, payload = run_json(capsys, "cycles", str(path))
    assert payload["count"] == "1" + "0" * 40


def test_threads_do_not_change_output(capsys, tmp_path):
    from hamcount.io.parsing import render_matrix
    from hamcount.linalg.matrix import random_matrix
    path = tmp_path / "r9.txt"
    path.write_text(render_matrix(random_matrix(9, 5)))
    _, one = run_json(capsys, "cycles", str(path), "--threads", "1")
    _, two = run_json(capsys, "cycles", str(path), "--threads", "2")
    assert one["count"] == two["count"]


def test_paths_with_diag(capsys, k4):
    _, zero = run_json(capsys, "paths", k4)
    _, filled = run_json(capsys, "paths", k4, "--diag", "1")
    assert zero["count"] == "0"
    assert filled["count"] == "24"
    _, brute = run_json(capsys, "paths", k4, "--diag", "1", "--brute")
    assert brute["count"] == "24"


def test_trees(capsys, ones3):
    _, total = run_json(capsys, "trees", ones3)
    _, rooted = run_json(capsys, "trees", ones3, "--root", "1")
    _, brute = run_json(capsys, "trees", ones3, "--root", "1", "--brute")
    assert total["count"] == "9"
    assert (rooted["method"], rooted["count"]) == ("tree_rooted", "3")
    assert brute["count"] == "3"


def test_root_weight(capsys, ones3):
    _, weighted = run_json(capsys, "trees", ones3, "--root", "2", "--root-weight", "5")
    assert weighted["count"] == "15"


def test_undirected_edge_list(capsys, tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("n 3\n1 2\n2 3\n3 1\n")
    _, directed = run_json(capsys, "cycles", str(path))
    _, undirected = run_json(capsys, "cycles", str(path), "--undirected")
    assert (directed["count"], undirected["count"]) == ("1", "2")


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3\n1 1 1\n1 1 1\n1 1 1\n"))
    _, payload = run_json(capsys, "cycles", "-")
    assert payload["count"] == "2"


def test_text_output(capsys, k4):
    assert main(["cycles", k4]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "count: 6"


# ---------------- errors ----------------

def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\n1 2 3\n4 5 6\n7 8\n")
    assert main(["cycles", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "parse_error"
    assert "expected 9 entries, found 8" in err["message"]


def test_missing_file_exit_code(capsys, tmp_path):
    assert main(["cycles", str(tmp_path / "missing.txt")]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "input_unavailable"


def test_cap_exceeded(capsys, tmp_path):
    from hamcount.io.parsing import render_matrix
    from hamcount.linalg.matrix import ones
    path = tmp_path / "o11.txt"
    path.write_text(render_matrix(ones(11)))
    assert main(["cycles", str(path), "--brute"]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "cap_exceeded"


def test_bad_threads(capsys, k4):
    assert main(["cycles", k4, "--threads", "0"]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "invalid_arguments"


@pytest.mark.parametrize("argv", [
    ["cycles"],
    ["cycles", "g.txt", "--threads", "two"],
    ["list", "cycles", "three"],
    ["nope"],
    [],
])
def test_usage_errors_are_json(capsys, argv):
    assert main(argv) == 2
    captured = capsys.readouterr()
    err = json.loads(captured.err)
    assert err["error"] == "usage_error"
    assert err["message"].startswith("hamcount")
    assert captured.out == ""


def test_log_level_is_validated():
    from pydantic import ValidationError
    from hamcount.settings import Settings
    assert Settings(LOG_LEVEL="debug").LOG_LEVEL == "DEBUG"
    with pytest.raises(ValidationError):
        Settings(LOG_LEVEL="loud")


def test_paths_on_one_vertex(capsys, tmp_path):
    path = tmp_path / "one.txt"
    path.write_text("1\n4\n")
    assert main(["paths", str(path)]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "unsupported_dimension"


# ---------------- list ----------------

def test_list_cycles_3(capsys):
    assert main(["list", "cycles", "3"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "cycles_3.txt").read_text()


@pytest.mark.parametrize("kind", ["identity", "derivative"])
def test_list_other_forms_match_cycles(capsys, kind):
    assert main(["list", kind, "3"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "cycles_3.txt").read_text()


def test_list_trees_json(capsys):
    code, payload = run_json(capsys, "list", "trees", "3")
    assert code == 0
    assert payload["kind"] == "trees" and len(payload["terms"]) == 9


def test_list_paths(capsys):
    assert main(["list", "paths", "3"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 6


def test_list_over_cap(capsys):
    assert main(["list", "identity", "9"]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "cap_exceeded"


# ---------------- verify / bench ----------------

def test_verify_small(capsys):
    code, payload = run_json(capsys, "verify", "--max-n", "4", "--samples", "5")
    assert code == 0
    assert payload["passed"] is True
    names = {c["name"] for c in payload["checks"]}
    assert {"hc_identity_vs_oracle", "hc_relabel_invariance", "hc_transpose_invariance",
            "sym_hc_identity", "parse_round_trip"} <= names


def test_verify_text(capsys):
    assert main(["verify", "--max-n", "3", "--samples", "3"]) == 0
    assert "checks passed" in capsys.readouterr().out.splitlines()[-1]


def test_bench(capsys):
    code, rows = run_json(capsys, "bench", "--min-n", "2", "--max-n", "6")
    assert code == 0
    assert [r["n"] for r in rows] == [2, 3, 4, 5, 6]
    assert all(r["agree"] for r in rows)
    assert all(isinstance(r["count"], str) for r in rows)
