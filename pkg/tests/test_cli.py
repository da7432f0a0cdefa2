import json
import subprocess
import sys

import pytest

from polyconvex.cli import main
from polyconvex.convexity import is_convex
from polyconvex.polygon import parse_polygon

SQUARE = "0 0\n1 0\n1 1\n0 1\n"
CROSSED = "0 0\n1 1\n1 0\n0 1\n"
COLLINEAR = "0 0\n4 4\n8 0\n2 0\n6 0\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="poly.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text", [SQUARE, CROSSED, COLLINEAR, "0 0\n1 0\n1 1\n1 0\n", ""])
def test_check_exit_code_matches_oracle(capsys, write, text):
    code, out, _ = run(capsys, "check", write(text), "--json")
    expected = is_convex(parse_polygon(text))
    assert code == (0 if expected else 1)
    assert json.loads(out)["convex"] is expected


def test_check_json_is_byte_stable(capsys, write):
    path = write(CROSSED)
    first = run(capsys, "check", path, "--json")[1]
    second = run(capsys, "check", path, "--json")[1]
    assert first == second
    report = json.loads(first)
    assert report["witness"] == {"split_edge": {"edge": 0, "j": 2, "k": 3}}


def test_check_text_output(capsys, write):
    code, out, _ = run(capsys, "check", write("# square\n" + SQUARE))
    assert code == 0
    assert "convex: true" in out and "n: 4" in out


def test_check_gap_witness(capsys, write):
    code, out, _ = run(capsys, "check", write("0 0\n1 0\n1 1\n1 0\n"), "--json")
    assert code == 1
    assert json.loads(out)["witness"]["gap_point"]["x"] == "1/2"


def test_parse_error_exit_2(capsys, write):
    code, _, err = run(capsys, "check", write("0 0\n1 0.5\n"))
    assert code == 2 and "line 2" in err
    assert run(capsys, "check", "/nonexistent/file")[0] == 2


def test_unknown_verb_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cut_json(capsys, write):
    code, out, _ = run(capsys, "cut", write(SQUARE), "--line", "1/2", "0", "1/2", "1", "--json")
    assert code == 0
    res = json.loads(out)
    assert (res["i"], res["j"]) == (0, 2)
    assert res["p"] == ["1/2", "0"] and res["q"] == ["1/2", "1"]


def test_cut_collinear_nonstrict(capsys, write):
    path = write(COLLINEAR)
    code, _, err = run(capsys, "cut", path, "--line", "4", "4", "4", "0")
    assert code == 3 and "StrictnessRequired" in err
    code, out, _ = run(capsys, "cut", path, "--line", "4", "4", "4", "0", "--allow-nonstrict")
    assert code == 0
    assert "i: 1" in out and "j: 3" in out and "plus_convex: false" in out


def test_cut_errors(capsys, write):
    assert run(capsys, "cut", write(CROSSED), "--line", "0", "0", "1", "0")[0] == 3
    assert run(capsys, "cut", write(SQUARE), "--line", "0", "0", "1", "0")[0] == 3
    assert run(capsys, "cut", write(SQUARE), "--line", "0", "0", "0", "0")[0] == 2
    assert run(capsys, "cut", write(SQUARE), "--line", "a", "0", "1", "0")[0] == 2


def test_order_and_perms(capsys, write):
    path = write("1 1\n0 0\n0 1\n1 0\n")
    code, out, _ = run(capsys, "order", path)
    assert code == 0 and out == SQUARE
    code, out, _ = run(capsys, "perms", path)
    assert code == 0
    assert json.loads(out) == {
        "n": 4, "total": 24, "strictly_convex": 8, "expected": 8, "matches_dihedral": True
    }
    code, _, err = run(capsys, "order", write("0 0\n2 0\n1 0\n0 1\n"))
    assert code == 3 and "NotAllExtreme" in err


def test_reduce_and_sub(capsys, write):
    path = write(SQUARE)
    assert run(capsys, "reduce", path, "--alpha", "1")[1] == "0 0\n1 1\n0 1\n"
    assert run(capsys, "reduce", path, "--alpha", "4")[0] == 3
    assert run(capsys, "sub", path, "--indices", "0,2")[1] == "0 0\n1 1\n"
    assert run(capsys, "sub", path, "--indices", "2,0")[0] == 3


def test_corpus(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and "collinear-cut" in out
    code, out, _ = run(capsys, "corpus", "--run")
    assert code == 0
    assert all(line.startswith("PASS ") for line in out.splitlines())


def test_fuzz_json_lines(capsys):
    code, out, _ = run(capsys, "fuzz", "--mode", "random_convex_position", "--n", "6",
                       "--budget", "5", "--check", "equivalence")
    assert code == 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["check"] == "equivalence" and summary["checked"] == 5


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--algo", "one_side", "--n-list", "4,8")
    assert code == 0
    assert out.splitlines() == ["n,orientation_calls,oracle_calls", "4,16,0", "8,64,0"]
    assert run(capsys, "bench", "--algo", "incremental", "--n-list", "12", "--no-memo")[0] == 3


def test_console_entry_point(write):
    proc = subprocess.run(
        [sys.executable, "-m", "polyconvex.cli", "check", write(SQUARE), "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["convex"] is True
