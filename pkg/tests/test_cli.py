import subprocess
import sys

import pytest

from limitvar.cli import run


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decide_exit_codes(capsys):
    assert cli(capsys, "decide", "xyx", "xxyxx")[0] == 0
    code, out, _ = cli(capsys, "decide", "xyytx", "xyyxtx", "--oracle")
    assert code == 1 and "oracle: fails in A1" in out
    assert cli(capsys, "decide", "1", "1")[0] == 0


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["decide", "x2", "y"])
    assert exc.value.code == 2
    assert "not a word" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 2


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = cli(capsys, "checktrace", str(tmp_path / "missing.txt"))
    assert code == 2 and err.startswith("error:")


def test_verify_nonid(capsys):
    code, out, err = cli(capsys, "verify", "nonid")
    assert code == 0
    assert len(out.strip().splitlines()) == 4
    assert "N9" in err                       # diagnostics stay off stdout


def test_verify_basis(capsys):
    code, out, _ = cli(capsys, "verify", "basis", "--n-max", "2")
    assert code == 0 and len(out.strip().splitlines()) == 17


def test_word_analyze(capsys):
    code, out, _ = cli(capsys, "word", "analyze", "xxxabcyxdyyefx")
    assert code == 0 and "F_SS = {ab, bc, ef}" in out


def test_canon_trace_and_checktrace(capsys, tmp_path):
    path = tmp_path / "trace.txt"
    code, out, _ = cli(capsys, "canon", "xytxsy", "--trace", str(path))
    assert code == 0 and "canonical (xy)² t x² s y²" in out
    assert cli(capsys, "checktrace", str(path), "--word", "xytxsy")[0] == 0
    lines = path.read_text().splitlines()
    lines[2] = lines[2].replace("|- ", "|- x", 1)
    path.write_text("\n".join(lines) + "\n")
    assert cli(capsys, "checktrace", str(path))[0] == 1


def test_certificate(capsys, tmp_path):
    path = tmp_path / "cert.txt"
    assert cli(capsys, "decide", "yxxytxsy", "xytxsy", "--certificate", str(path))[0] == 0
    assert cli(capsys, "checktrace", str(path), "--word", "yxxytxsy")[0] == 0


def test_monoid_commands(capsys):
    code, out, _ = cli(capsys, "monoid", "list")
    assert code == 0 and "A1xB1\t49" in out
    code, out, _ = cli(capsys, "monoid", "show", "J1", "--table")
    assert code == 0 and "order 4" in out


def test_difftest_prints_seed(capsys):
    code, out, _ = cli(capsys, "difftest", "--maxlen", "3", "--random", "50", "--seed", "9")
    assert code == 0 and out.startswith("seed 9") and "disagreements 0" in out


def test_lattice_outputs(capsys, tmp_path):
    dot, tsv = tmp_path / "l.dot", tmp_path / "m.tsv"
    code, out, err = cli(capsys, "lattice", "--dot", str(dot), "--matrix", str(tsv))
    assert code == 0 and "A1 < A1xB1" in out and "matches figure: yes" in err
    assert dot.read_text().startswith("digraph")
    assert tsv.read_text().startswith("monoid\t(7)")


def test_satisfies(capsys, tmp_path):
    assert cli(capsys, "satisfies", "xx=xxx", "--monoid", "A1xB1")[0] == 0
    table = tmp_path / "n.txt"
    table.write_text("0 a 1\n0 0 0\n0 0 a\n0 a 1\n")
    assert cli(capsys, "satisfies", "xy=yx", "--table-file", str(table))[0] == 0
    pres = tmp_path / "j.txt"
    pres.write_text("gens: a b\nab = 0\nba = a\nbb = b\n")
    code, out, _ = cli(capsys, "satisfies", "xy=yx", "--presentation-file", str(pres), "--adjoin")
    assert code == 1 and "witness" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "limitvar", "decide", "xy", "yx"],
                       capture_output=True, text=True)
    assert r.returncode == 1 and "simple-projection" in r.stdout
