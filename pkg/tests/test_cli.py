import subprocess
import sys
from pathlib import Path

from ptdfa import generate, minimize, serialize

HEADER_ONLY = "dfa 1 1 0 0 0\n"


def run_cli(*args, stdin=""):
    return subprocess.run([sys.executable, "-m", "ptdfa", *args],
                          input=stdin, capture_output=True, text=True)


def test_minimize_header_only_round_trip():
    r = run_cli("minimize", "--in", "-", "--out", "-", stdin=HEADER_ONLY)
    assert r.returncode == 0
    assert r.stdout == HEADER_ONLY


def test_minimize_via_files(tmp_path: Path):
    src = tmp_path / "in.dfa"
    dst = tmp_path / "out.dfa"
    d = generate(12, 3, 0.5, 6, seed=2)
    src.write_text(serialize(d))
    r = run_cli("minimize", "--in", str(src), "--out", str(dst))
    assert r.returncode == 0
    assert dst.read_text() == serialize(minimize(d))


def test_minimize_malformed_header_exits_1():
    r = run_cli("minimize", "--in", "-", stdin="dfa 1 1\n")
    assert r.returncode == 1
    assert "line 1" in r.stderr


def test_minimize_invalid_automaton_exits_1():
    bad = "dfa 2 1 2 0 0\n0 0 0\n0 0 1\n"
    r = run_cli("minimize", "--in", "-", stdin=bad)
    assert r.returncode == 1
    assert "duplicate transition key" in r.stderr


def test_minimize_unknown_flag_exits_2():
    r = run_cli("minimize", "--frobnicate")
    assert r.returncode == 2


def test_algorithms_produce_identical_bytes(tmp_path: Path):
    src = tmp_path / "in.dfa"
    src.write_text(serialize(generate(40, 4, 0.4, 17, seed=3)))
    outputs = []
    for algo in ("valmari", "hopcroft", "oracle"):
        r = run_cli("minimize", "--in", str(src), "--algo", algo)
        assert r.returncode == 0
        outputs.append(r.stdout)
    assert outputs[0] == outputs[1] == outputs[2]


def test_minimize_stats_go_to_stderr():
    r = run_cli("minimize", "--in", "-", "--stats", stdin=HEADER_ONLY)
    assert r.returncode == 0
    assert r.stdout == HEADER_ONLY
    assert "splitter_touches=0" in r.stderr
    assert "n_out=1" in r.stderr


def test_generate_deterministic_bytes(tmp_path: Path):
    args = ("generate", "--states", "25", "--alphabet", "3",
            "--density", "0.4", "--seed", "7")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_generate_zero_density_exits_2():
    r = run_cli("generate", "--states", "5", "--alphabet", "2",
                "--density", "0")
    assert r.returncode == 2


def test_generate_emits_requested_transition_count():
    r = run_cli("generate", "--states", "1000", "--alphabet", "100",
                "--density", "0.1")
    assert r.returncode == 0
    header = r.stdout.splitlines()[0].split()
    assert header == ["dfa", "1000", "100", "10000", "500", "0"]
    assert len(r.stdout.splitlines()) == 1 + 10000 + 500


def test_check_isomorphic_self(tmp_path: Path):
    f = tmp_path / "a.dfa"
    f.write_text(serialize(minimize(generate(10, 2, 0.6, 4, seed=5))))
    r = run_cli("check", "--isomorphic", str(f), str(f))
    assert r.returncode == 0


def test_check_equiv_with_minimized(tmp_path: Path):
    d = generate(14, 2, 0.5, 6, seed=6)
    a = tmp_path / "a.dfa"
    b = tmp_path / "b.dfa"
    a.write_text(serialize(d))
    b.write_text(serialize(minimize(d)))
    r = run_cli("check", "--equiv", str(a), str(b))
    assert r.returncode == 0


def test_check_equiv_false_exits_3(tmp_path: Path):
    a = tmp_path / "a.dfa"
    b = tmp_path / "b.dfa"
    a.write_text("dfa 1 1 0 0 0\n")
    b.write_text("dfa 1 1 0 1 0\n0\n")
    r = run_cli("check", "--equiv", str(a), str(b))
    assert r.returncode == 3


def test_check_isomorphic_false_exits_3(tmp_path: Path):
    a = tmp_path / "a.dfa"
    b = tmp_path / "b.dfa"
    a.write_text("dfa 1 1 0 0 0\n")
    b.write_text("dfa 1 1 0 1 0\n0\n")
    r = run_cli("check", "--isomorphic", str(a), str(b))
    assert r.returncode == 3


def test_check_bad_file_exits_1(tmp_path: Path):
    a = tmp_path / "a.dfa"
    a.write_text("not a dfa\n")
    r = run_cli("check", "--equiv", str(a), str(a))
    assert r.returncode == 1


def test_bench_one_cell_one_row(tmp_path: Path):
    out = tmp_path / "rows.csv"
    r = run_cli("bench", "--cell", "12,2,0.5", "--csv", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("algo,n,alpha,p,d,seed,m_in,")


def test_bench_grid_file_and_seeds(tmp_path: Path):
    grid = tmp_path / "cells.grid"
    grid.write_text("8,2,0.5\n10,2,0.5\n")
    r = run_cli("bench", "--grid", str(grid), "--seeds", "2",
                "--algo", "valmari,hopcroft")
    assert r.returncode == 0
    assert len(r.stdout.splitlines()) == 1 + 2 * 2 * 2


def test_bench_invalid_cell_exits_2():
    r = run_cli("bench", "--cell", "12,2")
    assert r.returncode == 2


def test_bench_without_cells_exits_2():
    r = run_cli("bench")
    assert r.returncode == 2
