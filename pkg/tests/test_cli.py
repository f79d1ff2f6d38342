import csv
from pathlib import Path

from phitsp.cli import main


def _write(tmp_path: Path, name: str, text: str) -> Path:
    p = tmp_path / name
    p.write_text(text)
    return p


K4_PATH = """n 4
m 6
e 0 1 1
e 0 2 1
e 0 3 1
e 1 2 1
e 1 3 1
e 2 3 1
I 0 1
T 0 1
C 0 1
"""


def test_gen_solve_check_cycle(tmp_path, capsys):
    inst_file = tmp_path / "r.phi"
    assert main(["gen", "--n", "5", "--m", "7", "--max-len", "6", "--seed", "3",
                 "--mode", "path", "--out", str(inst_file)]) == 0
    tour_file = tmp_path / "r.tour"
    assert main(["solve", "--instance", str(inst_file), "--algo", "seven-approx",
                 "--out", str(tour_file)]) == 0
    assert main(["check", "--instance", str(inst_file), "--tour", str(tour_file)]) == 0
    out = capsys.readouterr().out
    assert "valid tour" in out


def test_solve_boost_and_exact_agree_on_k4(tmp_path, capsys):
    inst_file = _write(tmp_path, "k4.phi", K4_PATH)
    tour_file = tmp_path / "k4.tour"
    assert main(["solve", "--instance", str(inst_file), "--algo", "boost",
                 "--tsp", "exact", "--base", "exact", "--epsilon", "1",
                 "--levels", "1", "--out", str(tour_file)]) == 0
    assert "length 3" in capsys.readouterr().out
    assert main(["check", "--instance", str(inst_file), "--tour", str(tour_file)]) == 0


def test_check_rejects_corrupted_multiplicity(tmp_path, capsys):
    inst_file = _write(tmp_path, "k4.phi", K4_PATH)
    tour_file = tmp_path / "k4.tour"
    assert main(["solve", "--instance", str(inst_file), "--algo", "seven-approx",
                 "--out", str(tour_file)]) == 0
    capsys.readouterr()
    lines = tour_file.read_text().splitlines()
    u, v, mult = lines[0].split()
    lines[0] = f"{u} {v} {int(mult) + 1}"
    tour_file.write_text("\n".join(lines) + "\n")
    assert main(["check", "--instance", str(inst_file), "--tour", str(tour_file)]) == 1
    assert "parity violation" in capsys.readouterr().out


def test_oracle_command(tmp_path, capsys):
    inst_file = _write(tmp_path, "k4.phi", K4_PATH)
    assert main(["oracle", "--instance", str(inst_file)]) == 0
    assert "optimum 3" in capsys.readouterr().out
    assert main(["oracle", "--instance", str(inst_file), "--problem", "tsp"]) == 0
    assert "optimum 4" in capsys.readouterr().out
    assert main(["oracle", "--instance", str(inst_file), "--problem", "path"]) == 0
    assert "optimum 3" in capsys.readouterr().out


def test_infeasible_instance_exits_nonzero(tmp_path, capsys):
    bad = """n 4
m 2
e 0 1 1
e 2 3 1
I
T
C
"""
    inst_file = _write(tmp_path, "bad.phi", bad)
    assert main(["solve", "--instance", str(inst_file), "--algo", "seven-approx"]) == 1
    assert "error" in capsys.readouterr().err


def test_bench_produces_one_row_per_pair(tmp_path, capsys):
    for seed in range(3):
        main(["gen", "--n", "5", "--m", "6", "--max-len", "5", "--seed", str(seed),
              "--mode", "path", "--out", str(tmp_path / f"i{seed}.phi")])
    out_csv = tmp_path / "bench.csv"
    assert main(["bench", "--dir", str(tmp_path), "--out", str(out_csv),
                 "--with-oracle", "--algos", "seven-approx,boost"]) == 0
    with open(out_csv) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6
    assert rows == sorted(rows, key=lambda r: (r["instance"], r["algorithm"]))
    for row in rows:
        assert row["valid"] == "true"
        num, _, den = row["ratio"].partition("/")
        ratio = int(num) / int(den or 1)
        assert ratio >= 1
        if row["algorithm"] == "seven-approx":
            assert ratio <= 7
