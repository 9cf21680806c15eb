import json

import pytest

from tritperm.cli import dump_matrix_text, load_matrix_text, main
from tritperm.experiments import pi_matrix
from tritperm.permanent import MatrixF3


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_load_matrix_text_both_conventions():
    assert load_matrix_text("2\n0 1\n2 2\n") == load_matrix_text("2\n0 1\n-1 -1\n")


def test_load_matrix_text_errors():
    for text in ("", "x\n1\n", "2\n1 2\n", "2\n1 2 3\n1 2\n", "1\nfoo\n", "0\n"):
        with pytest.raises(ValueError):
            load_matrix_text(text)


def test_dump_round_trip():
    m = pi_matrix(4)
    assert load_matrix_text(dump_matrix_text(m)) == m
    assert load_matrix_text(dump_matrix_text(m, classes=True)) == m


def test_perm_command(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text(dump_matrix_text(MatrixF3([[1, 1], [1, 1]])))
    code, out, _ = run(capsys, "perm", str(f), "--method", "naive")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "-1"
    record = json.loads(lines[1])
    assert record["schema"] == "tritperm.perm.v1"
    assert record["n"] == 2
    assert record["method"] == "naive"
    assert record["value"] == -1
    assert record["elapsed_seconds"] >= 0
    assert record["jobs"] >= 1


def test_perm_mod3_classes_flag(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text(dump_matrix_text(MatrixF3([[1, 1], [1, 1]])))
    code, out, _ = run(capsys, "perm", str(f), "--mod3-classes")
    assert code == 0
    assert out.strip().splitlines()[0] == "2"


def test_perm_methods_agree(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text(dump_matrix_text(pi_matrix(7)))
    values = []
    for method in ("naive", "ryser", "mod3"):
        code, out, _ = run(capsys, "perm", str(f), "--method", method, "--jobs", "2")
        assert code == 0
        values.append(out.strip().splitlines()[0])
    assert len(set(values)) == 1


def test_perm_missing_file(capsys):
    code, _, err = run(capsys, "perm", "no-such-file.txt")
    assert code == 1
    assert err.startswith("error:")
    assert len(err.strip().splitlines()) == 1


def test_count_exact_command(capsys):
    code, out, _ = run(capsys, "count-exact", "--n", "2")
    assert code == 0
    assert "z: 33" in out
    assert "total: 81" in out


def test_count_exact_refusal(capsys):
    code, _, err = run(capsys, "count-exact", "--n", "5")
    assert code == 1
    assert err.startswith("error:")


def test_montecarlo_stdout_csv(capsys):
    code, out, err = run(capsys, "montecarlo", "--n", "2", "--trials", "5000", "--seed", "3")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "schema,n,trials,seed,zero_count,p_hat,stderr"
    fields = row.split(",")
    assert fields[0] == "tritperm.mc.v1"
    assert fields[1:4] == ["2", "5000", "3"]
    assert "# jobs=" in err


def test_montecarlo_out_appends(tmp_path, capsys):
    out_file = tmp_path / "mc.csv"
    for seed in ("1", "2"):
        code, out, _ = run(
            capsys, "montecarlo", "--n", "2", "--trials", "1000",
            "--seed", seed, "--out", str(out_file),
        )
        assert code == 0
        assert out == ""
    lines = out_file.read_text().strip().splitlines()
    assert len(lines) == 3  # one header, two rows
    assert lines[1].split(",")[3] == "1"
    assert lines[2].split(",")[3] == "2"


def test_montecarlo_rows_reproducible(tmp_path, capsys):
    args = ("montecarlo", "--n", "3", "--trials", "2000", "--seed", "9")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_bench_command(capsys):
    code, out, _ = run(
        capsys, "bench", "--n-min", "8", "--n-max", "10",
        "--reps", "1", "--methods", "fast",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("schema,method,model,n,")
    assert len(lines) == 3
    assert all(line.startswith("tritperm.bench.v1,fast,") for line in lines[1:])


def test_bench_reps_zero(capsys):
    code, out, _ = run(
        capsys, "bench", "--n-min", "8", "--n-max", "10", "--reps", "0",
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 1  # header only


def test_pi_matrix_stdout(capsys):
    code, out, _ = run(capsys, "pi-matrix", "--n", "3")
    assert code == 0
    assert out == "3\n0 1 1\n1 -1 0\n-1 0 -1\n"


def test_pi_matrix_classes_and_skip(capsys):
    code, out, _ = run(capsys, "pi-matrix", "--n", "3", "--skip-integer-part", "--mod3-classes")
    assert code == 0
    assert out == "3\n1 1 1\n2 0 2\n0 2 0\n"


def test_pi_matrix_round_trip_through_perm(tmp_path, capsys):
    f = tmp_path / "pi.txt"
    code, _, _ = run(capsys, "pi-matrix", "--n", "6", "--out", str(f))
    assert code == 0
    assert load_matrix_text(f.read_text()) == pi_matrix(6)
    code, out, _ = run(capsys, "perm", str(f), "--method", "ryser")
    assert code == 0
    assert out.strip().splitlines()[0] in {"-1", "0", "1"}


def test_pi_matrix_too_large(capsys):
    code, _, err = run(capsys, "pi-matrix", "--n", "101")
    assert code == 1
    assert err.startswith("error:")


def test_circuits_command(capsys):
    code, out, _ = run(capsys, "circuits", "--op", "mul")
    assert code == 0
    assert "gates: 2" in out
    assert "verified: True" in out


def test_circuits_all(capsys):
    code, out, _ = run(capsys, "circuits")
    assert code == 0
    for op in ("add", "sub", "mul", "div"):
        assert f"op: {op}" in out
