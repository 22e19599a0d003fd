import numpy as np
import pytest

import bimeta as bm
from bimeta import io
from bimeta.cli import main


def write_k22(path):
    path.write_text("1 1\n1 2\n2 1\n2 2\n")


def write_random_graph(path, seed=0, n_u=40, n_v=40, p=0.15):
    rng = np.random.default_rng(seed)
    mask = rng.random((n_u, n_v)) < p
    lines = [f"{i + 1} {j + 1}\n" for i, j in np.argwhere(mask)]
    path.write_text("".join(lines))


def test_measure_k22(tmp_path, capsys):
    f = tmp_path / "k22.txt"
    write_k22(f)
    rc = main(["measure", str(f), "--out-dir", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out == "k22\t2\t2\t4\t4\t1\t1.00e0\n"
    assert (tmp_path / "k22_summary.tsv").read_text() == out


def test_measure_empty_file(tmp_path, capsys):
    f = tmp_path / "empty.txt"
    f.write_text("")
    rc = main(["measure", str(f), "--out-dir", str(tmp_path)])
    assert rc == 0
    assert capsys.readouterr().out == "empty\t0\t0\t0\t0\t0\t0.00e0\n"


def test_measure_missing_file(tmp_path):
    with pytest.raises(SystemExit, match="nope.txt"):
        main(["measure", str(tmp_path / "nope.txt")])


def test_measure_profiles_and_binned(tmp_path, capsys):
    f = tmp_path / "g.txt"
    write_random_graph(f, seed=3)
    rc = main([
        "measure", str(f), "--out-dir", str(tmp_path),
        "--profiles", "--binned", "--side-labels", "left,right",
    ])
    assert rc == 0
    capsys.readouterr()
    prof = tmp_path / "g_profile.tsv"
    assert prof.exists()
    c_u, c_v, s_u, s_v = io.read_profile(prof)
    assert c_u and c_v
    assert (tmp_path / "g_dd_left.tsv").exists()
    assert (tmp_path / "g_dd_right.tsv").exists()
    assert (tmp_path / "g_meta_left.tsv").exists()


def test_generate_cl_trials_and_report(tmp_path, capsys):
    f = tmp_path / "g.txt"
    write_random_graph(f)
    rc = main([
        "generate-cl", str(f), "--seed", "7", "--trials", "3",
        "--out-dir", str(tmp_path / "out"),
    ])
    assert rc == 0
    out = capsys.readouterr().out
    assert "# butterflies\tmean=" in out
    for t in range(3):
        assert (tmp_path / "out" / f"g_cl_trial{t:03d}.txt").exists()
    assert (tmp_path / "out" / "g_cl_report.tsv").exists()


def test_generate_determinism_byte_identical(tmp_path, capsys):
    f = tmp_path / "g.txt"
    write_random_graph(f)
    for d in ("a", "b"):
        rc = main([
            "generate-bter", str(f), "--seed", "42", "--trials", "2",
            "--out-dir", str(tmp_path / d),
        ])
        assert rc == 0
    capsys.readouterr()
    for t in range(2):
        name = f"g_bter_trial{t:03d}.txt"
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    assert (tmp_path / "a" / "g_bter_report.tsv").read_bytes() == (
        tmp_path / "b" / "g_bter_report.tsv"
    ).read_bytes()


def test_generate_from_degree_files(tmp_path, capsys):
    du = tmp_path / "du.txt"
    dv = tmp_path / "dv.txt"
    du.write_text("".join("2\n" for _ in range(20)))
    dv.write_text("".join("4\n" for _ in range(10)))
    rc = main([
        "generate-cl", "--degrees-u", str(du), "--degrees-v", str(dv),
        "--seed", "1", "--out-dir", str(tmp_path / "out"),
    ])
    assert rc == 0
    capsys.readouterr()
    pairs, n_u, n_v = io.read_edge_list(tmp_path / "out" / "degrees_cl_trial000.txt")
    assert n_u <= 20 and n_v <= 10


def test_generate_mismatched_degree_files(tmp_path):
    du = tmp_path / "du.txt"
    dv = tmp_path / "dv.txt"
    du.write_text("2\n")
    dv.write_text("3\n")
    with pytest.raises(SystemExit, match="differ"):
        main([
            "generate-cl", "--degrees-u", str(du), "--degrees-v", str(dv),
            "--seed", "1", "--out-dir", str(tmp_path),
        ])


def test_generate_bter_with_profile_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    write_random_graph(f, seed=5)
    rc = main([
        "measure", str(f), "--profiles", "--out-dir", str(tmp_path),
    ])
    assert rc == 0
    rc = main([
        "generate-bter", str(f), "--profile", str(tmp_path / "g_profile.tsv"),
        "--seed", "3", "--out-dir", str(tmp_path / "out"),
    ])
    assert rc == 0
    capsys.readouterr()
    assert (tmp_path / "out" / "g_bter_trial000.txt").exists()


def test_compare_self_zero_deltas(tmp_path, capsys):
    f = tmp_path / "g.txt"
    write_random_graph(f, seed=1)
    rc = main(["compare", str(f), str(f), "--out-dir", str(tmp_path / "cmp")])
    assert rc == 0
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert lines[0].split("\t")[1:] == lines[1].split("\t")[1:]
    delta = (tmp_path / "cmp" / "g_meta_delta.tsv").read_text()
    for row in delta.strip().split("\n"):
        assert float(row.split("\t")[2]) == 0.0


def test_compare_missing_file(tmp_path):
    f = tmp_path / "g.txt"
    write_k22(f)
    with pytest.raises(SystemExit, match="missing.txt"):
        main(["compare", str(f), str(tmp_path / "missing.txt")])


def test_oracle_check_subcommand(capsys):
    rc = main(["oracle-check", "--graphs", "5", "--seed", "0"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "5/5 graphs matched the oracle" in out


def test_jobs_parallel_matches_serial(tmp_path, capsys):
    f = tmp_path / "g.txt"
    write_random_graph(f)
    for d, jobs in (("serial", "1"), ("par", "2")):
        rc = main([
            "generate-cl", str(f), "--seed", "9", "--trials", "4",
            "--jobs", jobs, "--out-dir", str(tmp_path / d),
        ])
        assert rc == 0
    capsys.readouterr()
    for t in range(4):
        name = f"g_cl_trial{t:03d}.txt"
        assert (tmp_path / "serial" / name).read_bytes() == (
            tmp_path / "par" / name
        ).read_bytes()
