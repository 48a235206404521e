import pytest

from rsfradar.cli import main


def test_study_runs_with_flags(tmp_path):
    out = tmp_path / "scatter.csv"
    code = main(["crb-scatter", "--seed", "5", "--trials", "4", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "code_id,lb,mse"
    assert len(lines) == 101  # default 100 codes


def test_config_file_applied(tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("n_codes = 3\nn_trials = 4\n")
    out = tmp_path / "scatter.csv"
    code = main(["crb-scatter", "--config", str(cfg), "--out", str(out)])
    assert code == 0
    assert len(out.read_text().splitlines()) == 4


def test_unknown_config_key_fails(tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("frobnicate = yes\n")
    out = tmp_path / "x.csv"
    assert main(["crb-scatter", "--config", str(cfg), "--out", str(out)]) == 2
    assert not out.exists()


def test_unwritable_output_fails(tmp_path):
    assert main([
        "objective-compare", "--trials", "1", "--out",
        str(tmp_path / "missing_dir" / "x.csv"),
    ]) == 2


def test_out_flag_required():
    with pytest.raises(SystemExit):
        main(["crb-scatter"])


def test_sequential_subcommand(tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("sigma2_grid = 0\nn_designed = 2\n")
    out = tmp_path / "seq.csv"
    code = main([
        "sequential-compare", "--config", str(cfg), "--seed", "1",
        "--trials", "2", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "sigma2_db,n_measurements,mode,mse,exact_fraction"
    assert len(lines) == 1 + 3 * 2
