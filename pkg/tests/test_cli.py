from __future__ import annotations

import json

import pytest
import yaml
from click.testing import CliRunner

from refcases import BLUE
from qbat.cli import main

runner = CliRunner()


@pytest.fixture
def blue_config(tmp_path):
    path = tmp_path / "blue.yaml"
    path.write_text(
        yaml.safe_dump(
            {
                "T_c": BLUE.T_c, "T_h": BLUE.T_h, "T_l": BLUE.T_l,
                "eps": BLUE.eps, "eps_b": BLUE.eps_b, "eps_a": BLUE.eps_a,
                "p_c": BLUE.p_c, "p_h": BLUE.p_h, "tau": BLUE.tau,
            }
        )
    )
    return str(path)


def test_steady_command_prints_state(blue_config):
    result = runner.invoke(main, ["steady", "--config", blue_config])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["indicators"]["store_over_charge"] > 1.0


def test_steady_command_writes_output_file(blue_config, tmp_path):
    out = tmp_path / "steady.json"
    result = runner.invoke(main, ["steady", "--config", blue_config, "--out", str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text())["state"]["rho_bb"] > 0.0


def test_cumulants_command(blue_config):
    result = runner.invoke(main, ["cumulants", "--config", blue_config])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert len(body["j"]) == 4 and all(body["valid"])


def test_ergotropy_command_with_variant(blue_config):
    default = runner.invoke(main, ["ergotropy", "--config", blue_config])
    verbatim = runner.invoke(
        main, ["ergotropy", "--config", blue_config, "--variant", "verbatim"]
    )
    assert default.exit_code == 0 and verbatim.exit_code == 0
    assert json.loads(default.output)["ratio"] != json.loads(verbatim.output)["ratio"]


def test_evolve_command(blue_config):
    result = runner.invoke(
        main, ["evolve", "--config", blue_config, "--t-end", "5", "--n-out", "11"]
    )
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)["times"]) == 11


def test_invalid_parameters_fail_with_machine_readable_error(blue_config, tmp_path):
    bad = tmp_path / "bad.yaml"
    cfg = yaml.safe_load(open(blue_config))
    cfg["eps_b"] = 0.05
    bad.write_text(yaml.safe_dump(cfg))
    result = runner.invoke(main, ["steady", "--config", str(bad)])
    assert result.exit_code == 1
    err = json.loads(result.stderr.strip().splitlines()[-1])
    assert err["error"] == "invalid_params"


def test_sweep_filter_split_commands(tmp_path):
    raw = tmp_path / "raw.csv"
    clean = tmp_path / "clean.csv"
    dev = tmp_path / "dev.csv"
    test = tmp_path / "test.csv"

    result = runner.invoke(
        main,
        ["sweep", "--values-per-param", "2", "--seed", "7", "--out", str(raw)],
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["records"] == 128

    result = runner.invoke(main, ["filter", "--dataset", str(raw), "--out", str(clean)])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["kept"] + body["dropped"] == 128

    result = runner.invoke(
        main,
        [
            "split", "--dataset", str(clean),
            "--dev-out", str(dev), "--test-out", str(test), "--seed", "3",
        ],
    )
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["dev_records"] > 0 and body["test_records"] > 0


def test_sweep_workers_flag_gives_identical_file(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for out, workers in ((a, "1"), (b, "2")):
        result = runner.invoke(
            main,
            [
                "sweep", "--values-per-param", "2", "--seed", "7",
                "--workers", workers, "--out", str(out),
            ],
        )
        assert result.exit_code == 0, result.output
    assert a.read_bytes() == b.read_bytes()


def test_sweep_config_file_with_flag_overrides(tmp_path):
    cfg = tmp_path / "sweep.yaml"
    cfg.write_text(yaml.safe_dump({"values_per_param": 3, "seed": 1}))
    out = tmp_path / "d.csv"
    result = runner.invoke(
        main,
        ["sweep", "--config", str(cfg), "--values-per-param", "2", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["records"] == 128  # flag wins over config
