import json

import pytest

from decosim.cli import main
from decosim.config import (
    ConfigError,
    apply_overrides,
    parse_config,
    validate_config,
)


def write(tmp_path, data, name="conf.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def test_parse_minimal_fig1(tmp_path):
    conf = parse_config(write(tmp_path, {"scenario": "fig1"}))
    assert conf.dim == 2
    assert conf.n_samples == 100_000
    assert conf.tau == 0.1


def test_parse_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        parse_config(tmp_path / "nope.json")


def test_parse_empty_config_lists_missing_key(tmp_path):
    with pytest.raises(ConfigError, match="scenario"):
        parse_config(write(tmp_path, {}))


def test_parse_unknown_key_named(tmp_path):
    with pytest.raises(ConfigError, match="bogus"):
        parse_config(write(tmp_path, {"scenario": "fig1", "bogus": 3}))


def test_inconsistent_oscillator_named(tmp_path):
    data = {
        "scenario": "phase_single",
        "oscillator": {"mass": 2.0, "k": 1.0, "omega": 0.5},
    }
    with pytest.raises(ConfigError, match="omega"):
        parse_config(write(tmp_path, data))


def test_defaults_match_figure_captions():
    conf = validate_config({"scenario": "phase_single"})
    assert conf.x0 == pytest.approx(1 / 3)
    assert conf.oscillator.mass == 4.0 and conf.oscillator.k == 1.0
    assert conf.grid.t_max == 300.0
    multi = validate_config({"scenario": "phase_multi"})
    assert multi.x0 == 0.5
    assert multi.physics.omega_s == 1.0
    assert multi.physics.g1 == multi.physics.g2 == multi.physics.lam == 1.0


def test_apply_overrides():
    conf = validate_config({"scenario": "phase_single"})
    out = apply_overrides(conf, tau=0.3, t_max=10.0, steps=5, seed=7)
    assert out.taus == [0.3]
    assert out.grid.t_max == 10.0 and out.grid.steps == 5
    assert out.seed == 7
    fig1 = apply_overrides(validate_config({"scenario": "fig1"}), dim=3, tau=0.2)
    assert fig1.dim == 3 and fig1.tau == 0.2
    with pytest.raises(ConfigError):
        apply_overrides(conf, dim=4)


def test_config_echo_reparses_identically():
    conf = validate_config({"scenario": "entanglement_suite"})
    assert validate_config(conf.model_dump()) == conf


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out.split()
    assert out == [
        "fig1", "phase_single", "entropy_vs_x0", "phase_multi",
        "energy_entropy_sweep", "entanglement_suite",
    ]


def test_cli_unknown_flag_usage_error(capsys):
    assert main(["run", "--frobnicate"]) == 2


def test_cli_missing_config_exit_2(tmp_path, capsys):
    code = main(["run", "--config", str(tmp_path / "missing.json"), "--out", str(tmp_path)])
    assert code == 2
    assert "not found" in capsys.readouterr().err


def test_cli_run_end_to_end(tmp_path, capsys):
    conf = write(tmp_path, {"scenario": "fig1", "n_samples": 200})
    out_dir = tmp_path / "out"
    assert main(["run", "--config", str(conf), "--out", str(out_dir), "--seed", "5"]) == 0
    csv_text = (out_dir / "fig1.csv").read_text()
    assert csv_text.startswith("D,S_final\n")
    assert len(csv_text.splitlines()) == 201
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["seed"] == 5  # flag overrode the config default
    assert manifest["config"]["n_samples"] == 200
    # manifest echo re-parses to the same resolved config
    assert validate_config(manifest["config"]).model_dump() == manifest["config"]


def test_cli_run_determinism(tmp_path):
    conf = write(tmp_path, {"scenario": "fig1", "n_samples": 100, "seed": 3})
    for name in ("a", "b"):
        assert main(["run", "--config", str(conf), "--out", str(tmp_path / name)]) == 0
    assert (tmp_path / "a" / "fig1.csv").read_bytes() == (tmp_path / "b" / "fig1.csv").read_bytes()


def test_cli_validate(capsys):
    assert main(["validate"]) == 0
    assert "ok" in capsys.readouterr().out
