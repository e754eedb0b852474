import json

import pytest

from gridcover import cli


SMALL_CONFIG = """\
# small smoke scenario
grid_w = 20
grid_h = 20
n_agents = 4
sense_radius = 3.0
comm_range = 8.0
seed = 1
trials = 3
"""


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "scenario.cfg"
    path.write_text(SMALL_CONFIG)
    return str(path)


class TestConfigParsing:
    def test_file_round_trip(self, config_file):
        values = cli.parse_config_file(config_file)
        assert values == {
            "grid_w": 20, "grid_h": 20, "n_agents": 4, "sense_radius": 3.0,
            "comm_range": 8.0, "seed": 1, "trials": 3,
        }

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("velocity = 3\n")
        with pytest.raises(cli.CliConfigError):
            cli.parse_config_file(str(path))

    def test_comma_list_range(self, tmp_path):
        path = tmp_path / "list.cfg"
        path.write_text("comm_range = 1, 2.5, 3\n")
        assert cli.parse_config_file(str(path)) == {"comm_range": [1.0, 2.5, 3.0]}

    def test_sweep_spec(self):
        assert cli.parse_sweep_spec("1:5:2") == [1.0, 3.0, 5.0]
        assert cli.parse_sweep_spec("1:50:1")[-1] == 50.0
        with pytest.raises(cli.CliConfigError):
            cli.parse_sweep_spec("5:1:1")
        with pytest.raises(cli.CliConfigError):
            cli.parse_sweep_spec("1-5-2")


class TestRunCommand:
    def test_run_writes_csv_and_summary(self, config_file, tmp_path, capsys):
        out = tmp_path / "result.csv"
        code = cli.main(["run", "--config", config_file, "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == ("trial,algorithm,objective,comm_rounds,iterations,"
                            "total_evals,gain_msgs,action_msgs,payload_bytes")
        assert len(lines) == 4
        summary = json.loads(out.with_suffix(".json").read_text())
        assert summary["trials"] == 3

    def test_byte_identical_across_runs(self, config_file, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(["run", "--config", config_file, "--out", str(out1)]) == 0
        assert cli.main(["run", "--config", config_file, "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        assert out1.with_suffix(".json").read_bytes() == out2.with_suffix(".json").read_bytes()

    def test_flags_override_file(self, config_file, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.main(["run", "--config", config_file, "--out", str(out1)])
        cli.main(["run", "--config", config_file, "--seed", "99", "--out", str(out2)])
        assert out1.read_bytes() != out2.read_bytes()

    def test_stdout_output(self, config_file, capsys):
        assert cli.main(["run", "--config", config_file, "--trials", "1"]) == 0
        captured = capsys.readouterr().out
        assert captured.startswith("trial,algorithm,")
        assert '"mean_objective"' in captured

    def test_bad_config_file_exits_2(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("n_agents = many\n")
        assert cli.main(["run", "--config", str(path)]) == cli.EXIT_CONFIG

    def test_invalid_scenario_exits_2(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("n_agents = 0\n")
        assert cli.main(["run", "--config", str(path)]) == cli.EXIT_CONFIG

    def test_baseline_algo_flag(self, config_file, tmp_path):
        out = tmp_path / "iso.csv"
        assert cli.main(["run", "--config", config_file, "--algo", "isolated",
                         "--out", str(out)]) == 0
        assert ",isolated," in out.read_text().splitlines()[1]


class TestSweepCommand:
    def test_sweep_csv(self, config_file, tmp_path):
        out = tmp_path / "sweep.csv"
        code = cli.main(["sweep", "--config", config_file, "--sweep", "0:8:4",
                         "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("comm_range,objective,")
        assert len(lines) == 4

    def test_sweep_requires_spec(self, config_file):
        assert cli.main(["sweep", "--config", config_file]) == cli.EXIT_CONFIG

    def test_range_zero_column_matches_isolated(self, config_file, tmp_path):
        sweep_out = tmp_path / "sweep.csv"
        iso_out = tmp_path / "iso.csv"
        cli.main(["sweep", "--config", config_file, "--sweep", "0:0:1", "--out", str(sweep_out)])
        cli.main(["run", "--config", config_file, "--algo", "isolated", "--out", str(iso_out)])
        sweep_obj = float(sweep_out.read_text().splitlines()[1].split(",")[1])
        iso_summary = json.loads(iso_out.with_suffix(".json").read_text())
        assert sweep_obj == iso_summary["mean_objective"]


class TestVerifyCommand:
    def test_verify_ok(self, tmp_path, capsys):
        path = tmp_path / "v.cfg"
        path.write_text("grid_w = 15\ngrid_h = 15\nn_agents = 4\nsense_radius = 3.0\n"
                        "comm_range = 6.0\nseed = 11\ntrials = 2\n")
        assert cli.main(["verify", "--config", str(path)]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["ok"] is True

    def test_verify_oversized_exits_2(self, tmp_path):
        path = tmp_path / "v.cfg"
        path.write_text("n_agents = 9\n")
        assert cli.main(["verify", "--config", str(path)]) == cli.EXIT_CONFIG


class TestCompareCommand:
    def test_compare_rows(self, config_file, tmp_path):
        out = tmp_path / "cmp.csv"
        assert cli.main(["compare", "--config", config_file, "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 10  # header + 3 trials x 3 algorithms
        algos = {line.split(",")[1] for line in lines[1:]}
        assert algos == {"rag", "sequential", "isolated"}
