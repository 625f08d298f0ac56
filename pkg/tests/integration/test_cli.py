"""Integration tests for the CLI interface."""

import json

import pytest
import yaml

from ctower import __version__
from ctower.cli import cli


def _run(runner, *args):
    return runner.invoke(cli, list(args))


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestCLI:
    def test_cli_help(self, cli_runner):
        result = _run(cli_runner, "--help")
        assert result.exit_code == 0
        assert "tower" in result.output
        assert "numring" in result.output

    def test_version(self, cli_runner):
        result = _run(cli_runner, "--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_info(self, cli_runner):
        data = _json(_run(cli_runner, "info"))
        assert data["version"] == __version__
        assert {"all", "none", "even", "threshold"} <= {p["name"] for p in data["predicates"]}
        assert "zsqrt7" in data["presentations"]
        assert data["config"]["build"]["base_prime_window"] == 8
        assert data["formats"] == ["json"]

    def test_info_presentations_only(self, cli_runner):
        data = _json(_run(cli_runner, "info", "--presentations"))
        assert set(data) == {"version", "presentations"}

    def test_invalid_config_file(self, cli_runner, temp_dir):
        bad = temp_dir / "bad.yaml"
        bad.write_text("build: [1, 2")
        result = _run(cli_runner, "--config", str(bad), "info")
        assert result.exit_code == 2


class TestTowerCommands:
    def test_build_even(self, cli_runner, temp_dir):
        out = temp_dir / "even.json"
        data = _json(_run(cli_runner, "tower", "build", "-p", "even", "-n", "6", "-o", str(out)))
        assert data["mode"] == "stage"
        assert data["levels"] == 8
        assert data["acts"] == [2, 0, 0]
        assert data["violations"] == []
        assert len(json.loads(out.read_text())) == 8

        query = _json(
            _run(cli_runner, "tower", "query", "--tower", str(out), "-e", "y(0,0)", "--op", "is_unit")
        )
        assert query["result"] is True
        assert query["level"] == 7

    def test_build_threshold(self, cli_runner):
        data = _json(_run(cli_runner, "tower", "build", "-p", "threshold:2,0,1", "-n", "10"))
        assert data["acts"][:3] == [2, 0, 1]

    def test_build_inline_json_predicate(self, cli_runner):
        data = _json(
            _run(cli_runner, "tower", "build", "-p", '{"kind": "threshold", "acts": [1]}', "-n", "3")
        )
        assert data["acts"][0] == 1

    def test_report_format_choice(self, cli_runner):
        data = _json(_run(cli_runner, "tower", "build", "-p", "none", "-n", "2", "--format", "json"))
        assert data["stages"] == 2
        result = _run(cli_runner, "tower", "build", "-p", "none", "-n", "2", "--format", "sarif")
        assert result.exit_code == 2

    def test_build_unknown_predicate(self, cli_runner):
        result = _run(cli_runner, "tower", "build", "-p", "no-such-predicate", "-n", "3")
        assert result.exit_code == 2

    def test_query_degrees(self, cli_runner, fac5_tower_file):
        expr = "y(2,0)^2 + y(2,0)^5"
        dx = _json(_run(cli_runner, "tower", "query", "--tower", str(fac5_tower_file), "-e", expr, "--op", "deg_x"))
        dy = _json(_run(cli_runner, "tower", "query", "--tower", str(fac5_tower_file), "-e", expr, "--op", "deg_y"))
        assert dx["result"] == -2
        assert dy["result"] == 5

    def test_query_element(self, cli_runner, fac5_tower_file):
        data = _json(_run(cli_runner, "tower", "query", "--tower", str(fac5_tower_file), "-e", "x(2,0) * y(2,0)"))
        assert data["op"] == "element"
        assert data["element"] == {"xs": [], "c": 5, "ys": []}
        assert "result" not in data

    def test_query_divides(self, cli_runner, fac5_tower_file):
        tower = str(fac5_tower_file)
        yes = _run(cli_runner, "tower", "query", "--tower", tower, "-e", "5 * y(2,0)",
                   "--op", "divides", "--by", "x:2:0", "--assert")
        assert _json(yes)["result"] is True
        no = _run(cli_runner, "tower", "query", "--tower", tower, "-e", "y(2,0) + 1",
                  "--op", "divides", "--by", "x(2,0)", "--assert")
        assert no.exit_code == 1

    def test_query_exact_div(self, cli_runner, fac5_tower_file):
        data = _json(_run(cli_runner, "tower", "query", "--tower", str(fac5_tower_file),
                          "-e", "5 * y(2,0)", "--op", "exact_div", "--by", "x:2:0"))
        assert data["result"] == {"xs": [], "c": 0, "ys": [[2, 1]]}

    @pytest.mark.parametrize(
        "args",
        [
            ["-e", "x(5,0)"],
            ["-e", "x(2,0) +"],
            ["-e", "x(2,0)", "--op", "divides"],
            ["-e", "y(2,0)", "--op", "divides", "--by", "p:2"],
        ],
    )
    def test_query_errors(self, cli_runner, fac5_tower_file, args):
        result = _run(cli_runner, "tower", "query", "--tower", str(fac5_tower_file), *args)
        assert result.exit_code == 2

    def test_check(self, cli_runner, fac5_tower_file):
        data = _json(_run(cli_runner, "tower", "check", "--tower", str(fac5_tower_file),
                          "--samples", "20", "--assert"))
        assert data == {"levels": 2, "violations": []}

    def test_check_malformed_tower(self, cli_runner, temp_dir):
        bad = temp_dir / "bad.json"
        bad.write_text('[{"index": 0, "kind": "loc"}]')
        assert _run(cli_runner, "tower", "check", "--tower", str(bad)).exit_code == 2


class TestPidCommand:
    def test_pid_build(self, cli_runner, temp_dir):
        out = temp_dir / "pid.json"
        data = _json(_run(cli_runner, "pid", "build", "--enum", "2@3,5@7", "-n", "10", "-o", str(out)))
        assert data["mode"] == "pid"
        states = {entry["i"]: entry["state"] for entry in data["per_i"]}
        assert states[2] == states[5] == "unit"
        assert states[3] == "prime"

        query = _run(cli_runner, "tower", "query", "--tower", str(out), "-e", "126",
                     "--op", "divides", "--by", "p:3", "--assert")
        assert _json(query)["result"] is True

    def test_pid_report_format(self, cli_runner):
        data = _json(_run(cli_runner, "pid", "build", "--enum", "1@0", "-n", "2", "-f", "json"))
        assert data["mode"] == "pid"

    def test_pid_duplicate_index(self, cli_runner):
        result = _run(cli_runner, "pid", "build", "--enum", "2@3,2@5", "-n", "10")
        assert result.exit_code == 2


class TestNumringCommand:
    def test_norm(self, cli_runner):
        data = _json(_run(cli_runner, "numring", "-t", "zsqrt7", "--op", "norm", "-e", "[2,1]"))
        assert data == {"norm": -3}

    def test_is_prime(self, cli_runner):
        assert _json(_run(cli_runner, "numring", "-t", "zsqrt7", "--op", "is_prime", "-e", "[2,1]")) == {
            "is_prime": True
        }
        result = _run(cli_runner, "numring", "-t", "zsqrt7", "--op", "is_prime", "-e", "3", "--assert")
        assert result.exit_code == 1

    def test_divides(self, cli_runner):
        data = _json(_run(cli_runner, "numring", "-t", "zsqrt7", "--op", "divides", "-e", "[2,1]", "--rhs", "3"))
        assert data == {"divides": True, "quotient": [-2, 1]}

    def test_reps(self, cli_runner):
        data = _json(_run(cli_runner, "numring", "-t", "gaussian", "--op", "reps", "-e", "2"))
        assert data == {"reps": [[0, 0], [1, 0], [0, 1], [1, 1]]}

    def test_table_file(self, cli_runner, temp_dir):
        table = temp_dir / "gauss.json"
        table.write_text(json.dumps({"n": 2, "table": [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]}))
        data = _json(_run(cli_runner, "numring", "-t", str(table), "--op", "is_unit", "-e", "[0,1]"))
        assert data == {"is_unit": True}

    def test_large_prime_in_the_integers(self, cli_runner):
        assert _json(_run(cli_runner, "numring", "-t", "z", "--op", "is_prime", "-e", "211")) == {
            "is_prime": True
        }

    def test_table_with_zero_divisors(self, cli_runner, temp_dir):
        table = temp_dir / "nil.json"
        table.write_text(json.dumps({"n": 2, "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]}))
        result = _run(cli_runner, "numring", "-t", str(table), "--op", "divides", "-e", "[0,1]", "--rhs", "1")
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "args",
        [
            ["-t", "zsqrt7", "--op", "divides", "-e", "3"],
            ["-t", "zsqrt7", "--op", "norm", "-e", "[1,2,3]"],
            ["-t", "zsqrt7", "--op", "norm", "-e", "not-json"],
            ["-t", "no-such-ring", "--op", "norm", "-e", "1"],
        ],
    )
    def test_errors(self, cli_runner, args):
        assert _run(cli_runner, "numring", *args).exit_code == 2


class TestInitConfig:
    def test_init_config(self, cli_runner, temp_dir):
        path = temp_dir / "ctower.yaml"
        result = _run(cli_runner, "init-config", str(path))
        assert result.exit_code == 0
        data = yaml.safe_load(path.read_text())
        assert data["seed"] == 20240607
        assert data["build"]["check_every_stage"] is True

        again = _run(cli_runner, "init-config", str(path))
        assert again.exit_code == 2
        assert _run(cli_runner, "init-config", str(path), "--force").exit_code == 0
