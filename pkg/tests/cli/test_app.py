"""End-to-end tests for the command-line surface."""

import pathlib

import typer.testing

from src.cli.app import app
from src.cli.error_handling import EXIT_INPUT

runner = typer.testing.CliRunner()


class TestApp:
    """Tests for the top-level commands."""

    def test_allocate_zero_wrench(self) -> None:
        # Act
        result = runner.invoke(app, ["allocate", "--tau", "0", "0", "0", "0", "0", "0"])

        # Assert
        assert result.exit_code == 0
        assert "0" in result.stdout

    def test_params_show_defaults(self) -> None:
        result = runner.invoke(app, ["params", "show"])

        assert result.exit_code == 0
        assert "[vehicle]" in result.stdout
        assert "net heave" in result.stdout

    def test_missing_params_file_exits_with_input_code(self, tmp_path: pathlib.Path) -> None:
        result = runner.invoke(app, ["params", "show", str(tmp_path / "absent.cfg")])

        assert result.exit_code == EXIT_INPUT

    def test_malformed_params_file_exits_with_input_code(self, tmp_path: pathlib.Path) -> None:
        path = tmp_path / "vehicle.cfg"
        path.write_text("[vehicle]\nmass = heavy\n", encoding="utf-8")

        result = runner.invoke(app, ["params", "show", str(path)])

        assert result.exit_code == EXIT_INPUT

    def test_sim_run_writes_outputs(self, tmp_path: pathlib.Path) -> None:
        # Arrange
        scenario = tmp_path / "pool.scn"
        scenario.write_text(
            "[sim]\nduration = 0.3\nseed = 1\n[initial]\nz = 1\n[target.red]\nkind = buoy\nposition = 5, 0, 1\n",
            encoding="utf-8",
        )
        plan = tmp_path / "mission.plan"
        plan.write_text("[task.1]\nkind = buoy\ntarget = red\n", encoding="utf-8")
        out = tmp_path / "out"

        # Act
        result = runner.invoke(app, ["sim", "run", "-s", str(scenario), "-p", str(plan), "-o", str(out)])

        # Assert
        assert result.exit_code == 0
        assert (out / "telemetry.csv").is_file()
        assert (out / "report.txt").is_file()
