"""Test the command-line surface end to end"""

import pandas as pd
import pytest

from bootstrapper.app_factory import run_cli
from core.exceptions.error_codes import ExitCode
from modules.demos.infrastructure.persistence import DemoCsvRepository
from modules.trainer.infrastructure.persistence import RunDirectory

TINY = [
    "--set", "train.iterations=2",
    "--set", "train.num_envs=2",
    "--set", "train.steps_per_env=8",
    "--set", "train.epochs=1",
    "--set", "train.minibatches=2",
    "--set", "train.policy_hidden=[8, 8]",
    "--set", "train.value_hidden=[8, 8]",
    "--set", "train.checkpoint_interval=1",
    "--set", "train.eval_interval=0",
    "--set", "style.disc_hidden=[8]",
    "--set", "style.disc_batch_size=8",
    "--set", "envs.point_reach_horizon=6",
    "--set", "envs.planar_gait_horizon=6",
]


def output_values(text: str) -> dict:
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line and " " not in line)


class TestCli:
    """Test run_cli"""
    
    def test_gen_demo(self, tmp_path, capsys):
        """Test the gait demo is written as a CSV the repository reads back"""
        out = tmp_path / "gait.csv"
        
        code = run_cli(["gen-demo", "--env", "planar_gait", "--out", str(out)])
        
        assert code == ExitCode.SUCCESS
        assert str(out) in capsys.readouterr().out
        assert DemoCsvRepository().load(out).features.shape == (240, 4)
    
    def test_train_then_eval(self, tmp_path, capsys):
        """Test train prints its artifacts and eval appends a scores row"""
        # Arrange
        run_dir = tmp_path / "run"
        
        # Act
        train_code = run_cli(["train", "--run-dir", str(run_dir), "--set", "env=planar_gait", *TINY])
        printed = output_values(capsys.readouterr().out)
        eval_code = run_cli(["eval", str(run_dir), "--episodes", "1", "--stochastic", "--seed", "3"])
        
        # Assert
        assert train_code == ExitCode.SUCCESS
        assert printed["run_dir"] == str(run_dir)
        assert printed["final_checkpoint"] == str(RunDirectory(run_dir).final_checkpoint)
        assert eval_code == ExitCode.SUCCESS
        assert "S_sym=" in capsys.readouterr().out
        scores = pd.read_csv(RunDirectory(run_dir).scores_path)
        assert scores["deterministic"].tolist() == [0]
    
    def test_resume_with_more_iterations(self, tmp_path):
        """Test --resume continues a run under new overrides"""
        run_dir = tmp_path / "run"
        run_cli(["train", "--run-dir", str(run_dir), *TINY])
        
        code = run_cli(["train", "--resume", str(run_dir), "--set", "train.iterations=3"])
        
        assert code == ExitCode.SUCCESS
        assert pd.read_csv(RunDirectory(run_dir).metrics_path)["iteration"].tolist() == [0, 1, 2]
    
    def test_sweep_and_export(self, tmp_path, capsys):
        """Test sweep-alpha output feeds export-plot-data"""
        # Arrange
        sweep = tmp_path / "sweep"
        
        # Act
        sweep_code = run_cli(["sweep-alpha", "0.5", "1", "--seeds", "0", "--out", str(sweep), *TINY])
        export_code = run_cli(["export-plot-data", str(sweep), "--out", str(tmp_path / "plots")])
        
        # Assert
        assert sweep_code == ExitCode.SUCCESS
        assert "alpha=0.5 seed=0" in capsys.readouterr().out
        assert (sweep / "alpha_1" / "seed_0" / "metrics.csv").is_file()
        assert export_code == ExitCode.SUCCESS
        assert set(pd.read_csv(tmp_path / "plots" / "task_reward.csv")["alpha"]) <= {0.5, 1.0}
    
    @pytest.mark.parametrize("argv", [
        ["train", "--config", "missing.toml"],
        ["train", "--set", "train.epochs=0"],
        ["train", "--set", "no_equals_sign"],
        ["eval"],
        ["unknown-command"],
    ])
    def test_usage_errors(self, argv, tmp_path, monkeypatch):
        """Test bad configuration and arguments exit with the usage code"""
        monkeypatch.chdir(tmp_path)
        
        assert run_cli(argv) == ExitCode.USAGE
    
    def test_missing_config_writes_nothing(self, tmp_path, monkeypatch):
        """Test a missing config file fails before any run artifact is created"""
        # Arrange
        monkeypatch.chdir(tmp_path)
        run_dir = tmp_path / "run"
        
        # Act
        code = run_cli(["train", "--config", "missing.toml", "--run-dir", str(run_dir)])
        
        # Assert
        assert code == ExitCode.USAGE
        assert not run_dir.exists()
        assert list(tmp_path.iterdir()) == []
    
    def test_eval_missing_run(self, tmp_path):
        """Test evaluating a directory that is not a run"""
        assert run_cli(["eval", str(tmp_path / "absent")]) == ExitCode.USAGE
