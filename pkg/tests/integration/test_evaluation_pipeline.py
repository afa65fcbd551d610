"""Test evaluation, sweeps and plot export against trained runs"""

import pandas as pd
import pytest

from core.exceptions import NotFoundException
from modules.evaluation.application.commands import (
    EvaluateRunCommand,
    ExportPlotDataCommand,
    ExportPlotDataHandler,
    SweepAlphaCommand,
    SweepAlphaHandler,
)
from modules.evaluation.application.commands.export_plot_data import TIDY_COLUMNS
from modules.trainer.infrastructure.persistence import RunDirectory


@pytest.fixture
def trained_run(training_service, tiny_config, run_dir):
    """A finished three-iteration planar_gait run"""
    training_service.train(tiny_config("planar_gait"), run_dir)
    return run_dir


class TestEvaluateRun:
    """Test EvaluateRunHandler"""
    
    def test_scores_final_checkpoint(self, evaluate_handler, trained_run):
        """Test the default checkpoint, gait-only fields and the scores row"""
        # Act
        report = evaluate_handler.handle(EvaluateRunCommand(run_dir=trained_run, episodes=2))
        
        # Assert
        assert report.iteration == 3
        assert report.checkpoint.endswith("final.npz")
        assert report.episodes == 2
        assert report.eta == 10.0
        assert 0.0 <= report.imitation_score_mean <= 1.0
        assert report.symmetry_score_mean is not None
        assert report.air_time_left_mean is not None
        scores = pd.read_csv(RunDirectory(trained_run).scores_path)
        assert len(scores) == 1
        assert scores["iteration"].tolist() == [3]
    
    def test_repeatable(self, evaluate_handler, trained_run):
        """Test equal seeds give equal scores and rows accumulate"""
        command = EvaluateRunCommand(run_dir=trained_run, episodes=1, deterministic=False, seed=5)
        
        first = evaluate_handler.handle(command)
        second = evaluate_handler.handle(command)
        
        assert first == second
        assert len(pd.read_csv(RunDirectory(trained_run).scores_path)) == 2
    
    def test_explicit_checkpoint_and_eta(self, evaluate_handler, trained_run):
        """Test a periodic checkpoint and an eta override"""
        path = RunDirectory(trained_run).checkpoint_path(2)
        
        report = evaluate_handler.handle(EvaluateRunCommand(run_dir=trained_run, checkpoint=path, eta=50.0))
        
        assert report.iteration == 2
        assert report.eta == 50.0
    
    def test_missing_run(self, evaluate_handler, tmp_path):
        """Test a directory without a config snapshot"""
        with pytest.raises(NotFoundException):
            evaluate_handler.handle(EvaluateRunCommand(run_dir=tmp_path / "nowhere"))


class TestSweepAndExport:
    """Test SweepAlphaHandler and ExportPlotDataHandler"""
    
    @pytest.fixture
    def sweep(self, training_service, evaluate_handler, tiny_config, tmp_path):
        output = tmp_path / "sweep"
        rows = SweepAlphaHandler(training_service, evaluate_handler).handle(SweepAlphaCommand(
            config=tiny_config(), alphas=[0.5, 0.9], seeds=[0, 1], output=output,
        ))
        return output, rows
    
    def test_one_run_per_alpha_and_seed(self, sweep):
        """Test run layout and summary rows"""
        output, rows = sweep
        
        assert [(row.alpha, row.seed) for row in rows] == [(0.5, 0), (0.5, 1), (0.9, 0), (0.9, 1)]
        for alpha in ("0.5", "0.9"):
            for seed in (0, 1):
                assert RunDirectory(output / f"alpha_{alpha}" / f"seed_{seed}").final_checkpoint.is_file()
        summary = pd.read_csv(output / "sweep_summary.csv")
        assert len(summary) == 4
        assert summary["symmetry_score_mean"].isna().all()
    
    def test_export_tidy_tables(self, sweep, tmp_path):
        """Test one tidy CSV per figure covering every run"""
        # Arrange
        output, _ = sweep
        
        # Act
        written = ExportPlotDataHandler().handle(ExportPlotDataCommand(runs=[output], output=tmp_path / "plots"))
        
        # Assert
        assert sorted(p.name for p in written) == ["imitation_score.csv", "multiplier.csv", "task_reward.csv"]
        multiplier = pd.read_csv(tmp_path / "plots" / "multiplier.csv")
        assert list(multiplier.columns) == TIDY_COLUMNS
        assert set(multiplier["alpha"]) == {0.5, 0.9}
        assert set(multiplier["seed"]) == {0, 1}
        assert (multiplier[multiplier["metric"] == "sigma_lambda"].groupby(["alpha", "seed"]).size() == 3).all()
    
    def test_export_without_runs(self, tmp_path):
        """Test an empty search path"""
        (tmp_path / "empty").mkdir()
        
        with pytest.raises(NotFoundException):
            ExportPlotDataHandler().handle(ExportPlotDataCommand(runs=[tmp_path / "empty"], output=tmp_path / "plots"))
