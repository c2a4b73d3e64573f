"""End-to-end re-identification runs and parameter sweeps."""

from .config import ExperimentConfig, load_experiment_config, parse_int_list, parse_scale_grid
from .reid import flock_dominance, flock_hit_rate, run_reid, scenario_unchanged
from .sweep import ExperimentReport, ReportRow, SummaryRow, run_sweep, summarize_report

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "ReportRow",
    "SummaryRow",
    "flock_dominance",
    "flock_hit_rate",
    "load_experiment_config",
    "parse_int_list",
    "parse_scale_grid",
    "run_reid",
    "run_sweep",
    "scenario_unchanged",
    "summarize_report",
]
