"""Sweep orchestration: config loading, execution and export."""

import uuid
from pathlib import Path
from typing import Optional

import structlog

from .export.csv_exporter import export_report, export_summary
from .pipeline.config import ExperimentConfig, build_experiment_config, load_experiment_config
from .pipeline.sweep import ExperimentReport, run_sweep, summarize_report
from .settings import RuntimeSettings

logger = structlog.get_logger()


class Orchestrator:
    """Runs one experiment sweep and writes its reports."""

    def __init__(self, experiment: ExperimentConfig, settings: Optional[RuntimeSettings] = None):
        self.experiment = experiment
        self.settings = settings or RuntimeSettings()
        self.correlation_id = str(uuid.uuid4())
        self.log = logger.bind(correlation_id=self.correlation_id)
        self.log.info(
            "Orchestrator initialized",
            n_vehicles=experiment.n_vehicles,
            flock_sizes=experiment.flock_sizes,
            scales=len(experiment.scales),
            trials=experiment.trials,
        )

    @classmethod
    def from_config(
        cls,
        config_file: Optional[Path] = None,
        settings: Optional[RuntimeSettings] = None,
        **overrides,
    ) -> "Orchestrator":
        """Build from an optional experiment.yaml plus CLI overrides (None = keep)."""
        if config_file is not None:
            experiment = load_experiment_config(config_file, **overrides)
        else:
            experiment = build_experiment_config({k: v for k, v in overrides.items() if v is not None})
        return cls(experiment, settings)

    def run(
        self,
        output_path: Path,
        summary_path: Optional[Path] = None,
        timing: bool = False,
    ) -> ExperimentReport:
        workers = self.settings.worker_count()
        self.log.info("Running sweep", workers=workers, timing=timing)

        report = run_sweep(self.experiment, workers=workers, timing=timing)
        export_report(report, Path(output_path))
        if summary_path is not None:
            export_summary(summarize_report(report), Path(summary_path))

        self.log.info("Sweep exported", rows=len(report.rows), output=str(output_path))
        return report
