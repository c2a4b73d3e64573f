"""Monte Carlo sweeps over list length, perturbation scale and flock size."""

import time
from concurrent.futures import FIRST_EXCEPTION, ThreadPoolExecutor, wait
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
import structlog

from ..errors import SweepCellError
from ..metrics.accuracy import rank1_accuracy, relative_improvement
from ..metrics.displacement import displacement_stats
from ..simulate.appearance import synth_similarity
from ..simulate.models import PerturbationModel
from ..simulate.perturbation import perturb_ordering, trial_seeds
from .config import ExperimentConfig
from .reid import run_reid

logger = structlog.get_logger()

CellKey = Tuple[int, float, int]


@dataclass(frozen=True)
class ReportRow:
    n: int
    flock_size: int
    scale: float
    trial: int
    rank1: float
    variance: float
    recovered_scale: float
    wall_ms: int


@dataclass(frozen=True)
class SummaryRow:
    n: int
    scale: float
    flock_size: int
    trials: int
    rank1_mean: float
    rank1_std: float
    variance_mean: float
    recovered_scale_mean: float
    relative_improvement: Optional[float]


@dataclass
class ExperimentReport:
    """Sweep output, one row per (cell, flock size), in (n, scale, flock_size, trial) order."""

    rows: List[ReportRow]
    config: ExperimentConfig

    def mean_accuracy(self, n: int, scale: float, flock_size: int) -> float:
        values = [
            row.rank1
            for row in self.rows
            if row.n == n and row.scale == scale and row.flock_size == flock_size
        ]
        if not values:
            raise KeyError((n, scale, flock_size))
        return float(np.mean(values))


def _run_cell(cfg: ExperimentConfig, key: CellKey, timing: bool) -> List[ReportRow]:
    n, scale, trial = key
    ordering_seed, appearance_seed = trial_seeds(cfg.seed, n, trial)
    ordering = perturb_ordering(n, PerturbationModel(scale=scale, seed=ordering_seed))
    similarity = synth_similarity(ordering, cfg.appearance.model_copy(update={"seed": appearance_seed}))
    stats = displacement_stats(ordering)

    rows = []
    for k in cfg.flock_sizes:
        started = time.perf_counter()
        predictions = run_reid(similarity, k)
        elapsed_ms = int(round((time.perf_counter() - started) * 1000)) if timing else 0
        rows.append(
            ReportRow(
                n=n,
                flock_size=k,
                scale=scale,
                trial=trial,
                rank1=rank1_accuracy(ordering, predictions),
                variance=stats.variance,
                recovered_scale=stats.recovered_scale,
                wall_ms=elapsed_ms,
            )
        )
    return rows


def run_sweep(cfg: ExperimentConfig, workers: int = 1, timing: bool = False) -> ExperimentReport:
    """
    Run every (N, scale, trial) cell and score each flock size.

    Cells may run concurrently; the report is assembled by cell key, so its
    content never depends on completion order. Without `timing` the wall_ms
    column is 0, keeping reports reproducible byte for byte.

    Args:
        cfg: sweep grid, trial count, seed and appearance calibration
        workers: worker threads; 1 runs the cells in order
        timing: record wall-clock milliseconds per row

    Raises:
        SweepCellError: for the first failing cell; remaining cells are cancelled
    """
    log = logger.bind(seed=cfg.seed)
    keys: List[CellKey] = [
        (n, scale, trial) for n in cfg.n_vehicles for scale in cfg.scales for trial in range(cfg.trials)
    ]
    log.info("Starting sweep", cells=len(keys), flock_sizes=cfg.flock_sizes, workers=workers)

    results: Dict[CellKey, List[ReportRow]] = {}
    if workers <= 1:
        for key in keys:
            try:
                results[key] = _run_cell(cfg, key, timing)
            except Exception as e:
                raise SweepCellError(*key, cause=e) from e
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(_run_cell, cfg, key, timing): key for key in keys}
            done, _ = wait(futures, return_when=FIRST_EXCEPTION)
            for future in done:
                error = future.exception()
                if error is not None:
                    for pending in futures:
                        pending.cancel()
                    key = futures[future]
                    raise SweepCellError(*key, cause=error) from error
            for future, key in futures.items():
                results[key] = future.result()

    rows = sorted(
        (row for cell_rows in results.values() for row in cell_rows),
        key=lambda row: (row.n, row.scale, row.flock_size, row.trial),
    )
    log.info("Sweep finished", rows=len(rows))
    return ExperimentReport(rows=rows, config=cfg)


def summarize_report(report: ExperimentReport) -> List[SummaryRow]:
    """
    Aggregate trials per (n, scale, flock_size).

    relative_improvement compares against flock size 1 at the same
    (n, scale); it is None when flock size 1 was not swept or scored zero.
    """
    groups: Dict[Tuple[int, float, int], List[ReportRow]] = {}
    for row in report.rows:
        groups.setdefault((row.n, row.scale, row.flock_size), []).append(row)

    summary = []
    for (n, scale, k), rows in sorted(groups.items()):
        accuracies = np.array([row.rank1 for row in rows])
        baseline_rows = groups.get((n, scale, 1))
        improvement = None
        if baseline_rows is not None:
            baseline = float(np.mean([row.rank1 for row in baseline_rows]))
            if baseline > 0:
                improvement = relative_improvement(float(accuracies.mean()), baseline)
        summary.append(
            SummaryRow(
                n=n,
                scale=scale,
                flock_size=k,
                trials=len(rows),
                rank1_mean=float(accuracies.mean()),
                rank1_std=float(accuracies.std()),
                variance_mean=float(np.mean([row.variance for row in rows])),
                recovered_scale_mean=float(np.mean([row.recovered_scale for row in rows])),
                relative_improvement=improvement,
            )
        )
    return summary
