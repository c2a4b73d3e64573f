"""CSV exporters for predictions, sweep reports, scatters and matrices."""

import csv
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

import numpy as np
import structlog

from ..metrics.displacement import DisplacementStats
from ..pipeline.sweep import ExperimentReport, SummaryRow
from ..simulate.models import CameraOrdering
from .atomic import atomic_writer

logger = structlog.get_logger()

REPORT_FIELDS = ["n", "flock_size", "scale", "trial", "rank1", "variance", "recovered_scale", "wall_ms"]

SUMMARY_FIELDS = [
    "n",
    "scale",
    "flock_size",
    "trials",
    "rank1_mean",
    "rank1_std",
    "variance_mean",
    "recovered_scale_mean",
    "relative_improvement",
]


def format_number(value: float) -> str:
    """Six significant digits; integral values print without a decimal point."""
    return f"{value:.6g}"


def _writer(f: TextIO):
    return csv.writer(f, lineterminator="\n")


def _write_pairs(ordering: CameraOrdering, output: TextIO) -> None:
    writer = _writer(output)
    for x, y in zip(ordering.x, ordering.y):
        writer.writerow([int(x), int(y)])


def export_predictions(predictions: Sequence[int], output: TextIO) -> None:
    """Write "query_index,gallery_index" lines."""
    writer = _writer(output)
    for query, gallery in enumerate(predictions):
        writer.writerow([query, int(gallery)])


def export_report(report: ExperimentReport, output_path: Path) -> None:
    """Write the per-trial sweep report."""
    with atomic_writer(output_path) as f:
        writer = _writer(f)
        writer.writerow(REPORT_FIELDS)
        for row in report.rows:
            writer.writerow(
                [
                    row.n,
                    row.flock_size,
                    format_number(row.scale),
                    row.trial,
                    format_number(row.rank1),
                    format_number(row.variance),
                    format_number(row.recovered_scale),
                    row.wall_ms,
                ]
            )
    logger.info("Exported sweep report", rows=len(report.rows), path=str(output_path))


def export_summary(summary: List[SummaryRow], output_path: Path) -> None:
    """Write per-cell means; relative_improvement is blank where undefined."""
    with atomic_writer(output_path) as f:
        writer = _writer(f)
        writer.writerow(SUMMARY_FIELDS)
        for row in summary:
            improvement = "" if row.relative_improvement is None else format_number(row.relative_improvement)
            writer.writerow(
                [
                    row.n,
                    format_number(row.scale),
                    row.flock_size,
                    row.trials,
                    format_number(row.rank1_mean),
                    format_number(row.rank1_std),
                    format_number(row.variance_mean),
                    format_number(row.recovered_scale_mean),
                    improvement,
                ]
            )
    logger.info("Exported sweep summary", rows=len(summary), path=str(output_path))


def export_scatter(ordering: CameraOrdering, stats: DisplacementStats, output_path: Path) -> None:
    """Write "x,y" rows followed by a "# variance=... recovered_scale=..." comment."""
    with atomic_writer(output_path) as f:
        _write_pairs(ordering, f)
        f.write(
            f"# variance={format_number(stats.variance)} "
            f"recovered_scale={format_number(stats.recovered_scale)}\n"
        )
    logger.info("Exported scatter", n=ordering.n_vehicles, path=str(output_path))


def export_ordering(ordering: CameraOrdering, output_path: Path) -> None:
    """Write an ordering file of "x,y" lines (readable by read_ordering)."""
    with atomic_writer(output_path) as f:
        _write_pairs(ordering, f)


def export_similarity_matrix(matrix: np.ndarray, output_path: Path) -> None:
    """Write a header-less similarity CSV, six significant digits per cell."""
    with atomic_writer(output_path) as f:
        writer = _writer(f)
        for row in np.asarray(matrix):
            writer.writerow([format_number(float(v)) for v in row])
    logger.info("Exported similarity matrix", shape=np.shape(matrix), path=str(output_path))


def export_calibration(
    scales: Sequence[float],
    variances: Sequence[float],
    fit: Sequence[float],
    spearman: float,
    output_path: Path,
    recovered: Optional[Sequence[float]] = None,
) -> None:
    """Write the simulated scale/variance curve with its quadratic fit."""
    a, b, c = fit
    with atomic_writer(output_path) as f:
        writer = _writer(f)
        writer.writerow(["scale", "variance", "fitted", "recovered_scale"])
        for idx, (scale, variance) in enumerate(zip(scales, variances)):
            fitted = a * scale**2 + b * scale + c
            writer.writerow(
                [
                    format_number(scale),
                    format_number(variance),
                    format_number(fitted),
                    "" if recovered is None else format_number(recovered[idx]),
                ]
            )
        f.write(
            f"# fit a={format_number(a)} b={format_number(b)} c={format_number(c)} "
            f"spearman={format_number(spearman)}\n"
        )
    logger.info("Exported calibration curve", points=len(scales), path=str(output_path))
