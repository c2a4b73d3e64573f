"""CLI interface for Flock ReID.

Exit codes: 0 success, 1 verification failure or unexpected error,
2 usage/validation failure.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import click
import numpy as np
import structlog
from dotenv import load_dotenv

from . import __version__
from .assignment.brute_force import Sense, brute_force_assignment
from .assignment.solver import solve_min_assignment
from .errors import (
    ConfigurationError,
    FlockReidError,
    IngestionError,
    MatrixValidationError,
    OracleSizeError,
)
from .export.csv_exporter import (
    export_calibration,
    export_ordering,
    export_predictions,
    export_scatter,
    export_similarity_matrix,
)
from .export.atomic import atomic_writer
from .export.pgm_writer import write_pgm
from .flock.similarity import flock_similarity_grid
from .metrics.accuracy import rank1_accuracy
from .metrics.displacement import (
    displacement_stats,
    fit_variance_curve,
    scale_from_variance,
    scale_variance_correlation,
)
from .metrics.dominance import diagonal_dominance, diagonal_hit_rate
from .orchestrator import Orchestrator
from .pipeline.config import ExperimentConfig, load_experiment_config, parse_int_list, parse_scale_grid
from .pipeline.reid import run_reid
from .settings import RuntimeSettings, load_runtime_settings
from .simulate.appearance import synth_similarity
from .simulate.models import PerturbationModel
from .simulate.perturbation import displacement_curve, perturb_ordering, trial_seeds
from .storage.readers import read_ordering, read_similarity_matrix

# Load environment variables
load_dotenv()

ORACLE_TOLERANCE = 1e-12

logger = structlog.get_logger()


def configure_logging(level: str) -> None:
    """Structured JSON logs on stderr; stdout carries command output only."""
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level, force=True)
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer(),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def _fail(log, action: str, error: Exception) -> None:
    """Report a failure and exit: 2 for validation errors, 1 otherwise."""
    if isinstance(error, FlockReidError):
        log.error(f"{action} failed", error=str(error))
        click.echo(f"Error: {error}", err=True)
        sys.exit(2)
    log.error(f"{action} failed", error=str(error), exc_info=True)
    click.echo(f"Error: {error}", err=True)
    sys.exit(1)


def _settings(ctx: click.Context) -> RuntimeSettings:
    return ctx.obj["settings"]


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Override FLOCK_REID_LOG_LEVEL",
)
@click.option(
    "--runtime-config",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Runtime settings YAML (see config/runtime.yaml)",
)
@click.pass_context
def main(ctx: click.Context, log_level: Optional[str], runtime_config: Optional[Path]):
    """Flock ReID - flock-similarity vehicle re-identification."""
    try:
        settings = load_runtime_settings(runtime_config)
    except ConfigurationError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(2)
    if log_level:
        settings = settings.model_copy(update={"log_level": log_level.upper()})
    configure_logging(settings.log_level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@main.command()
@click.option("--similarity", "similarity_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Similarity matrix CSV (rows: queries, columns: gallery)")
@click.option("--flock-size", "-k", type=int, required=True, help="Odd flock size")
@click.option("--truth", "truth_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Ground-truth ordering file")
@click.option("--output", "output_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Predictions CSV (default: stdout)")
def reid(similarity_path: Path, flock_size: int, truth_path: Optional[Path], output_path: Optional[Path]):
    """Predict a gallery index for every query."""
    log = logger.bind(correlation_id="reid")
    log.info("Starting re-identification", similarity=str(similarity_path), k=flock_size)

    try:
        matrix = read_similarity_matrix(similarity_path)
        truth = read_ordering(truth_path) if truth_path is not None else None
        if truth is not None and (truth.n_vehicles != matrix.shape[0] or matrix.shape[0] != matrix.shape[1]):
            raise IngestionError(
                f"Truth has {truth.n_vehicles} vehicles but matrix is {matrix.shape[0]}x{matrix.shape[1]}",
                path=truth_path,
            )

        predictions = run_reid(matrix, flock_size)

        if output_path is not None:
            with atomic_writer(output_path) as f:
                export_predictions(predictions, f)
        else:
            export_predictions(predictions, sys.stdout)

        if truth is not None:
            accuracy = rank1_accuracy(truth, predictions)
            click.echo(f"rank1={accuracy:.4f}")
            log.info("Re-identification scored", rank1=accuracy)
    except Exception as e:
        _fail(log, "Re-identification", e)


@main.command()
@click.option("--n-list", type=str, default=None, help="List lengths, e.g. 50,100,200")
@click.option("--flock-sizes", type=str, default=None, help="Odd flock sizes, e.g. 1,3,5,7,9")
@click.option("--scales", type=str, default=None, help="Scale grid: start..end:step or a comma list")
@click.option("--trials", type=int, default=None, help="Trials per (N, scale) cell")
@click.option("--seed", type=int, default=None, help="Base seed")
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Experiment YAML (see config/experiment.yaml)")
@click.option("--output", "output_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Per-trial report CSV")
@click.option("--summary", "summary_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Per-cell summary CSV")
@click.option("--timing/--no-timing", default=False, help="Record wall_ms (makes output run-dependent)")
@click.pass_context
def sweep(
    ctx: click.Context,
    n_list: Optional[str],
    flock_sizes: Optional[str],
    scales: Optional[str],
    trials: Optional[int],
    seed: Optional[int],
    config_path: Optional[Path],
    output_path: Path,
    summary_path: Optional[Path],
    timing: bool,
):
    """Run a Monte Carlo sweep over list length, scale and flock size."""
    log = logger.bind(correlation_id="sweep")

    try:
        orchestrator = Orchestrator.from_config(
            config_path,
            settings=_settings(ctx),
            n_vehicles=parse_int_list(n_list, "list length") if n_list else None,
            flock_sizes=parse_int_list(flock_sizes, "flock size") if flock_sizes else None,
            scales=parse_scale_grid(scales) if scales else None,
            trials=trials,
            seed=seed,
        )
        orchestrator.run(output_path, summary_path=summary_path, timing=timing)
        log.info("Sweep completed successfully", output=str(output_path))
    except Exception as e:
        _fail(log, "Sweep", e)


@main.command()
@click.option("--similarity", "similarity_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Similarity matrix CSV")
@click.option("--flock-size", "-k", type=int, required=True, help="Odd flock size")
@click.option("--output", "output_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="PGM output path")
def heatmap(similarity_path: Path, flock_size: int, output_path: Path):
    """Render the (flock) similarity grid as a grayscale PGM."""
    log = logger.bind(correlation_id="heatmap")

    try:
        matrix = read_similarity_matrix(similarity_path)
        grid = flock_similarity_grid(matrix, flock_size)
        write_pgm(grid, output_path)
        if grid.shape[0] == grid.shape[1]:
            click.echo(f"diagonal_hit_rate={diagonal_hit_rate(grid):.6g}")
            try:
                click.echo(f"diagonal_dominance={diagonal_dominance(grid):.6g}")
            except MatrixValidationError as e:
                log.info("Diagonal dominance skipped", reason=str(e))
    except Exception as e:
        _fail(log, "Heatmap", e)


@main.command()
@click.option("--ordering", "ordering_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Ordering file ('y' or 'x,y' lines)")
@click.option("--output", "output_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Scatter CSV output")
def scatter(ordering_path: Path, output_path: Path):
    """Write the (x, y) order scatter with its displacement metrics."""
    log = logger.bind(correlation_id="scatter")

    try:
        ordering = read_ordering(ordering_path)
        stats = displacement_stats(ordering)
        export_scatter(ordering, stats, output_path)
        log.info("Scatter written", variance=stats.variance, recovered_scale=stats.recovered_scale)
    except Exception as e:
        _fail(log, "Scatter", e)


@main.command()
@click.option("--max-n", type=int, required=True, help="Largest matrix order to verify")
@click.option("--trials", type=int, default=1000, show_default=True, help="Random matrices per order")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def oracle(ctx: click.Context, max_n: int, trials: int, seed: int):
    """Cross-check the assignment solver against exhaustive enumeration."""
    log = logger.bind(correlation_id="oracle")
    cap = _settings(ctx).oracle_cap

    try:
        if max_n < 1:
            raise ConfigurationError(f"--max-n must be at least 1, got {max_n}")
        if max_n > cap:
            raise OracleSizeError(f"--max-n {max_n} exceeds oracle cap {cap}")
        if trials < 1:
            raise ConfigurationError(f"--trials must be at least 1, got {trials}")
    except Exception as e:
        _fail(log, "Oracle", e)

    rng = np.random.default_rng(seed)
    failures = 0
    for n in range(1, max_n + 1):
        worst = 0.0
        for _ in range(trials):
            costs = rng.random((n, n))
            solved = solve_min_assignment(costs)
            expected = brute_force_assignment(costs, Sense.MIN, cap=cap)
            worst = max(worst, abs(solved.objective - expected.objective))
        passed = worst <= ORACLE_TOLERANCE
        failures += not passed
        click.echo(f"n={n} trials={trials} max_abs_diff={worst:.3e} {'PASS' if passed else 'FAIL'}")
        log.info("Oracle size checked", n=n, trials=trials, max_abs_diff=worst, passed=passed)

    if failures:
        sys.exit(1)


@main.command()
@click.option("--n", "n_vehicles", type=int, required=True, help="Number of vehicles")
@click.option("--scale", type=float, default=0.0, show_default=True, help="Perturbation scale")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Experiment YAML providing the appearance calibration")
@click.option("--similarity", "similarity_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Similarity CSV output")
@click.option("--truth", "truth_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Ordering file output")
def simulate(n_vehicles: int, scale: float, seed: int, config_path: Optional[Path], similarity_path: Path, truth_path: Path):
    """Generate a synthetic scene (same draw as sweep trial 0)."""
    log = logger.bind(correlation_id="simulate")

    try:
        appearance = (load_experiment_config(config_path) if config_path else ExperimentConfig()).appearance
        if n_vehicles < 1:
            raise ConfigurationError(f"--n must be at least 1, got {n_vehicles}")
        ordering_seed, appearance_seed = trial_seeds(seed, n_vehicles, 0)
        ordering = perturb_ordering(n_vehicles, PerturbationModel(scale=scale, seed=ordering_seed))
        matrix = synth_similarity(ordering, appearance.model_copy(update={"seed": appearance_seed}))
        export_similarity_matrix(matrix, similarity_path)
        export_ordering(ordering, truth_path)
        log.info("Scene written", n=n_vehicles, scale=scale, seed=seed)
    except Exception as e:
        _fail(log, "Simulation", e)


@main.command()
@click.option("--n", "n_vehicles", type=int, default=200, show_default=True, help="Number of vehicles")
@click.option("--scales", type=str, default="0.3..2:0.1", show_default=True, help="Scale grid")
@click.option("--trials", type=int, default=100, show_default=True, help="Orderings per scale")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", "output_path", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Calibration CSV output")
def calibrate(n_vehicles: int, scales: str, trials: int, seed: int, output_path: Path):
    """Simulate the scale-to-variance curve and refit its quadratic."""
    log = logger.bind(correlation_id="calibrate")

    try:
        if n_vehicles < 1:
            raise ConfigurationError(f"--n must be at least 1, got {n_vehicles}")
        grid = parse_scale_grid(scales)
        for value in grid:
            if value < 0:
                raise ConfigurationError(f"Scales must be non-negative, got {value}")
        variances = displacement_curve(n_vehicles, grid, trials, seed)
        fit = fit_variance_curve(grid, variances)
        rho = scale_variance_correlation(grid, variances)
        recovered = [scale_from_variance(float(v)) for v in variances]
        export_calibration(grid, variances, fit, rho, output_path, recovered=recovered)
        click.echo(f"spearman={rho:.4f}")
        log.info("Calibration written", fit=fit, spearman=rho)
    except Exception as e:
        _fail(log, "Calibration", e)


if __name__ == "__main__":
    main()
