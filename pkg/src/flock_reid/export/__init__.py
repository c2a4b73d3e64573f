"""CSV and PGM writers."""

from .csv_exporter import (
    export_calibration,
    export_ordering,
    export_predictions,
    export_report,
    export_scatter,
    export_similarity_matrix,
    export_summary,
    format_number,
)
from .pgm_writer import heatmap_pixels, read_pgm, write_pgm

__all__ = [
    "export_calibration",
    "export_ordering",
    "export_predictions",
    "export_report",
    "export_scatter",
    "export_similarity_matrix",
    "export_summary",
    "format_number",
    "heatmap_pixels",
    "read_pgm",
    "write_pgm",
]
