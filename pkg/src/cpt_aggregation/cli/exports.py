"""Rendering and writing of CLI outputs: vote-matrix tables, solve summaries and CSV reports."""

import csv
import io
import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Union

import aiofiles

from cpt_aggregation.algorithms.base_solver import SolveReport
from cpt_aggregation.analysis.experiments import CSV_COLUMNS, ExperimentRow
from cpt_aggregation.config import REPORT_SCHEMA_VERSION
from cpt_aggregation.metrics.disagreement import minority_rules
from cpt_aggregation.metrics.vote_matrix import VoteMatrix, config_histogram, freq
from cpt_aggregation.model.cpt import RULE_LABELS

logger = logging.getLogger(__name__)


def render_matrix(matrix: VoteMatrix) -> str:
    """Render M(T) as a table, followed by vote totals and the configuration histogram.

    Args:
        matrix: Vote matrix

    Returns:
        Multi-line string; one row per swap labelled by its instantiation
    """
    label_width = max(matrix.width, len("swap"))
    cell_width = max(len(f"N{matrix.t}"), 1)
    lines = ["swap".ljust(label_width) + " " + " ".join(f"N{i + 1}".rjust(cell_width) for i in range(matrix.t))]
    for row in range(matrix.row_count):
        cells = " ".join(str(int(v)).rjust(cell_width) for v in matrix.votes[row])
        lines.append((matrix.row_label(row) or "ε").ljust(label_width) + " " + cells)

    totals = freq(matrix)
    lines.append("")
    lines.append(f"freq(0>1) = {totals.zeros}")
    lines.append(f"freq(1>0) = {totals.ones}")
    lines.append("")
    lines.append("configurations:")
    for configuration, count in config_histogram(matrix).counts.items():
        lines.append(f"  {configuration}: {count}")
    return "\n".join(lines)


def render_solve_report(report: SolveReport) -> str:
    """Human-readable summary of a solve, with the output CPT in compact form."""
    view = minority_rules(report.output)
    chosen = str(report.chosen_parent_set) if report.chosen_parent_set is not None else "-"
    lines = [
        f"algorithm: {report.algorithm}",
        f"objective: {report.objective}",
        f"per_input: {' '.join(str(d) for d in report.per_input)}",
        f"chosen parent set: {chosen}",
        f"output parents: {report.output.parents}",
        f"default rule: {RULE_LABELS[view.majority]}",
    ]
    if view.exceptions:
        other = RULE_LABELS[1 - view.majority]
        lines.append(f"contexts with {other}: {', '.join(c.label for c in view.exceptions)}")
    return "\n".join(lines)


def render_csv(rows: List[ExperimentRow]) -> str:
    """CSV text with a schema comment line and the fixed header."""
    buffer = io.StringIO()
    buffer.write(f"# schema={REPORT_SCHEMA_VERSION}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.to_csv_row())
    return buffer.getvalue()


def _temporary_path(path: Path) -> Path:
    return path.with_name(f".{path.name}.tmp")


async def write_report(path: Union[str, Path], rows: List[ExperimentRow]) -> None:
    """Write the CSV report atomically.

    The text goes to a temporary sibling first and is renamed into place, so a failed
    run never leaves a partial report.

    Raises:
        OSError: If the file cannot be written
    """
    path = Path(path)
    temporary = _temporary_path(path)
    try:
        async with aiofiles.open(temporary, "w", encoding="utf-8") as f:
            await f.write(render_csv(rows))
        os.replace(temporary, path)
    except OSError:
        if temporary.exists():
            temporary.unlink()
        raise
    logger.info(f"Report written: {path} ({len(rows)} rows)")


def write_bytes(path: Union[str, Path], data: bytes) -> None:
    """Write a file through a temporary sibling and rename it into place."""
    path = Path(path)
    temporary = _temporary_path(path)
    try:
        temporary.write_bytes(data)
        os.replace(temporary, path)
    except OSError:
        if temporary.exists():
            temporary.unlink()
        raise


def write_json(path: Union[str, Path], document: Dict) -> None:
    write_bytes(path, json.dumps(document, indent=2).encode("utf-8") + b"\n")
