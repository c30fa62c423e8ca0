"""Row and document writers. Data goes to a file or standard output, nothing else does."""

import csv
import dataclasses
import io
import json
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

from outerdom import __version__

SCHEMA_VERSION = "v1"
RATIO_DECIMALS = 6


def format_value(value: Any) -> Any:
    """Fractions become decimals with six places; everything else passes through."""
    if isinstance(value, Fraction):
        return f"{float(value):.{RATIO_DECIMALS}f}"
    return value


def _json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return round(float(value), RATIO_DECIMALS)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return dataclasses.asdict(value)
    if isinstance(value, Path):
        return str(value)
    return value


def rows_to_csv(rows: Sequence[dict]) -> str:
    buffer = io.StringIO()
    if not rows:
        return ""
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: format_value(value) for key, value in row.items()})
    return buffer.getvalue()


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, default=_json_value) + "\n"


def _emit(text: str, path: Path | None, print_fct: Callable) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="\n") as f:
        f.write(text)
    print_fct(f"Saved results to '{path}'")


def save_rows(rows: Sequence[dict], path: Path | None, fmt: str = "csv", *, print_fct: Callable = print) -> None:
    """Write result rows as CSV (header, six-decimal ratios, LF endings) or as a JSON array."""
    if fmt == "csv":
        text = rows_to_csv(rows)
    else:
        text = to_json([{key: _json_value(value) for key, value in row.items()} for row in rows])
    _emit(text, path, print_fct)


def save_document(data: dict, path: Path | None, *, print_fct: Callable = print, **kwargs) -> None:
    """Write one JSON document tagged with the schema and package version."""
    document = {"schema": SCHEMA_VERSION, "outerdom_version": __version__} | data | kwargs
    _emit(to_json(document), path, print_fct)


def summary_path(path: Path) -> Path:
    """``random.csv`` becomes ``random.summary.csv``."""
    return path.with_name(f"{path.stem}.summary{path.suffix or '.csv'}")


def save_rows_with_summary(
    rows: Sequence[dict], summary: dict, path: Path | None, *, print_fct: Callable = print
) -> None:
    """CSV rows plus a one-row summary table.

    With a path the summary goes to the sibling ``summary_path(path)``; on standard output it follows
    the rows after one blank line.
    """
    save_rows(rows, path, "csv", print_fct=print_fct)
    if path is None:
        _emit("\n", None, print_fct)
        save_rows([summary], None, "csv", print_fct=print_fct)
    else:
        save_rows([summary], summary_path(path), "csv", print_fct=print_fct)
