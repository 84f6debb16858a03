"""Typed reader for the simulator's result CSVs.

The schema is fixed by the simulator's CSV writer: one header row with the
exact column list below, UTF-8, floats written with repr (so parsing them
back is exact), and an empty string wherever a statistic is not applicable.
Validation errors always name the offending column.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Optional

COLUMNS = (
    "experiment",
    "scheme",
    "m",
    "p_dbm",
    "rd",
    "sweep_var",
    "sweep_value",
    "mean_secrecy_rate",
    "stderr",
    "mean_ps_ratio",
    "mean_pr_ratio",
    "outage_fraction",
    "trials",
    "seed",
)

_INT_COLUMNS = ("m", "trials", "seed")
_STR_COLUMNS = ("experiment", "scheme", "sweep_var")


class SchemaError(ValueError):
    """CSV does not conform to the simulator schema (CLI exit code 2)."""


class NoRowsError(SchemaError):
    """Header is fine but the CSV has no data rows."""


@dataclass(frozen=True)
class Row:
    experiment: str
    scheme: str
    m: Optional[int]
    p_dbm: Optional[float]
    rd: Optional[float]
    sweep_var: str
    sweep_value: Optional[float]
    mean_secrecy_rate: Optional[float]
    stderr: Optional[float]
    mean_ps_ratio: Optional[float]
    mean_pr_ratio: Optional[float]
    outage_fraction: Optional[float]
    trials: Optional[int]
    seed: Optional[int]


def _check_header(header: list) -> None:
    if header is None:
        raise NoRowsError("no rows: the file is empty")
    for i, want in enumerate(COLUMNS):
        if i >= len(header):
            raise SchemaError(f"missing column {want!r}")
        if header[i] != want:
            raise SchemaError(f"column {i + 1} is {header[i]!r}, expected {want!r}")
    if len(header) > len(COLUMNS):
        raise SchemaError(f"unexpected extra column {header[len(COLUMNS)]!r}")


def _parse_cell(column: str, text: str, line: int):
    if column in _STR_COLUMNS:
        return text
    if text == "":
        return None
    try:
        return int(text) if column in _INT_COLUMNS else float(text)
    except ValueError:
        kind = "an integer" if column in _INT_COLUMNS else "a number"
        raise SchemaError(f"column {column!r} on line {line} is not {kind}: {text!r}")


def read_rows(path: str) -> list:
    """Parse a result CSV into Row records, validating the schema."""
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        _check_header(header)
        rows = []
        for line_no, record in enumerate(reader, start=2):
            if not record:
                continue
            if len(record) != len(COLUMNS):
                raise SchemaError(
                    f"line {line_no} has {len(record)} fields, expected {len(COLUMNS)}"
                )
            rows.append(
                Row(**{c: _parse_cell(c, v, line_no) for c, v in zip(COLUMNS, record)})
            )
    if not rows:
        raise NoRowsError("no rows: the CSV has a header but no data")
    return rows
