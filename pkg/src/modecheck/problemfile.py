"""Self-describing problem files.

Format: ``key = value`` header lines, then a ``matrix:`` marker, then one
line per matrix row with entries separated by ``;``.  ``#`` starts a
comment; blank lines are ignored.  Example::

    # heat-type system on the unit square lattice
    dim = 2
    period = 1 0 ; 0 1
    window = 4
    matrix:
    t - x1^2 - x2^2

Period rows are ';'-separated, entries whitespace-separated exact rationals
(``1``, ``-3/2``).  Optional keys: window, symbolic, horizon, samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .errors import ParseError, ProblemFileError
from .lattice import PeriodLattice
from .matrices import PolyMatrix
from .parsing import parse_poly

_HEADER_KEYS = {"dim", "dimension", "period", "window", "symbolic", "horizon", "samples"}


@dataclass
class ProblemFile:
    dimension: int
    matrix_text: List[List[str]]
    matrix: PolyMatrix
    lattice: PeriodLattice
    window: Optional[int] = None
    symbolic: Optional[str] = None
    horizon: Optional[float] = None
    samples: Optional[int] = None


def _parse_period(value: str, dim: int, line: int) -> PeriodLattice:
    rows = [r.strip() for r in value.split(";")]
    if len(rows) != dim:
        raise ProblemFileError(f"period matrix needs {dim} rows, found {len(rows)}", line)
    parsed = []
    for r in rows:
        entries = r.split()
        if len(entries) != dim:
            raise ProblemFileError(
                f"period row needs {dim} entries, found {len(entries)}", line
            )
        try:
            parsed.append([Fraction(e) for e in entries])
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemFileError(f"bad rational in period matrix: {exc}", line)
    try:
        return PeriodLattice(parsed)
    except ValueError as exc:
        raise ProblemFileError(str(exc), line)


def parse_problem(text: str) -> ProblemFile:
    header: dict = {}
    header_lines: dict = {}
    matrix_rows: List[List[str]] = []
    matrix_line_numbers: List[int] = []
    in_matrix = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not in_matrix:
            if line == "matrix:":
                in_matrix = True
                continue
            if "=" not in line:
                raise ProblemFileError(
                    "expected 'key = value' or 'matrix:' marker", lineno
                )
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in _HEADER_KEYS:
                raise ProblemFileError(f"unknown key {key!r}", lineno)
            if key == "dimension":
                key = "dim"
            if key in header:
                raise ProblemFileError(f"duplicate key {key!r}", lineno)
            header[key] = value.strip()
            header_lines[key] = lineno
        else:
            matrix_rows.append([cell.strip() for cell in line.split(";")])
            matrix_line_numbers.append(lineno)
    if "dim" not in header:
        raise ProblemFileError("missing required key 'dim'")
    try:
        dim = int(header["dim"])
    except ValueError:
        raise ProblemFileError("dim must be an integer", header_lines["dim"])
    if dim < 1:
        raise ProblemFileError("dim must be positive", header_lines["dim"])
    if "period" not in header:
        raise ProblemFileError("missing required key 'period'")
    lattice = _parse_period(header["period"], dim, header_lines["period"])
    if not matrix_rows:
        raise ProblemFileError("missing matrix block")
    width = len(matrix_rows[0])
    entries = []
    for row, lineno in zip(matrix_rows, matrix_line_numbers):
        if len(row) != width:
            raise ProblemFileError(
                f"matrix row has {len(row)} entries, expected {width}", lineno
            )
        parsed_row = []
        for cell in row:
            try:
                parsed_row.append(parse_poly(cell, dim))
            except ParseError as exc:
                raise ProblemFileError(f"in entry {cell!r}: {exc}", lineno)
        entries.append(parsed_row)
    matrix = PolyMatrix(entries)

    window = None
    if "window" in header:
        try:
            window = int(header["window"])
        except ValueError:
            raise ProblemFileError("window must be an integer", header_lines["window"])
        if window < 0:
            raise ProblemFileError("window must be nonnegative", header_lines["window"])
    symbolic = None
    if "symbolic" in header:
        symbolic = header["symbolic"].lower()
        if symbolic not in ("off", "basic", "d1"):
            raise ProblemFileError(
                "symbolic must be one of off|basic|d1", header_lines["symbolic"]
            )
    horizon = None
    if "horizon" in header:
        try:
            horizon = float(header["horizon"])
        except ValueError:
            raise ProblemFileError("horizon must be a number", header_lines["horizon"])
        if horizon <= 0:
            raise ProblemFileError("horizon must be positive", header_lines["horizon"])
    samples = None
    if "samples" in header:
        try:
            samples = int(header["samples"])
        except ValueError:
            raise ProblemFileError("samples must be an integer", header_lines["samples"])
        if samples < 1:
            raise ProblemFileError("samples must be positive", header_lines["samples"])
    return ProblemFile(
        dimension=dim,
        matrix_text=matrix_rows,
        matrix=matrix,
        lattice=lattice,
        window=window,
        symbolic=symbolic,
        horizon=horizon,
        samples=samples,
    )


def load_problem(path) -> ProblemFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_problem(fh.read())
