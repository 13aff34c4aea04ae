"""Machine-readable report documents and CSV export.

Report JSON is deterministic: given the same input and tool version the
serialized bytes are identical across runs, so the ``timing`` block carries
deterministic work counters (wall-clock seconds go to the human-readable
output only).
"""

from __future__ import annotations

import csv
import json
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .analyzer import ModeReport, SolutionSpaceComparison, Verdict

SCHEMA_VERSION = 1


def mode_report_to_dict(rep: ModeReport) -> dict:
    out = {
        "n": list(rep.n_vec),
        "v": [str(x) for x in rep.v],
        "generic_rank": rep.generic_rank,
        "rank_drop_gcd": str(rep.rank_drop_gcd),
        "autonomous_mode": rep.autonomous_mode,
        "controllable_mode": rep.controllable_mode,
    }
    if rep.kernel_witness is not None:
        out["kernel_witness"] = [str(p) for p in rep.kernel_witness]
    return out


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "status": v.status,
        "method": v.method,
        "window_radius": v.window_radius,
        "witness": mode_report_to_dict(v.witness) if v.witness else None,
    }


def comparison_to_dict(c: SolutionSpaceComparison) -> dict:
    return {
        "classical_status": c.classical_status,
        "total_degree": c.total_degree,
        "restricted_degree": c.restricted_degree,
        "periodic": verdict_to_dict(c.periodic),
    }


def build_report(
    *,
    matrix_strings: Sequence[Sequence[str]],
    dimension: int,
    period: Sequence[Sequence],
    options: dict,
    autonomy: Verdict,
    controllability: Verdict,
    mode_table: Sequence[ModeReport],
    classical: Optional[SolutionSpaceComparison] = None,
) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "modecheck", "version": __version__},
        "input": {
            "dimension": dimension,
            "matrix": [list(row) for row in matrix_strings],
            "period": [[str(x) for x in row] for row in period],
            "options": options,
        },
        "verdicts": {
            "autonomy": verdict_to_dict(autonomy),
            "controllability": verdict_to_dict(controllability),
        },
        "modes": [mode_report_to_dict(rep) for rep in mode_table],
        "classical": comparison_to_dict(classical) if classical else None,
        "timing": {"modes_analyzed": len(mode_table)},
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_trajectory_csv(path, t_grid, values: np.ndarray, dim: int = 0, x=None):
    """CSV with columns t, x1..xd, Re w1..wn, Im w1..wn.

    A pure time trajectory is written at the spatial origin."""
    values = np.asarray(values)
    ncomp = values.shape[1]
    x_row = [0.0] * dim if x is None else [float(c) for c in x]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        header = (
            ["t"]
            + [f"x{k + 1}" for k in range(dim)]
            + [f"re_w{j + 1}" for j in range(ncomp)]
            + [f"im_w{j + 1}" for j in range(ncomp)]
        )
        writer.writerow(header)
        for t, row in zip(t_grid, values):
            writer.writerow(
                [repr(float(t))]
                + [repr(c) for c in x_row]
                + [repr(float(c.real)) for c in row]
                + [repr(float(c.imag)) for c in row]
            )


def write_field_csv(path, t_grid, x_grid, field: np.ndarray):
    """Field samples, one row per (t, x) pair; field shape (T, X, ncomp)."""
    field = np.asarray(field)
    ncomp = field.shape[2]
    dim = len(x_grid[0])
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        header = (
            ["t"]
            + [f"x{k + 1}" for k in range(dim)]
            + [f"re_w{j + 1}" for j in range(ncomp)]
            + [f"im_w{j + 1}" for j in range(ncomp)]
        )
        writer.writerow(header)
        for ti, t in enumerate(t_grid):
            for xi, x in enumerate(x_grid):
                row = field[ti, xi]
                writer.writerow(
                    [repr(float(t))]
                    + [repr(float(c)) for c in x]
                    + [repr(float(c.real)) for c in row]
                    + [repr(float(c.imag)) for c in row]
                )
