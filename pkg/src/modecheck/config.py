"""Run-time knobs shared by the analyzer and the trajectory lab."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ToolConfig:
    # refuse to enumerate minors of matrices larger than this on a side
    minor_limit: int = 8
    # relative singular-value threshold for numeric rank cross-checks
    svd_rel_tol: float = 1e-8
    # default time horizon for sampled trajectories
    horizon: float = 4.0
    # default number of time samples
    sample_count: int = 50
    # exponents closer than this are treated as the same exponential
    lambda_merge_eps: float = 1e-12
    # field synthesis rejects modes with amplitude > growth_coeff*(1+|n|)^growth_power
    growth_coeff: float = 1e6
    growth_power: int = 8


DEFAULT_CONFIG = ToolConfig()
