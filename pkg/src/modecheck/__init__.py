"""Exact decision engine for spatially periodic linear PDE systems.

Given a polynomial matrix in spatial derivative symbols and a time
derivative symbol, plus a rational period lattice, the package decides
autonomy (zero past forces zero trajectory) and controllability (any past
patches to any future) of the spatially periodic solution class by exact
per-mode rank computations, and constructs verifiable witness and patching
trajectories.
"""

__version__ = "0.1.0"

from .analyzer import (
    ModeReport,
    SolutionSpaceComparison,
    Verdict,
    analyze_mode,
    classical_autonomy_scalar,
    compare_solution_spaces,
    decide_autonomy,
    decide_controllability,
)
from .config import DEFAULT_CONFIG, ToolConfig
from .lattice import PeriodLattice
from .matrices import (
    PolyMatrix,
    RankConstancy,
    SmithDecomposition,
    UPolyMatrix,
    generic_rank,
    image_representation,
    minors,
    nullspace_vector,
    rank_constancy,
    smith_form,
)
from .mpoly import MPoly, substitute_mode, total_degree
from .parsing import parse_poly
from .scalars import GaussianRational, PiScalar, QiPoly
from .signals import CutoffFunction, ExpPolySignal, SmoothRamp
from .spectral import (
    ModeTrajectory,
    build_nonautonomy_witness,
    build_patching_trajectory,
    cutoff_theta,
    sample_rank,
    synthesize_spatial_field,
)
from .upoly import UPoly, upoly_gcd, upoly_gcd_euclid

__all__ = [
    "__version__",
    "ModeReport",
    "SolutionSpaceComparison",
    "Verdict",
    "analyze_mode",
    "classical_autonomy_scalar",
    "compare_solution_spaces",
    "decide_autonomy",
    "decide_controllability",
    "DEFAULT_CONFIG",
    "ToolConfig",
    "PeriodLattice",
    "PolyMatrix",
    "RankConstancy",
    "SmithDecomposition",
    "UPolyMatrix",
    "generic_rank",
    "image_representation",
    "minors",
    "nullspace_vector",
    "rank_constancy",
    "smith_form",
    "MPoly",
    "substitute_mode",
    "total_degree",
    "parse_poly",
    "GaussianRational",
    "PiScalar",
    "QiPoly",
    "CutoffFunction",
    "ExpPolySignal",
    "SmoothRamp",
    "ModeTrajectory",
    "build_nonautonomy_witness",
    "build_patching_trajectory",
    "cutoff_theta",
    "sample_rank",
    "synthesize_spatial_field",
    "UPoly",
    "upoly_gcd",
    "upoly_gcd_euclid",
]
