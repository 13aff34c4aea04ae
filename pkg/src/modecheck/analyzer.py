"""Mode-by-mode rank analysis and the global three-valued verdicts.

The global conditions quantify over the infinite frequency lattice, so the
deciders are deliberately one-sided: an explicit bad mode refutes, a sound
symbolic certificate proves, and everything else is reported as undecided
within the scanned window.  Soundness always wins over completeness.

Certificate levels:

* ``off``   - window scan only, never proves.
* ``basic`` - spatial-free coefficient/unit-minor/resultant certificates,
  valid in any dimension.
* ``d1``    - additionally, in one spatial dimension, exact elimination:
  hunt the rational lattice frequencies that could break the condition and
  prove (or refute, with the found mode as witness) accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .config import DEFAULT_CONFIG, ToolConfig
from .elimination import (
    is_spatial_free,
    is_unit_scalar,
    modes_killing_polynomial,
    mpoly_generic_rank,
    mpoly_minors,
    spatial_gcd,
    tau_coefficient_polys,
    tau_gcd_degree,
    tau_leading_coeff,
    tau_resultant,
    to_spatial_upoly,
)
from .errors import CriterionInapplicable
from .lattice import PeriodLattice
from .matrices import PolyMatrix, generic_rank, nullspace_vector, rank_constancy
from .mpoly import MPoly
from .upoly import UPoly

PROVED = "PROVED"
REFUTED = "REFUTED"
UNDECIDED_WITHIN_WINDOW = "UNDECIDED_WITHIN_WINDOW"

SYMBOLIC = "SYMBOLIC"
WINDOW = "WINDOW"

_LEVELS = ("off", "basic", "d1")


@dataclass(frozen=True)
class ModeReport:
    """Exact rank data of one frequency mode."""

    n_vec: Tuple[int, ...]
    v: tuple
    generic_rank: int
    rank_drop_gcd: UPoly
    autonomous_mode: bool
    controllable_mode: bool
    kernel_witness: Optional[tuple]  # exact kernel vector when rank-deficient


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Optional[ModeReport]
    method: Optional[str]
    window_radius: int

    @property
    def decisive(self) -> bool:
        return self.status in (PROVED, REFUTED)


def _level(symbolic) -> str:
    if symbolic is True:
        return "basic"
    if symbolic is False or symbolic is None:
        return "off"
    if symbolic in _LEVELS:
        return symbolic
    raise ValueError(f"unknown symbolic level {symbolic!r}; use off|basic|d1")


def analyze_mode(
    M: PolyMatrix,
    lattice: PeriodLattice,
    n_vec: Sequence[int],
    config: ToolConfig = DEFAULT_CONFIG,
) -> ModeReport:
    """Substitute the mode frequency and compute the rank picture of the
    resulting one-variable system."""
    if lattice.dim != M.dim:
        raise ValueError("lattice dimension does not match the matrix")
    v = lattice.mode(n_vec)
    Mv = M.at_mode(v)
    rc = rank_constancy(Mv, config)
    r = rc.generic_rank
    kernel = None
    if r < M.cols:
        kern = nullspace_vector(Mv)
        kernel = tuple(kern) if kern is not None else None
    return ModeReport(
        n_vec=tuple(int(k) for k in n_vec),
        v=v,
        generic_rank=r,
        rank_drop_gcd=rc.gcd,
        autonomous_mode=r == M.cols,
        controllable_mode=rc.constant,
        kernel_witness=kernel,
    )


def _scan(M, lattice, window, config):
    return [(n, analyze_mode(M, lattice, n, config)) for n in lattice.box(window)]


def decide_autonomy(
    M: PolyMatrix,
    lattice: PeriodLattice,
    window: int = 4,
    symbolic="basic",
    config: ToolConfig = DEFAULT_CONFIG,
    _reports=None,
) -> Verdict:
    """Must every trajectory with a zero past be zero?

    Refuted by any scanned mode whose matrix is column-rank deficient;
    proved when a certificate shows no mode anywhere can be deficient.
    """
    if window < 0:
        raise ValueError("window must be nonnegative")
    level = _level(symbolic)
    n = M.cols
    if not M.has_spatial():
        # every mode yields the same one-variable system; the single report
        # decides the question outright
        rep = analyze_mode(M, lattice, (0,) * lattice.dim, config)
        if rep.autonomous_mode:
            return Verdict(PROVED, None, SYMBOLIC, window)
        return Verdict(REFUTED, rep, SYMBOLIC, window)
    reports = _reports if _reports is not None else _scan(M, lattice, window, config)
    for _, rep in reports:
        if rep.generic_rank < n:
            return Verdict(REFUTED, rep, WINDOW, window)
    if level == "off" or M.rows < n:
        return Verdict(UNDECIDED_WITHIN_WINDOW, None, None, window)
    coeffs = tau_coefficient_polys(mpoly_minors(M.entries, n, config))
    if any(is_spatial_free(c) for c in coeffs):
        # a spatial-free nonzero coefficient survives every substitution, so
        # each mode matrix keeps a nonzero top-order minor
        return Verdict(PROVED, None, SYMBOLIC, window)
    if level == "d1" and M.dim == 1 and coeffs:
        h = spatial_gcd(coeffs)
        if h.degree() == 0:
            return Verdict(PROVED, None, SYMBOLIC, window)
        bad = modes_killing_polynomial(h)
        if bad is not None:
            hits = [q for q in bad if lattice.lattice_index((q,)) is not None]
            if not hits:
                return Verdict(PROVED, None, SYMBOLIC, window)
            n_bad = lattice.lattice_index((hits[0],))
            rep = analyze_mode(M, lattice, n_bad, config)
            assert rep.generic_rank < n
            return Verdict(REFUTED, rep, SYMBOLIC, window)
    return Verdict(UNDECIDED_WITHIN_WINDOW, None, None, window)


def decide_controllability(
    M: PolyMatrix,
    lattice: PeriodLattice,
    window: int = 4,
    symbolic="basic",
    config: ToolConfig = DEFAULT_CONFIG,
    _reports=None,
) -> Verdict:
    """Can any past trajectory be steered into any future trajectory?

    Refuted by any scanned mode whose rank drops at some time value; proved
    by certificates guaranteeing a constant rank at every mode: a unit minor,
    or a spatial-free nonzero resultant between top-order minors (plus, at
    level d1, exact elimination of the resultant's lattice zeros).
    """
    if window < 0:
        raise ValueError("window must be nonnegative")
    level = _level(symbolic)
    if not M.has_spatial():
        rep = analyze_mode(M, lattice, (0,) * lattice.dim, config)
        if rep.controllable_mode:
            return Verdict(PROVED, None, SYMBOLIC, window)
        return Verdict(REFUTED, rep, SYMBOLIC, window)
    reports = _reports if _reports is not None else _scan(M, lattice, window, config)
    for _, rep in reports:
        if not rep.controllable_mode:
            return Verdict(REFUTED, rep, WINDOW, window)
    if level == "off":
        return Verdict(UNDECIDED_WITHIN_WINDOW, None, None, window)
    r = mpoly_generic_rank(M.entries)
    if r == 0:
        # the zero matrix constrains nothing; every mode has constant rank 0
        return Verdict(PROVED, None, SYMBOLIC, window)
    tops = [mu for mu in mpoly_minors(M.entries, r, config) if mu]
    if any(is_unit_scalar(mu) for mu in tops):
        return Verdict(PROVED, None, SYMBOLIC, window)
    if any(rep.generic_rank != r for _, rep in reports):
        return Verdict(UNDECIDED_WITHIN_WINDOW, None, None, window)
    if tau_gcd_degree(tops) != 0:
        return Verdict(UNDECIDED_WITHIN_WINDOW, None, None, window)
    for j, mu_j in enumerate(tops):
        if mu_j.tau_degree() == 0 or not is_spatial_free(tau_leading_coeff(mu_j)):
            continue
        # mu_j keeps its time degree at every mode, pinning the generic rank
        # at r; a never-vanishing resultant then rules out shared time roots
        for k, mu_k in enumerate(tops):
            if j == k:
                continue
            res = tau_resultant(mu_j, mu_k)
            if not res:
                continue
            if is_spatial_free(res):
                return Verdict(PROVED, None, SYMBOLIC, window)
            if level == "d1" and M.dim == 1:
                bad = modes_killing_polynomial(to_spatial_upoly(res))
                if bad is not None:
                    hits = [q for q in bad if lattice.lattice_index((q,)) is not None]
                    if not hits:
                        return Verdict(PROVED, None, SYMBOLIC, window)
    return Verdict(UNDECIDED_WITHIN_WINDOW, None, None, window)


def classical_autonomy_scalar(p: MPoly) -> bool:
    """Degree criterion for the scalar equation over unrestricted
    distributions: autonomous iff the total degree survives setting the
    spatial variables to zero."""
    if not p:
        raise ValueError("zero polynomial: criterion requires a nonzero input")
    p0 = p.spatial_zeroed()
    if not p0:
        raise CriterionInapplicable(
            "polynomial vanishes identically at zero spatial frequency; "
            "the degree criterion is undefined"
        )
    return p.total_degree() == p0.total_degree()


@dataclass(frozen=True)
class SolutionSpaceComparison:
    classical_status: str  # autonomous | not_autonomous | inapplicable
    total_degree: int
    restricted_degree: Optional[int]
    periodic: Verdict


def compare_solution_spaces(
    p: MPoly,
    lattice: PeriodLattice,
    window: int = 4,
    symbolic="basic",
    config: ToolConfig = DEFAULT_CONFIG,
) -> SolutionSpaceComparison:
    """Side-by-side autonomy verdicts of a scalar equation over unrestricted
    distributions and over the spatially periodic class."""
    if not p:
        raise ValueError("zero polynomial")
    p0 = p.spatial_zeroed()
    if not p0:
        status = "inapplicable"
        restricted = None
    else:
        restricted = int(p0.total_degree())
        status = (
            "autonomous" if p.total_degree() == p0.total_degree() else "not_autonomous"
        )
    verdict = decide_autonomy(PolyMatrix([[p]]), lattice, window, symbolic, config)
    return SolutionSpaceComparison(
        classical_status=status,
        total_degree=int(p.total_degree()),
        restricted_degree=restricted,
        periodic=verdict,
    )
