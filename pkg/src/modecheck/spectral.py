"""Constructive side of the analysis: witness and patching trajectories, and
numeric cross-checks of the exact ranks.

A non-autonomy witness applies an exact kernel vector (as a differential
operator) to a smooth ramp supported in t >= 0; the defining residual is the
exact polynomial identity M*k = 0, so the trajectory is a behaviour member
by construction, vanishes identically in the past, and is nonzero.

Patching runs through the image representation: cut off the *latent*
signals, not the trajectories themselves.  Cutting the trajectories with the
cutoff directly does not commute with the differential operator; the latent
route keeps the exact identity M*N = 0 in force for any smooth latent, and
the literal product construction is evaluated alongside as a diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_CONFIG, ToolConfig
from .errors import (
    FullColumnRankMode,
    GrowthBoundViolation,
    LatentRecoveryError,
    ModeNotRankConstant,
)
from .lattice import PeriodLattice
from .matrices import (
    PolyMatrix,
    UPolyMatrix,
    bareiss_determinant,
    image_representation,
    nullspace_vector,
    rank_constancy,
)
from .scalars import PS_ONE
from .signals import CutoffFunction, ExpPolySignal, SmoothRamp, apply_operator
from .upoly import UPoly

WITNESS = "WITNESS"
PATCH = "PATCH"


@dataclass
class ModeTrajectory:
    """One mode's time trajectory plus the exact objects that certify it."""

    n_vec: Tuple[int, ...]
    v: tuple
    provenance: str  # WITNESS | PATCH
    ncomp: int
    evaluate: Callable[[Sequence[float]], np.ndarray]
    kernel: Optional[tuple] = None  # exact kernel vector (witnesses)
    image: Optional[UPolyMatrix] = None  # exact image representation (patches)
    signal: Optional[ExpPolySignal] = None
    grid: Optional[np.ndarray] = None
    values: Optional[np.ndarray] = None
    diagnostics: Dict[str, float] = field(default_factory=dict)


def numeric_operator(M: UPolyMatrix, pi_val=None) -> list[list[list[complex]]]:
    """Matrix of complex coefficient lists (constant term first)."""
    return [[e.numeric_coeffs(pi_val) for e in row] for row in M.entries]


def build_nonautonomy_witness(
    M: PolyMatrix,
    lattice: PeriodLattice,
    n_vec: Sequence[int],
    config: ToolConfig = DEFAULT_CONFIG,
) -> ModeTrajectory:
    """A nonzero trajectory of the mode system that vanishes for t < 0.

    Only exists when the mode matrix is column-rank deficient; otherwise
    FullColumnRankMode is raised.
    """
    v = lattice.mode(n_vec)
    Mv = M.at_mode(v)
    kernel = nullspace_vector(Mv)
    if kernel is None:
        raise FullColumnRankMode(
            f"mode {tuple(n_vec)} has full column rank; no zero-past witness exists"
        )
    residual = Mv.apply_vector(kernel)
    assert all(not e for e in residual), "kernel identity must hold exactly"
    ramp = SmoothRamp(config.horizon / 2.0)
    coeffs = [k.numeric_coeffs() for k in kernel]  # complex, constant term first

    def raw(ts):
        ts = np.asarray(ts, dtype=float)
        out = np.zeros((len(ts), len(kernel)), dtype=complex)
        for j, cs in enumerate(coeffs):
            for order, c in enumerate(cs):
                if c == 0:
                    continue
                out[:, j] += c * np.array([ramp.value(t, order) for t in ts])
        return out

    # unit peak on the sampled horizon; scaling keeps membership and the
    # zero past exact
    probe = np.linspace(0.0, config.horizon, 400)
    peak = float(np.max(np.abs(raw(probe))))
    assert peak > 0.0, "kernel operator annihilated the ramp"
    scale = 1.0 / peak

    def evaluate(ts):
        return raw(ts) * scale

    return ModeTrajectory(
        n_vec=tuple(int(k) for k in n_vec),
        v=v,
        provenance=WITNESS,
        ncomp=len(kernel),
        evaluate=evaluate,
        kernel=tuple(kernel),
        diagnostics={"peak": 1.0},
    )


def cutoff_theta(horizon: float) -> CutoffFunction:
    """Smooth cutoff: 1 for t <= 0, 0 for t > horizon/4."""
    return CutoffFunction(horizon)


def _unimodular_inverse(V: UPolyMatrix) -> list[list[UPoly]]:
    """Exact inverse of a square polynomial matrix with unit determinant
    (adjugate divided by the constant determinant)."""
    n = V.rows
    det = bareiss_determinant(V.entries)
    if det.degree() != 0:
        raise ArithmeticError("matrix is not unimodular over the scalar field")
    inv_det = PS_ONE / det.lc
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [V.entries[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = bareiss_determinant(sub)
            if (i + j) % 2:
                cof = -cof
            out[j][i] = cof.scale(inv_det)
    return out


def _residual_of(M_num, sig: ExpPolySignal, ts) -> float:
    res = apply_operator(M_num, sig)
    return res.max_abs(ts)


def _signal_scale(sig: ExpPolySignal, ts) -> float:
    return max(1.0, sig.max_abs(ts))


def build_patching_trajectory(
    M: PolyMatrix,
    lattice: PeriodLattice,
    n_vec: Sequence[int],
    theta1: ExpPolySignal,
    theta2: ExpPolySignal,
    horizon: float,
    config: ToolConfig = DEFAULT_CONFIG,
) -> ModeTrajectory:
    """A behaviour trajectory equal to theta1 for t < 0 and theta2 for
    t > horizon.

    Both endpoints must already solve the mode system (checked numerically);
    the mode must be rank constant.
    """
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    v = lattice.mode(n_vec)
    Mv = M.at_mode(v)
    n = M.cols
    if theta1.ncomp != n or theta2.ncomp != n:
        raise ValueError("endpoint component count does not match the system")
    N = image_representation(Mv, config)
    if N is None:
        raise ModeNotRankConstant(f"mode {tuple(n_vec)} is not rank constant")
    q = N.cols
    M_num = numeric_operator(Mv)
    check_ts = np.linspace(-2.0 * horizon, 2.0 * horizon, 160)
    for label, sig in (("first", theta1), ("second", theta2)):
        res = _residual_of(M_num, sig, check_ts)
        if res > 1e-9 * _signal_scale(sig, check_ts):
            raise LatentRecoveryError(
                f"{label} endpoint is not a mode behaviour member "
                f"(residual {res:.3e})"
            )
    if q == 0:
        raise LatentRecoveryError(
            "mode behaviour is trivial (zero image); nothing to patch"
        )
    # latent recovery operator: bottom rows of the exact inverse of the
    # Smith column transformation; L*N = I_q exactly
    from .matrices import smith_form

    S = smith_form(Mv)
    r = n - q
    Vinv = _unimodular_inverse(S.V)
    L = UPolyMatrix([Vinv[i] for i in range(r, n)], cols=n)
    check = L.matmul(N)
    assert check == UPolyMatrix.identity(q), "latent recovery identity failed"
    L_num = numeric_operator(L)
    N_num = numeric_operator(N)
    latents = []
    for label, sig in (("first", theta1), ("second", theta2)):
        lat = apply_operator(L_num, sig)
        back = apply_operator(N_num, lat)
        err = (back + sig.scaled(-1.0)).max_abs(check_ts)
        if err > 1e-8 * _signal_scale(sig, check_ts):
            raise LatentRecoveryError(
                f"latent recovery failed for the {label} endpoint "
                f"(reconstruction error {err:.3e})"
            )
        latents.append(lat)
    ell1, ell2 = latents
    theta = CutoffFunction(horizon)
    max_ord = max(
        (len(cs) - 1 for row in N_num for cs in row),
        default=0,
    )
    ell1_derivs = [ell1]
    ell2_derivs = [ell2]
    for _ in range(max_ord):
        ell1_derivs.append(ell1_derivs[-1].derivative())
        ell2_derivs.append(ell2_derivs[-1].derivative())
    binom = [[math.comb(k, a) for a in range(k + 1)] for k in range(max_ord + 1)]

    def evaluate(ts):
        ts = np.asarray(ts, dtype=float)
        th = np.array([[theta.value(t, a) for t in ts] for a in range(max_ord + 1)])
        thT = np.array(
            [
                [((-1.0) ** a) * theta.value(horizon - t, a) for t in ts]
                for a in range(max_ord + 1)
            ]
        )
        l1 = np.stack([d.evaluate(ts) for d in ell1_derivs])  # (ord, T, q)
        l2 = np.stack([d.evaluate(ts) for d in ell2_derivs])
        # (theta*l)^(k) = sum_a C(k,a) theta^(a) l^(k-a)
        patched = np.zeros((max_ord + 1, len(ts), q), dtype=complex)
        for k in range(max_ord + 1):
            for a in range(k + 1):
                c = binom[k][a]
                patched[k] += c * (th[a][:, None] * l1[k - a] + thT[a][:, None] * l2[k - a])
        out = np.zeros((len(ts), n), dtype=complex)
        for i in range(n):
            for j in range(q):
                cs = N_num[i][j]
                for k, cval in enumerate(cs):
                    if cval != 0:
                        out[:, i] += cval * patched[k][:, j]
        return out

    # diagnostics: residual of the literal product construction
    # theta*T1 + theta(horizon - .)*T2, which need not solve the system
    lit_ord = max(len(cs) - 1 for row in M_num for cs in row)
    t1_derivs = [theta1]
    t2_derivs = [theta2]
    for _ in range(lit_ord):
        t1_derivs.append(t1_derivs[-1].derivative())
        t2_derivs.append(t2_derivs[-1].derivative())
    lit_binom = [[math.comb(k, a) for a in range(k + 1)] for k in range(lit_ord + 1)]

    def literal_residual(ts):
        ts = np.asarray(ts, dtype=float)
        th = np.array([[theta.value(t, a) for t in ts] for a in range(lit_ord + 1)])
        thT = np.array(
            [
                [((-1.0) ** a) * theta.value(horizon - t, a) for t in ts]
                for a in range(lit_ord + 1)
            ]
        )
        s1 = np.stack([d.evaluate(ts) for d in t1_derivs])
        s2 = np.stack([d.evaluate(ts) for d in t2_derivs])
        lit = np.zeros((lit_ord + 1, len(ts), n), dtype=complex)
        for k in range(lit_ord + 1):
            for a in range(k + 1):
                c = lit_binom[k][a]
                lit[k] += c * (th[a][:, None] * s1[k - a] + thT[a][:, None] * s2[k - a])
        res = np.zeros((len(ts), M.rows), dtype=complex)
        for i in range(M.rows):
            for j in range(n):
                cs = M_num[i][j]
                for k, cval in enumerate(cs):
                    if cval != 0:
                        res[:, i] += cval * lit[k][:, j]
        return res

    grid = np.linspace(-horizon, 2.0 * horizon, max(3 * config.sample_count, 120))
    values = evaluate(grid)
    lit_res = float(np.max(np.abs(literal_residual(grid))))
    return ModeTrajectory(
        n_vec=tuple(int(k) for k in n_vec),
        v=v,
        provenance=PATCH,
        ncomp=n,
        evaluate=evaluate,
        image=N,
        grid=grid,
        values=values,
        diagnostics={"literal_formula_max_residual": lit_res},
    )


def sample_rank(
    M: PolyMatrix,
    lattice: PeriodLattice,
    n_vec: Sequence[int],
    t_samples: Sequence[complex],
    config: ToolConfig = DEFAULT_CONFIG,
) -> list[int]:
    """Numeric rank of the mode matrix at each sample time (relative
    singular-value threshold)."""
    v = lattice.mode(n_vec)
    Mv = M.at_mode(v)
    out = []
    for t in t_samples:
        A = Mv.evaluate(complex(t))
        s = np.linalg.svd(A, compute_uv=False)
        if len(s) == 0 or s[0] == 0.0:
            out.append(0)
        else:
            out.append(int(np.sum(s > config.svd_rel_tol * s[0])))
    return out


def synthesize_spatial_field(
    modes: Sequence[ModeTrajectory],
    x_grid: Sequence[Sequence[float]],
    t_grid: Sequence[float],
    config: ToolConfig = DEFAULT_CONFIG,
) -> np.ndarray:
    """Superpose mode trajectories into a spatial field
    w(x, t) = sum_v exp(2*pi*i*v.x) * theta_v(t); shape (T, X, ncomp).

    Every mode amplitude must respect the configured polynomial growth bound
    in its lattice index."""
    if not modes:
        raise ValueError("no modes to synthesize")
    ncomp = modes[0].ncomp
    if any(m.ncomp != ncomp for m in modes):
        raise ValueError("modes disagree on component count")
    xs = np.asarray([[float(c) for c in x] for x in x_grid], dtype=float)
    ts = np.asarray(t_grid, dtype=float)
    out = np.zeros((len(ts), len(xs), ncomp), dtype=complex)
    for mode in modes:
        vals = mode.evaluate(ts)  # (T, ncomp)
        amp = float(np.max(np.abs(vals))) if vals.size else 0.0
        bound = config.growth_coeff * (
            1.0 + math.sqrt(sum(k * k for k in mode.n_vec))
        ) ** config.growth_power
        if amp > bound:
            raise GrowthBoundViolation(mode.n_vec, amp, bound)
        v = np.array([float(c) for c in mode.v])
        phase = np.exp(2j * np.pi * (xs @ v))  # (X,)
        out += phase[None, :, None] * vals[:, None, :]
    return out
