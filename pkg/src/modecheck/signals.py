"""Closed-form signal classes for the trajectory lab.

ExpPolySignal is the solution class of constant-coefficient one-variable
systems: finite sums of polynomial-times-exponential vector terms, closed
under differentiation and under polynomial differential operators.

The cutoff is built from the classic compactly-supported bump: derivatives
of exp(-1/(s(1-s))) are rational multiples of the bump itself, and the
rational prefactors are carried exactly so arbitrary orders stay accurate.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from .scalars import GaussianRational, QiPoly


class ExpPolySignal:
    """Finite sum of terms exp(lam*t) * (vector of polynomials in t)."""

    __slots__ = ("ncomp", "terms")

    def __init__(self, ncomp: int, terms=(), merge_eps: float = 1e-12):
        self.ncomp = ncomp
        merged: List[Tuple[complex, List[List[complex]]]] = []
        for lam, polys in terms:
            lam = complex(lam)
            polys = [list(map(complex, p)) for p in polys]
            if len(polys) != ncomp:
                raise ValueError("component count mismatch")
            for entry in merged:
                if abs(entry[0] - lam) <= merge_eps:
                    for j in range(ncomp):
                        a, b = entry[1][j], polys[j]
                        if len(a) < len(b):
                            a.extend([0j] * (len(b) - len(a)))
                        for kk, c in enumerate(b):
                            a[kk] += c
                    break
            else:
                merged.append((lam, polys))
        clean = []
        for lam, polys in merged:
            trimmed = []
            nonzero = False
            for p in polys:
                while p and abs(p[-1]) == 0.0:
                    p.pop()
                if p:
                    nonzero = True
                trimmed.append(tuple(p))
            if nonzero:
                clean.append((lam, tuple(trimmed)))
        clean.sort(key=lambda e: (e[0].real, e[0].imag))
        self.terms = tuple(clean)

    @staticmethod
    def zero(ncomp: int) -> "ExpPolySignal":
        return ExpPolySignal(ncomp)

    @staticmethod
    def constant(vec: Sequence[complex]) -> "ExpPolySignal":
        return ExpPolySignal(len(vec), [(0j, [[c] for c in vec])])

    @staticmethod
    def exponential(lam: complex, vec: Sequence[complex]) -> "ExpPolySignal":
        return ExpPolySignal(len(vec), [(lam, [[c] for c in vec])])

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, ts) -> np.ndarray:
        """Values at the given times, shape (len(ts), ncomp)."""
        ts = np.atleast_1d(np.asarray(ts, dtype=complex))
        out = np.zeros((len(ts), self.ncomp), dtype=complex)
        for lam, polys in self.terms:
            ex = np.exp(lam * ts)
            for j, p in enumerate(polys):
                if not p:
                    continue
                val = np.zeros(len(ts), dtype=complex)
                for c in reversed(p):
                    val = val * ts + c
                out[:, j] += ex * val
        return out

    def evaluate_at(self, t: complex) -> np.ndarray:
        return self.evaluate([t])[0]

    def derivative(self) -> "ExpPolySignal":
        terms = []
        for lam, polys in self.terms:
            new_polys = []
            for p in polys:
                dp = [k * c for k, c in enumerate(p)][1:] if len(p) > 1 else []
                lp = [lam * c for c in p]
                if len(dp) < len(lp):
                    dp = dp + [0j] * (len(lp) - len(dp))
                new_polys.append([a + b for a, b in zip(dp, lp)])
            terms.append((lam, new_polys))
        return ExpPolySignal(self.ncomp, terms)

    def scaled(self, c: complex) -> "ExpPolySignal":
        return ExpPolySignal(
            self.ncomp,
            [(lam, [[c * x for x in p] for p in polys]) for lam, polys in self.terms],
        )

    def __add__(self, other: "ExpPolySignal") -> "ExpPolySignal":
        if self.ncomp != other.ncomp:
            raise ValueError("component count mismatch")
        return ExpPolySignal(self.ncomp, list(self.terms) + list(other.terms))

    def max_abs(self, ts) -> float:
        vals = self.evaluate(ts)
        return float(np.max(np.abs(vals))) if len(ts) else 0.0

    def __repr__(self):
        return f"ExpPolySignal(ncomp={self.ncomp}, nterms={len(self.terms)})"


def apply_operator(op: Sequence[Sequence[Sequence[complex]]], sig: ExpPolySignal) -> ExpPolySignal:
    """Apply a matrix of polynomial differential operators (coefficient lists
    by derivative order, constant term first) to a signal."""
    m = len(op)
    if any(len(row) != sig.ncomp for row in op):
        raise ValueError("operator shape mismatch")
    max_ord = 0
    for row in op:
        for cs in row:
            max_ord = max(max_ord, len(cs) - 1)
    derivs = [sig]
    for _ in range(max_ord):
        derivs.append(derivs[-1].derivative())
    acc: Dict[complex, List[List[complex]]] = {}
    for order, dsig in enumerate(derivs):
        for lam, polys in dsig.terms:
            for i in range(m):
                for j in range(sig.ncomp):
                    cs = op[i][j]
                    if order >= len(cs) or cs[order] == 0:
                        continue
                    c = cs[order]
                    bucket = acc.setdefault(lam, [[] for _ in range(m)])
                    target = bucket[i]
                    p = polys[j]
                    if len(target) < len(p):
                        target.extend([0j] * (len(p) - len(target)))
                    for kk, x in enumerate(p):
                        target[kk] += c * x
    return ExpPolySignal(m, [(lam, polys) for lam, polys in acc.items()])


# ---------------------------------------------------------------------------
# bump machinery
# ---------------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(80)

# rational prefactors R_k with bump^(k) = R_k(s) * bump(s); R_k = num/den
_PREFACTORS: List[Tuple[QiPoly, QiPoly]] = [(QiPoly.one(), QiPoly.one())]


def _prefactor(order: int) -> Tuple[QiPoly, QiPoly]:
    # d/ds of -1/(s - s^2) is (1 - 2s)/(s - s^2)^2
    base_num = QiPoly([1, -2])
    base_den = QiPoly([0, 1, -1]) ** 2
    while len(_PREFACTORS) <= order:
        num, den = _PREFACTORS[-1]
        # (num/den)' + (num/den)*(base_num/base_den)
        dnum = num.derivative() * den - num * den.derivative()
        new_num = dnum * base_den + num * base_num * den
        new_den = den * den * base_den
        g = QiPoly.gcd(new_num, new_den)
        if g.degree > 0:
            new_num = new_num.exact_div(g)
            new_den = new_den.exact_div(g)
        _PREFACTORS.append((new_num, new_den))
    return _PREFACTORS[order]


def bump(s: float) -> float:
    """exp(-1/(s(1-s))) on (0,1), zero elsewhere."""
    if s <= 0.0 or s >= 1.0:
        return 0.0
    return math.exp(-1.0 / (s * (1.0 - s)))


def bump_derivative(s: float, order: int) -> float:
    if order == 0:
        return bump(s)
    if s <= 0.0 or s >= 1.0:
        return 0.0
    num, den = _prefactor(order)
    return (num.evaluate(s).real / den.evaluate(s).real) * bump(s)


_BUMP_MASS = None


def bump_mass() -> float:
    global _BUMP_MASS
    if _BUMP_MASS is None:
        xs = 0.5 * (_GL_NODES + 1.0)
        _BUMP_MASS = 0.5 * float(
            np.sum(_GL_WEIGHTS * np.array([bump(x) for x in xs]))
        )
    return _BUMP_MASS


def smooth_step(s: float, order: int = 0) -> float:
    """Monotone step: 0 below 0, 1 above 1, with all derivatives vanishing
    at both ends.  order > 0 gives exact derivatives."""
    if order == 0:
        if s <= 0.0:
            return 0.0
        if s >= 1.0:
            return 1.0
        xs = 0.5 * s * (_GL_NODES + 1.0)
        val = 0.5 * s * float(np.sum(_GL_WEIGHTS * np.array([bump(x) for x in xs])))
        return val / bump_mass()
    return bump_derivative(s, order - 1) / bump_mass()


class CutoffFunction:
    """Smooth transition equal to 1 for t <= 0 and 0 for t > horizon/4."""

    __slots__ = ("horizon", "_width")

    def __init__(self, horizon: float):
        if horizon <= 0:
            raise ValueError("horizon must be positive")
        self.horizon = float(horizon)
        self._width = self.horizon / 4.0

    def value(self, t: float, order: int = 0) -> float:
        s = t / self._width
        if order == 0:
            return 1.0 - smooth_step(s, 0)
        return -smooth_step(s, order) / self._width**order

    def __call__(self, t: float) -> float:
        return self.value(t, 0)

    def values(self, ts, order: int = 0) -> np.ndarray:
        return np.array([self.value(float(t), order) for t in np.asarray(ts)])


class SmoothRamp:
    """Smooth source supported in t >= 0: rises from 0 to a plateau of
    height 1 over the given width; all derivatives vanish outside (0, width)."""

    __slots__ = ("width",)

    def __init__(self, width: float):
        if width <= 0:
            raise ValueError("width must be positive")
        self.width = float(width)

    def value(self, t: float, order: int = 0) -> float:
        s = t / self.width
        if order == 0:
            return smooth_step(s, 0)
        return smooth_step(s, order) / self.width**order

    def __call__(self, t: float) -> float:
        return self.value(t, 0)
