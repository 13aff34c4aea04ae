"""Multivariate polynomials in the spatial symbols x1..xd, the time symbol t
and the constant symbol pi, over the Gaussian rationals.

Exponent vectors have length d + 2 with layout (x1, ..., xd, t, pi).  Terms
are kept in a dict keyed by exponent vector; the canonical term order used
for printing and leading-term division is graded lexicographic over the full
exponent vector.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .scalars import GR_I, GR_ONE, GR_ZERO, GaussianRational, QiPoly, PiScalar
from .upoly import UPoly

Exponent = Tuple[int, ...]


class MPoly:
    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Exponent, GaussianRational] | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = dim
        clean: Dict[Exponent, GaussianRational] = {}
        if terms:
            width = dim + 2
            for e, c in terms.items():
                c = GaussianRational.of(c)
                if not c:
                    continue
                e = tuple(e)
                if len(e) != width or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent vector {e} for dimension {dim}")
                clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "MPoly":
        return MPoly(dim)

    @staticmethod
    def constant(dim: int, value) -> "MPoly":
        return MPoly(dim, {(0,) * (dim + 2): GaussianRational.of(value)})

    @staticmethod
    def one(dim: int) -> "MPoly":
        return MPoly.constant(dim, 1)

    @staticmethod
    def imaginary(dim: int) -> "MPoly":
        return MPoly.constant(dim, GR_I)

    @staticmethod
    def spatial(dim: int, index: int, power: int = 1) -> "MPoly":
        """The variable x{index} (1-based) raised to a power."""
        if not 1 <= index <= dim:
            raise ValueError(f"spatial index {index} out of range for dimension {dim}")
        e = [0] * (dim + 2)
        e[index - 1] = power
        return MPoly(dim, {tuple(e): GR_ONE})

    @staticmethod
    def tau(dim: int, power: int = 1) -> "MPoly":
        e = [0] * (dim + 2)
        e[dim] = power
        return MPoly(dim, {tuple(e): GR_ONE})

    @staticmethod
    def pi_symbol(dim: int, power: int = 1) -> "MPoly":
        e = [0] * (dim + 2)
        e[dim + 1] = power
        return MPoly(dim, {tuple(e): GR_ONE})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def _check(self, other: "MPoly"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __neg__(self):
        return MPoly(self.dim, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, GR_ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MPoly.__new__(MPoly)
        p.dim = self.dim
        p.terms = out
        return p

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Exponent, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = MPoly.__new__(MPoly)
        p.dim = self.dim
        p.terms = out
        return p

    def scale(self, c) -> "MPoly":
        c = GaussianRational.of(c)
        if not c:
            return MPoly.zero(self.dim)
        return MPoly(self.dim, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.one(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure queries ---------------------------------------------------

    def total_degree(self):
        """Maximum over terms of the spatial-plus-time exponent sum; the pi
        exponent is excluded (pi is a constant symbol, not a derivative).
        Returns -inf for the zero polynomial."""
        if not self.terms:
            return -math.inf
        d = self.dim
        return max(sum(e[:d]) + e[d] for e in self.terms)

    def tau_degree(self) -> int:
        if not self.terms:
            return -1
        return max(e[self.dim] for e in self.terms)

    def tau_coefficient(self, k: int) -> "MPoly":
        """Coefficient of the k-th time power, as a polynomial with zero
        time exponent."""
        d = self.dim
        out = {}
        for e, c in self.terms.items():
            if e[d] == k:
                out[e[:d] + (0,) + e[d + 1 :]] = c
        return MPoly(self.dim, out)

    def has_spatial(self) -> bool:
        d = self.dim
        return any(any(e[k] for k in range(d)) for e in self.terms)

    def is_constant(self) -> bool:
        """Free of every variable including the pi symbol."""
        return all(not any(e) for e in self.terms)

    def spatial_zeroed(self) -> "MPoly":
        """The polynomial with every spatial variable set to zero."""
        d = self.dim
        out = {e: c for e, c in self.terms.items() if not any(e[:d])}
        return MPoly(self.dim, out)

    # -- leading-term machinery (graded lex over the full exponent) ---------

    @staticmethod
    def _order_key(e: Exponent):
        return (sum(e), e)

    def leading(self) -> Tuple[Exponent, GaussianRational]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=MPoly._order_key)
        return e, self.terms[e]

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Exact quotient self / other; raises ArithmeticError when the
        division is not exact."""
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quot: Dict[Exponent, GaussianRational] = {}
        le, lco = other.leading()
        while rem.terms:
            re, rc = rem.leading()
            qe = tuple(a - b for a, b in zip(re, le))
            if any(k < 0 for k in qe):
                raise ArithmeticError("inexact multivariate division")
            qc = rc / lco
            quot[qe] = qc
            rem = rem - other * MPoly(self.dim, {qe: qc})
        return MPoly(self.dim, quot)

    # -- substitutions -------------------------------------------------------

    def substitute_mode(self, v: Sequence) -> UPoly:
        """Replace each spatial variable x_k by 2*i*pi*v_k and collect the
        result as a polynomial in the time symbol over the pi-rational field.

        v must have exactly dim exact-rational entries."""
        d = self.dim
        vs = [Fraction(x) if not isinstance(x, Fraction) else x for x in v]
        if len(vs) != d:
            raise ValueError(f"mode vector has {len(vs)} entries, expected {d}")
        # per time-degree, a dense list of Gaussian coefficients by pi-power
        acc: Dict[int, Dict[int, GaussianRational]] = {}
        two_i = GaussianRational(0, 2)
        for e, c in self.terms.items():
            coeff = c
            pi_power = e[d + 1]
            skip = False
            for k in range(d):
                ek = e[k]
                if ek:
                    factor = (two_i * vs[k]) ** ek
                    if not factor:
                        skip = True
                        break
                    coeff = coeff * factor
                    pi_power += ek
            if skip:
                continue
            row = acc.setdefault(e[d], {})
            s = row.get(pi_power, GR_ZERO) + coeff
            if s:
                row[pi_power] = s
            else:
                row.pop(pi_power, None)
        if not acc:
            return UPoly.zero()
        deg = max(acc)
        coeffs = []
        for k in range(deg + 1):
            row = acc.get(k)
            if not row:
                coeffs.append(PiScalar.zero())
                continue
            top = max(row)
            qp = QiPoly([row.get(j, GR_ZERO) for j in range(top + 1)])
            coeffs.append(PiScalar(qp))
        return UPoly(coeffs)

    def evaluate(self, xs: Sequence[complex], t: complex, pi_val=None) -> complex:
        pv = math.pi if pi_val is None else pi_val
        d = self.dim
        if len(xs) != d:
            raise ValueError("wrong number of spatial values")
        acc = 0j
        for e, c in self.terms.items():
            term = c.as_complex()
            for k in range(d):
                if e[k]:
                    term *= xs[k] ** e[k]
            if e[d]:
                term *= t ** e[d]
            if e[d + 1]:
                term *= pv ** e[d + 1]
            acc += term
        return acc

    # -- printing ------------------------------------------------------------

    def to_string(self) -> str:
        """Canonical rendering; parsing it back yields an equal polynomial."""
        if not self.terms:
            return "0"
        units = []  # (exponent, rational magnitude, negative?, imaginary?)
        for e in sorted(self.terms, key=MPoly._order_key, reverse=True):
            c = self.terms[e]
            if c.re:
                units.append((e, abs(c.re), c.re < 0, False))
            if c.im:
                units.append((e, abs(c.im), c.im < 0, True))
        parts = []
        for idx, (e, mag, neg, imag) in enumerate(units):
            factors = []
            if mag != 1 or (not imag and not any(e)):
                factors.append(str(mag))
            if imag:
                factors.append("i")
            for k in range(self.dim):
                if e[k]:
                    factors.append(f"x{k + 1}" + (f"^{e[k]}" if e[k] > 1 else ""))
            if e[self.dim]:
                factors.append("t" + (f"^{e[self.dim]}" if e[self.dim] > 1 else ""))
            if e[self.dim + 1]:
                factors.append("pi" + (f"^{e[self.dim + 1]}" if e[self.dim + 1] > 1 else ""))
            body = "*".join(factors) if factors else "1"
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MPoly(d={self.dim}, {self.to_string()!r})"


def substitute_mode(p: MPoly, v: Sequence) -> UPoly:
    return p.substitute_mode(v)


def total_degree(p: MPoly):
    return p.total_degree()


def piscalar_to_mpoly(s: PiScalar, dim: int) -> MPoly:
    """Embed a denominator-free pi-scalar as a polynomial in the pi symbol."""
    if s.den.degree > 0:
        raise ValueError("scalar has a nontrivial pi denominator")
    out = MPoly.zero(dim)
    for k, c in enumerate(s.num.coeffs):
        if c:
            out = out + MPoly.pi_symbol(dim, k).scale(c)
    return out


def upoly_as_mpoly(u: UPoly, dim: int, tau_value: MPoly | None = None) -> MPoly:
    """Expand a univariate polynomial into the multivariate ring, optionally
    substituting an arbitrary polynomial for the variable (Horner)."""
    target = MPoly.tau(dim) if tau_value is None else tau_value
    acc = MPoly.zero(dim)
    for c in reversed(u.coeffs):
        acc = acc * target + piscalar_to_mpoly(c, dim)
    return acc
