"""Univariate polynomials in the time symbol over the exact scalar field.

The same dense representation is reused for any single variable over the
pi-rational field (the mode analysis needs it for the time symbol, the
one-dimensional elimination reuses it for the spatial symbol).

Two GCD routes ship side by side: the production path clears denominators
and runs a subresultant remainder sequence over pi-polynomial coefficients
(controls coefficient growth), while ``upoly_gcd_euclid`` is a naive
fraction-arithmetic Euclidean algorithm retained as an independent
cross-check.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import GR_ONE, QIP_ONE, QIP_ZERO, PiScalar, QiPoly, PS_ONE, PS_ZERO


class UPoly:
    """Dense polynomial in one variable with PiScalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, PiScalar) else PiScalar.of(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "UPoly":
        return UP_ZERO

    @staticmethod
    def one() -> "UPoly":
        return UP_ONE

    @staticmethod
    def of_scalar(s) -> "UPoly":
        return UPoly((PiScalar.of(s),))

    @staticmethod
    def tau(power: int = 1, coeff=1) -> "UPoly":
        return UPoly((PS_ZERO,) * power + (PiScalar.of(coeff),))

    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> PiScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        if not self or not other:
            return UP_ZERO
        out = [PS_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def scale(self, c) -> "UPoly":
        c = PiScalar.of(c)
        if not c:
            return UP_ZERO
        return UPoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int):
        result = UP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UP_ZERO, self
        quot = [PS_ZERO] * (dq + 1)
        inv_lc = PS_ONE / other.lc
        db = other.degree()
        for k in range(dq, -1, -1):
            c = rem[k + db] * inv_lc
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "UPoly") -> bool:
        if not self:
            return not other
        return not (other % self)

    def monic(self) -> "UPoly":
        if not self or self.lc.is_one:
            return self
        return self.scale(PS_ONE / self.lc)

    def evaluate(self, t, pi_val=None) -> complex:
        import math

        pv = math.pi if pi_val is None else pi_val
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * t + c.evaluate(pv)
        return acc

    def numeric_coeffs(self, pi_val=None) -> list:
        import math

        pv = math.pi if pi_val is None else pi_val
        return [c.evaluate(pv) for c in self.coeffs]

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_upoly(self, "t")


UP_ZERO = UPoly(())
UP_ONE = UPoly((PS_ONE,))


def format_upoly(p: UPoly, var: str) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        cs = str(c)
        atomic = c.den == QIP_ONE and sum(1 for a in c.num.coeffs if a) == 1
        if k == 0:
            parts.append(cs if atomic else f"({cs})")
            continue
        tail = var if k == 1 else f"{var}^{k}"
        if c.is_one:
            parts.append(tail)
        elif atomic:
            parts.append(f"{cs}*{tail}")
        else:
            parts.append(f"({cs})*{tail}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# GCD over the pi-rational coefficient field
# ---------------------------------------------------------------------------


def _cleared(f: UPoly) -> list[QiPoly]:
    """Coefficients of f scaled by the lcm of their denominators."""
    den = QIP_ONE
    for c in f.coeffs:
        if c and c.den != QIP_ONE:
            den = QiPoly.lcm(den, c.den)
    out = []
    for c in f.coeffs:
        if not c:
            out.append(QIP_ZERO)
        else:
            out.append(c.num * den.exact_div(c.den))
    return out

def _content(cs: Sequence[QiPoly]) -> QiPoly:
    g = QIP_ZERO
    for c in cs:
        if c:
            g = QiPoly.gcd(g, c) if g else c.monic()
            if g.degree == 0:
                return QIP_ONE
    return g


def _primitive(cs: Sequence[QiPoly]) -> list[QiPoly]:
    g = _content(cs)
    if g.degree <= 0:
        return list(cs)
    return [c.exact_div(g) if c else QIP_ZERO for c in cs]


def _strip(cs: Sequence[QiPoly]) -> list[QiPoly]:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _prem(a: list[QiPoly], b: list[QiPoly]) -> list[QiPoly]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the
    pi-polynomial ring.  The full power of lc(b) is restored even when the
    degree drops by more than one per elimination step."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    steps = da - db + 1
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r[:-1]]
        for j in range(db):
            r[dr - db + j] = r[dr - db + j] - lr * b[j]
        r = _strip(r)
        steps -= 1
    if steps > 0 and r:
        f = lb**steps
        r = [c * f for c in r]
    return r


def _subresultant_pair(a: list[QiPoly], b: list[QiPoly]) -> list[QiPoly]:
    """Primitive GCD of two primitive pi-polynomial-coefficient polynomials
    via the subresultant remainder sequence (Collins' g, h bookkeeping)."""
    if len(a) < len(b):
        a, b = b, a
    g = QIP_ONE
    h = QIP_ONE
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _prem(a, b)
        if not r:
            return _primitive(b)
        if len(r) == 1:
            return [QIP_ONE]
        divisor = g * h**delta
        r = [c.exact_div(divisor) for c in r]
        a, b = b, r
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).exact_div(h ** (delta - 1))


def upoly_gcd(polys: Sequence[UPoly]) -> UPoly:
    """Monic GCD of a nonempty family over the pi-rational field.

    Subresultant remainder sequences over cleared denominators; raises
    ValueError when every input is zero.
    """
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise ValueError("gcd undefined: all inputs are zero")
    acc = _primitive(_cleared(nonzero[0]))
    for p in nonzero[1:]:
        if len(acc) == 1:
            break
        acc = _subresultant_pair(acc, _primitive(_cleared(p)))
    return UPoly([PiScalar(c) for c in acc]).monic()


def upoly_gcd_euclid(polys: Sequence[UPoly]) -> UPoly:
    """Fraction-arithmetic Euclidean GCD, kept as a cross-check oracle.

    Remainders are made monic at every step; without that the rational
    coefficients explode on inputs of even moderate degree."""
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise ValueError("gcd undefined: all inputs are zero")
    acc = nonzero[0]
    for p in nonzero[1:]:
        if acc.degree() == 0:
            break
        a, b = acc.monic(), p.monic()
        while b:
            a, b = b, (a % b).monic()
        acc = a
    return acc.monic()
