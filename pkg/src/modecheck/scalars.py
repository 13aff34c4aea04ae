"""Exact scalars: Gaussian rationals and rational functions of the pi symbol.

Every decision made downstream (generic ranks, GCD degrees, rank-drop loci)
reduces to zero tests over these scalars.  The constant pi is kept as a
formal symbol rather than a float: pi is transcendental over the rationals,
so a nonzero rational function of the symbol cannot vanish when pi takes its
numeric value, and the symbolic answers coincide with the complex-number
ground truth.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @staticmethod
    def of(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm_sq()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        c = o.conjugate()
        return GaussianRational(
            (self.re * c.re - self.im * c.im) / n,
            (self.re * c.im + self.im * c.re) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GR_ONE / self) ** (-n)
        result = GR_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def as_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        return f"({self.re}{sign}{imag})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


class QiPoly:
    """Dense univariate polynomial over the Gaussian rationals.

    Serves three roles: the pi symbol inside :class:`PiScalar`, scratch
    univariate arithmetic for rational-root hunting, and the exact rational
    recurrences behind the smooth cutoff.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, GaussianRational) else GaussianRational.of(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def of(x) -> "QiPoly":
        if isinstance(x, QiPoly):
            return x
        if isinstance(x, (int, Fraction, GaussianRational)):
            return QiPoly((GaussianRational.of(x),))
        raise TypeError(f"cannot coerce {x!r} to QiPoly")

    @staticmethod
    def zero() -> "QiPoly":
        return QIP_ZERO

    @staticmethod
    def one() -> "QiPoly":
        return QIP_ONE

    @staticmethod
    def x(power: int = 1, coeff=1) -> "QiPoly":
        return QiPoly((GR_ZERO,) * power + (GaussianRational.of(coeff),))

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return QiPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, QiPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return QiPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QiPoly):
            return NotImplemented
        if not self or not other:
            return QIP_ZERO
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return QiPoly(out)

    def scale(self, c) -> "QiPoly":
        c = GaussianRational.of(c)
        if not c:
            return QIP_ZERO
        return QiPoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int):
        result = QIP_ONE
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
            return QIP_ZERO, self
        quot = [GR_ZERO] * (dq + 1)
        inv_lc = GR_ONE / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return QiPoly(quot), QiPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "QiPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "QiPoly":
        if not self:
            return self
        if self.lc == GR_ONE:
            return self
        return self.scale(GR_ONE / self.lc)

    @staticmethod
    def gcd(a: "QiPoly", b: "QiPoly") -> "QiPoly":
        """Monic greatest common divisor.

        Runs a primitive pseudo-remainder sequence over the Gaussian
        integers (plain big-int arithmetic, content stripped every step);
        fraction-based Euclid explodes on inputs of even moderate size."""
        if not a:
            return b.monic()
        if not b:
            return a.monic()
        A = _gip_primitive(_gip_from_qipoly(a))
        B = _gip_primitive(_gip_from_qipoly(b))
        if len(A) < len(B):
            A, B = B, A
        while B:
            R = _gip_primitive(_gip_prem(A, B))
            A, B = B, R
        return QiPoly(
            [GaussianRational(Fraction(r), Fraction(i)) for r, i in A]
        ).monic()

    @staticmethod
    def lcm(a: "QiPoly", b: "QiPoly") -> "QiPoly":
        if not a or not b:
            return QIP_ZERO
        return (a * b).exact_div(QiPoly.gcd(a, b)).monic()

    def derivative(self) -> "QiPoly":
        return QiPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def evaluate(self, z) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c.as_complex()
        return acc

    def evaluate_exact(self, x) -> GaussianRational:
        acc = GR_ZERO
        x = GaussianRational.of(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"QiPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_qipoly(self, "pi")


QIP_ZERO = QiPoly(())
QIP_ONE = QiPoly((GR_ONE,))


# -- Gaussian-integer polynomial helpers for the GCD fast path --------------
# Coefficients are (re, im) tuples of Python ints.


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gip_from_qipoly(p: "QiPoly"):
    lcm = 1
    for c in p.coeffs:
        for f in (c.re, c.im):
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    return [(int(c.re * lcm), int(c.im * lcm)) for c in p.coeffs]


def _gip_strip(p):
    while p and p[-1] == (0, 0):
        p.pop()
    return p


def _gip_primitive(p):
    # rational integer content only: cheap on huge ints, and exact common
    # factors are all a primitive remainder sequence needs
    p = _gip_strip(list(p))
    if not p:
        return p
    g = 0
    for c in p:
        g = math.gcd(g, c[0], c[1])
        if g == 1:
            return p
    if g <= 1:
        return p
    return [(c[0] // g, c[1] // g) for c in p]


def _gip_prem(a, b):
    """Pseudo-remainder over the Gaussian integers; returned only up to a
    scalar factor, which is all a primitive remainder sequence needs."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        r = [_gi_mul(c, lb) for c in r[:-1]]
        for j in range(db):
            r[dr - db + j] = _gi_sub(r[dr - db + j], _gi_mul(lr, b[j]))
        r = _gip_strip(r)
    return r


def format_qipoly(p: QiPoly, var: str) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            head = "" if c == GR_ONE else f"{c}*"
            tail = var if k == 1 else f"{var}^{k}"
            parts.append(head + tail)
    return " + ".join(parts)


class PiScalar:
    """Element of the field of rational functions of the pi symbol.

    Canonical form: the denominator is monic and coprime to the numerator,
    so equality is plain structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = QiPoly.of(num)
        den = QIP_ONE if den is None else QiPoly.of(den)
        if not den:
            raise ZeroDivisionError("pi-scalar with zero denominator")
        if not num:
            self.num = QIP_ZERO
            self.den = QIP_ONE
            return
        if den is not QIP_ONE and den.degree > 0:
            g = QiPoly.gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        c = den.lc
        if c != GR_ONE:
            inv = GR_ONE / c
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @staticmethod
    def of(x) -> "PiScalar":
        if isinstance(x, PiScalar):
            return x
        if isinstance(x, (int, Fraction, GaussianRational, QiPoly)):
            return PiScalar(QiPoly.of(x))
        raise TypeError(f"cannot coerce {x!r} to PiScalar")

    @staticmethod
    def zero() -> "PiScalar":
        return PS_ZERO

    @staticmethod
    def one() -> "PiScalar":
        return PS_ONE

    @staticmethod
    def pi(power: int = 1, coeff=1) -> "PiScalar":
        return PiScalar(QiPoly.x(power, coeff))

    def __bool__(self):
        return bool(self.num)

    @property
    def is_one(self) -> bool:
        return self.num == QIP_ONE and self.den == QIP_ONE

    @property
    def is_rational_constant(self) -> bool:
        return self.den == QIP_ONE and self.num.degree <= 0

    def constant_value(self) -> GaussianRational:
        if not self.is_rational_constant:
            raise ValueError("not a constant scalar")
        return self.num.coeffs[0] if self.num else GR_ZERO

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = PiScalar.of(other)
        if not isinstance(other, PiScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = object.__new__(PiScalar)
        out.num = -self.num
        out.den = self.den
        return out

    def _coerce(self, other):
        if isinstance(other, PiScalar):
            return other
        if isinstance(other, (int, Fraction, GaussianRational, QiPoly)):
            return PiScalar.of(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == QIP_ONE and o.den == QIP_ONE:
            out = object.__new__(PiScalar)
            out.num = self.num + o.num
            out.den = QIP_ONE
            return out
        return PiScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    @staticmethod
    def _cross(n1: QiPoly, d2: QiPoly):
        # reduce num/den pairs before multiplying; keeps gcd inputs small
        if d2.degree > 0 and n1.degree >= 0:
            g = QiPoly.gcd(n1, d2)
            if g.degree > 0:
                return n1.exact_div(g), d2.exact_div(g)
        return n1, d2

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == QIP_ONE and o.den == QIP_ONE:
            out = object.__new__(PiScalar)
            out.num = self.num * o.num
            out.den = QIP_ONE
            return out
        if not self.num or not o.num:
            return PS_ZERO
        n1, d2 = PiScalar._cross(self.num, o.den)
        n2, d1 = PiScalar._cross(o.num, self.den)
        return PiScalar(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero pi-scalar")
        if not self.num:
            return PS_ZERO
        n1, n2 = PiScalar._cross(self.num, o.num)
        d1, d2 = PiScalar._cross(self.den, o.den)
        return PiScalar(n1 * d2, d1 * n2)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return PS_ONE / (self ** (-n))
        result = PS_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "PiScalar":
        return PS_ONE / self

    def evaluate(self, pi_val=math.pi) -> complex:
        return self.num.evaluate(pi_val) / self.den.evaluate(pi_val)

    def __repr__(self):
        return f"PiScalar({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == QIP_ONE:
            return format_qipoly(self.num, "pi")
        return f"({format_qipoly(self.num, 'pi')})/({format_qipoly(self.den, 'pi')})"


PS_ZERO = PiScalar(QIP_ZERO)
PS_ONE = PiScalar(QIP_ONE)
