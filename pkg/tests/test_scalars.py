import math
from fractions import Fraction

import pytest

from modecheck.scalars import (
    GR_I,
    GR_ONE,
    GaussianRational,
    PiScalar,
    QiPoly,
)

from conftest import rand_gaussian, rand_piscalar, rand_qipoly


def test_gaussian_basics():
    a = GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    b = GaussianRational(2, 1)
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(1, 4))
    assert a * GR_I == GaussianRational(Fraction(3, 4), Fraction(1, 2))
    assert (a / a) == GR_ONE
    assert GR_I * GR_I == GaussianRational(-1)
    assert (a - a) == GaussianRational(0)
    assert not GaussianRational(0)


def test_gaussian_lowest_terms():
    g = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert g.re.denominator == 2 and g.re.numerator == 1
    assert g.im.denominator == 4 and g.im.numerator == -3
    assert g.re.denominator > 0 and g.im.denominator > 0


def test_gaussian_division_exact(rng):
    for _ in range(300):
        a = rand_gaussian(rng)
        b = rand_gaussian(rng)
        if not b:
            continue
        q = a / b
        assert q * b == a


def test_qipoly_divmod(rng):
    for _ in range(200):
        a = rand_qipoly(rng, 4)
        b = rand_qipoly(rng, 2)
        if not b:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree or not r


def test_qipoly_gcd_properties(rng):
    for _ in range(150):
        a = rand_qipoly(rng, 3)
        b = rand_qipoly(rng, 3)
        h = rand_qipoly(rng, 2)
        if not (a and b and h):
            continue
        g = QiPoly.gcd(a * h, b * h)
        gh = QiPoly.gcd(a, b) * h
        assert not (g % gh.monic()) and not (gh.monic() % g)


def test_piscalar_normalization():
    # (pi^2 - 1) / (pi - 1) reduces to pi + 1
    num = QiPoly([-1, 0, 1])
    den = QiPoly([-1, 1])
    s = PiScalar(num, den)
    assert s.den == QiPoly.one()
    assert s.num == QiPoly([1, 1])
    # denominator made monic
    s2 = PiScalar(QiPoly([1]), QiPoly([0, 2]))
    assert s2.den == QiPoly([0, 1])
    assert s2.num == QiPoly([Fraction(1, 2)])


def test_piscalar_equality_cross_multiplication(rng):
    for _ in range(200):
        a = rand_piscalar(rng, fraction_prob=0.6)
        b = rand_piscalar(rng, fraction_prob=0.6)
        lhs = a == b
        rhs = a.num * b.den == b.num * a.den
        assert lhs == rhs


def test_piscalar_field_ops(rng):
    for _ in range(200):
        a = rand_piscalar(rng, fraction_prob=0.4)
        b = rand_piscalar(rng, fraction_prob=0.4)
        c = rand_piscalar(rng, fraction_prob=0.4)
        assert (a + b) * c == a * c + b * c
        if b:
            assert (a / b) * b == a


def _close(x, y, tol=1e-9):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def test_piscalar_numeric_embedding(rng):
    """Exact arithmetic matches float arithmetic at pi = math.pi."""
    for _ in range(300):
        a = rand_piscalar(rng, fraction_prob=0.3)
        b = rand_piscalar(rng, fraction_prob=0.3)
        fa, fb = a.evaluate(), b.evaluate()
        assert _close((a + b).evaluate(), fa + fb)
        assert _close((a * b).evaluate(), fa * fb)
        if b and abs(fb) > 1e-6:
            assert _close((a / b).evaluate(), fa / fb)


def test_piscalar_nonzero_never_evaluates_to_zero(rng):
    # transcendence in practice: nonzero scalars stay well away from zero
    for _ in range(200):
        s = rand_piscalar(rng, fraction_prob=0.3)
        if s:
            assert abs(s.evaluate()) > 1e-12


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        PiScalar(QiPoly.one(), QiPoly.zero())
    with pytest.raises(ZeroDivisionError):
        PiScalar.one() / PiScalar.zero()
