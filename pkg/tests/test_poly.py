import math
from fractions import Fraction

import pytest

from modecheck.mpoly import MPoly, substitute_mode, total_degree
from modecheck.parsing import parse_poly
from modecheck.scalars import GaussianRational, PiScalar, QiPoly
from modecheck.upoly import UPoly

from conftest import rand_fraction, rand_mpoly


def test_ring_axioms_randomized(rng):
    """Associativity, commutativity, distributivity on 1000+ random triples."""
    for _ in range(1050):
        dim = rng.choice([1, 2])
        p = rand_mpoly(rng, dim, max_terms=4, max_exp=4)
        q = rand_mpoly(rng, dim, max_terms=4, max_exp=4)
        r = rand_mpoly(rng, dim, max_terms=4, max_exp=4)
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_no_zero_coefficients_stored(rng):
    for _ in range(100):
        p = rand_mpoly(rng, 2, max_terms=5, max_exp=3)
        q = rand_mpoly(rng, 2, max_terms=5, max_exp=3)
        for poly in (p + q, p - q, p * q, p - p):
            assert all(c for c in poly.terms.values())


def test_total_degree_examples():
    assert total_degree(parse_poly("t - x1^2 - x2^2", 2)) == 2
    assert total_degree(MPoly.zero(1)) == -math.inf
    assert total_degree(parse_poly("x1^3*t^2 + x2", 2)) == 5
    # pi exponent excluded from the degree
    assert total_degree(parse_poly("pi^5*t", 1)) == 1
    assert total_degree(parse_poly("pi^5", 1)) == 0


def test_substitute_mode_diffusion():
    p = parse_poly("t - x1^2 - x2^2", 2)
    u = substitute_mode(p, [Fraction(1), Fraction(0)])
    expected = UPoly([PiScalar.pi(2, 4), PiScalar.one()])  # t + 4 pi^2
    assert u == expected


def test_substitute_mode_trivial_and_derived():
    assert substitute_mode(parse_poly("t", 1), [Fraction(5)]) == UPoly.tau()
    # x1*t + x2 at v = (1/2, 3): (i pi) t + 6 i pi
    p = parse_poly("x1*t + x2", 2)
    u = substitute_mode(p, [Fraction(1, 2), Fraction(3)])
    i = GaussianRational(0, 1)
    expected = UPoly(
        [PiScalar(QiPoly([0, i * 6])), PiScalar(QiPoly([0, i]))]
    )
    assert u == expected


def test_substitute_mode_dimension_mismatch():
    with pytest.raises(ValueError):
        substitute_mode(parse_poly("t", 2), [Fraction(1)])


def test_substitute_mode_is_ring_homomorphism(rng):
    for _ in range(150):
        dim = rng.choice([1, 2])
        p = rand_mpoly(rng, dim, max_terms=3, max_exp=2, allow_pi=True)
        q = rand_mpoly(rng, dim, max_terms=3, max_exp=2, allow_pi=True)
        v = [rand_fraction(rng) for _ in range(dim)]
        assert substitute_mode(p * q, v) == substitute_mode(p, v) * substitute_mode(q, v)
        assert substitute_mode(p + q, v) == substitute_mode(p, v) + substitute_mode(q, v)


def _close(x, y, tol=1e-9):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def test_numeric_embedding_of_operations(rng):
    """Exact ops evaluated at pi = math.pi match float computation."""
    for _ in range(120):
        dim = rng.choice([1, 2])
        p = rand_mpoly(rng, dim, max_terms=4, max_exp=3, allow_pi=True)
        q = rand_mpoly(rng, dim, max_terms=4, max_exp=3, allow_pi=True)
        for _ in range(20):
            xs = [complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)) for _ in range(dim)]
            t = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
            fp, fq = p.evaluate(xs, t), q.evaluate(xs, t)
            assert _close((p * q).evaluate(xs, t), fp * fq)
            assert _close((p + q).evaluate(xs, t), fp + fq)


def test_substitution_numeric_spot_check(rng):
    """Evaluating the substituted polynomial agrees with evaluating the
    original at the complex frequency."""
    for _ in range(100):
        dim = rng.choice([1, 2])
        p = rand_mpoly(rng, dim, max_terms=4, max_exp=3, allow_pi=True)
        v = [rand_fraction(rng) for _ in range(dim)]
        u = substitute_mode(p, v)
        for _ in range(5):
            t0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            xs = [2j * math.pi * float(vk) for vk in v]
            assert _close(u.evaluate(t0), p.evaluate(xs, t0))


def test_exact_div(rng):
    for _ in range(150):
        dim = rng.choice([1, 2])
        p = rand_mpoly(rng, dim, max_terms=3, max_exp=2, nonzero=True)
        q = rand_mpoly(rng, dim, max_terms=3, max_exp=2)
        prod = p * q
        if prod:
            assert prod.exact_div(p) == q


def test_exact_div_inexact_raises():
    p = parse_poly("x1^2 + 1", 1)
    q = parse_poly("x1 + 1", 1)
    with pytest.raises(ArithmeticError):
        p.exact_div(q)


def test_spatial_zeroed():
    p = parse_poly("t - x1^2 - x2^2", 2)
    assert p.spatial_zeroed() == MPoly.tau(2)
    assert parse_poly("x1", 1).spatial_zeroed() == MPoly.zero(1)
