import pytest
from hypothesis import given, strategies as st

from modecheck.errors import ParseError
from modecheck.mpoly import MPoly
from modecheck.parsing import parse_poly
from modecheck.scalars import GR_I, GaussianRational

from conftest import rand_mpoly
from oracles import naive_term_product


def test_diffusion_polynomial():
    p = parse_poly("t - x1^2 - x2^2", 2)
    expected = MPoly.tau(2) - MPoly.spatial(2, 1, 2) - MPoly.spatial(2, 2, 2)
    assert p == expected


def test_zero_polynomial():
    assert parse_poly("0", 1) == MPoly.zero(1)
    assert parse_poly("0", 1).to_string() == "0"


def test_square_of_binomial_against_term_product_oracle():
    # (x1 + i*t)^2 expanded by an independent dict-convolution
    p = parse_poly("(x1+i*t)^2", 1)
    x1 = {(1, 0, 0): GaussianRational(1)}
    it = {(0, 1, 0): GR_I}
    base = dict(x1)
    for e, c in it.items():
        base[e] = c
    sq = naive_term_product(base, base)
    assert p == MPoly(1, sq)
    # and the same thing by hand: x1^2 + 2i x1 t - t^2
    byhand = (
        MPoly.spatial(1, 1, 2)
        + (MPoly.spatial(1, 1) * MPoly.tau(1)).scale(GaussianRational(0, 2))
        - MPoly.tau(1, 2)
    )
    assert p == byhand


def test_rationals_pi_and_precedence():
    p = parse_poly("3/4*pi^2*t + 2", 1)
    expected = (MPoly.pi_symbol(1, 2) * MPoly.tau(1)).scale(
        GaussianRational("3/4")
    ) + MPoly.constant(1, 2)
    assert p == expected
    # '^' binds tighter than '*', '*' tighter than '+'
    assert parse_poly("2*x1^2", 1) == MPoly.spatial(1, 1, 2).scale(2)
    assert parse_poly("2^3", 1) == MPoly.constant(1, 8)


def test_whitespace_insignificant():
    assert parse_poly("t-x1^2", 1) == parse_poly("  t -  x1 ^ 2 ", 1)


def test_leading_sign():
    assert parse_poly("-t", 1) == -MPoly.tau(1)
    assert parse_poly("+t", 1) == MPoly.tau(1)


def test_syntax_error_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("t + ", 1)
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_poly("t )", 1)
    assert err.value.position == 2
    with pytest.raises(ParseError):
        parse_poly("", 1)
    with pytest.raises(ParseError):
        parse_poly("t t", 1)  # missing operator


def test_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable"):
        parse_poly("x3", 2)
    with pytest.raises(ParseError, match="unknown variable"):
        parse_poly("y + t", 1)
    with pytest.raises(ParseError, match="unknown variable"):
        parse_poly("x0", 1)


def test_exponent_must_be_literal():
    with pytest.raises(ParseError, match="exponent"):
        parse_poly("x1^(2)", 1)
    with pytest.raises(ParseError, match="exponent"):
        parse_poly("x1^-2", 1)
    with pytest.raises(ParseError, match="exponent"):
        parse_poly("x1^t", 1)


def test_zero_denominator_literal():
    with pytest.raises(ParseError, match="denominator"):
        parse_poly("1/0", 1)


def test_division_is_not_an_operator():
    with pytest.raises(ParseError):
        parse_poly("x1/2", 1)


def test_print_parse_fixpoint(rng):
    for _ in range(300):
        dim = rng.choice([1, 2, 3])
        p = rand_mpoly(rng, dim, max_terms=5, max_exp=3, allow_pi=True)
        s = p.to_string()
        q = parse_poly(s, dim)
        assert q == p, f"round trip failed for {s!r}"
        assert q.to_string() == s


@given(st.integers(min_value=-40, max_value=40), st.integers(min_value=1, max_value=6))
def test_constant_round_trip(num, den):
    from fractions import Fraction

    p = MPoly.constant(1, Fraction(num, den))
    assert parse_poly(p.to_string(), 1) == p
