import math

import numpy as np
import pytest

from modecheck.config import ToolConfig
from modecheck.errors import MinorLimitExceeded
from modecheck.matrices import (
    UPolyMatrix,
    bareiss_determinant,
    generic_rank,
    image_representation,
    minors,
    nullspace_vector,
    rank_constancy,
)
from modecheck.scalars import PiScalar
from modecheck.upoly import UPoly

from conftest import rand_upoly_matrix
from oracles import brute_rank, cofactor_det, svd_rank


def _pi2_plus_t():
    return UPoly([PiScalar.pi(2, 4), PiScalar.one()])


def M(rows):
    return UPolyMatrix(rows)


def test_minors_examples():
    t = UPoly.tau()
    one = UPoly.one()
    assert minors(M([[_pi2_plus_t()]]), 1) == [_pi2_plus_t()]
    assert minors(UPolyMatrix.identity(2), 2) == [one]
    # [[t, 1], [t^2, t]] has zero determinant
    assert minors(M([[t, one], [t * t, t]]), 2) == [UPoly.zero()]


def test_minors_k_out_of_range():
    with pytest.raises(ValueError):
        minors(UPolyMatrix.identity(2), 3)
    with pytest.raises(ValueError):
        minors(UPolyMatrix.identity(2), 0)


def test_minor_enumeration_cap():
    big = UPolyMatrix.identity(4)
    with pytest.raises(MinorLimitExceeded):
        minors(big, 1, ToolConfig(minor_limit=3))


def test_generic_rank_examples():
    t = UPoly.tau()
    assert generic_rank(M([[_pi2_plus_t()]])) == 1
    assert generic_rank(UPolyMatrix.zero(3, 2)) == 0
    assert generic_rank(M([[t, UPoly.of_scalar(PiScalar.pi(1, -2))]])) == 1


def test_generic_rank_against_brute_force(rng):
    for _ in range(120):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = rand_upoly_matrix(rng, m, n, maxdeg=3)
        assert generic_rank(A) == brute_rank(A)


def test_generic_rank_against_svd_samples(rng):
    for _ in range(40):
        A = rand_upoly_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), maxdeg=2)
        r = generic_rank(A)
        rc = rank_constancy(A)
        slack = rc.gcd.degree() if r else 0
        bad = 0
        for _ in range(50):
            t0 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if svd_rank(A.evaluate(t0)) != r:
                bad += 1
        assert bad <= slack


def test_bareiss_det_matches_cofactor(rng):
    for _ in range(100):
        k = rng.randint(1, 4)
        A = rand_upoly_matrix(rng, k, k, maxdeg=2)
        assert bareiss_determinant(A.entries) == cofactor_det([list(r) for r in A.entries])


def test_rank_constancy_examples():
    t = UPoly.tau()
    one = UPoly.one()
    rc = rank_constancy(M([[_pi2_plus_t()]]))
    assert rc.generic_rank == 1 and rc.gcd == _pi2_plus_t() and not rc.constant
    rc = rank_constancy(M([[t, one]]))
    assert rc.generic_rank == 1 and rc.gcd == one and rc.constant
    rc = rank_constancy(M([[t, UPoly.zero()], [UPoly.zero(), t - one]]))
    assert rc.generic_rank == 2
    assert rc.gcd == t * t - t
    assert not rc.constant


def test_rank_constancy_rank_zero():
    rc = rank_constancy(UPolyMatrix.zero(2, 3))
    assert rc.generic_rank == 0 and rc.constant


def test_rank_constancy_matches_sampled_ranks(rng):
    """constant == True iff the numeric rank equals r at every probe."""
    for _ in range(40):
        A = rand_upoly_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), maxdeg=2)
        rc = rank_constancy(A)
        if not rc.constant:
            # some complex t drops the rank: any root of the gcd does
            roots = np.roots([c.evaluate() for c in reversed(rc.gcd.coeffs)])
            drops = [svd_rank(A.evaluate(complex(z))) < rc.generic_rank for z in roots]
            assert any(drops)
        else:
            for _ in range(10):
                t0 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
                assert svd_rank(A.evaluate(t0)) == rc.generic_rank


def test_nullspace_examples():
    t = UPoly.tau()
    one = UPoly.one()
    k = nullspace_vector(M([[t, one]]))
    assert k == [one, -t]
    assert nullspace_vector(UPolyMatrix.identity(2)) is None
    assert nullspace_vector(M([[_pi2_plus_t()]])) is None
    k = nullspace_vector(UPolyMatrix.zero(1, 1))
    assert k == [one]


def test_nullspace_identity_property(rng):
    found = 0
    for _ in range(150):
        A = rand_upoly_matrix(rng, rng.randint(1, 3), rng.randint(1, 4), maxdeg=2)
        k = nullspace_vector(A)
        if generic_rank(A) < A.cols:
            assert k is not None
            assert any(p for p in k)
            assert all(not e for e in A.apply_vector(k))
            found += 1
        else:
            assert k is None
    assert found > 20


def test_image_representation_examples():
    t = UPoly.tau()
    one = UPoly.one()
    N = image_representation(M([[t, one]]))
    assert N.cols == 1
    assert [N.entries[0][0], N.entries[1][0]] == [one, -t]
    assert image_representation(M([[_pi2_plus_t()]])) is None
    N = image_representation(UPolyMatrix.zero(1, 2))
    assert N == UPolyMatrix.identity(2)


def test_image_representation_properties(rng):
    hits = 0
    for _ in range(150):
        A = rand_upoly_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), maxdeg=2)
        rc = rank_constancy(A)
        N = image_representation(A)
        if not rc.constant:
            assert N is None
            continue
        hits += 1
        assert N.cols == A.cols - rc.generic_rank
        assert A.matmul(N).is_zero()
        if N.cols:
            assert generic_rank(N) == N.cols
    assert hits > 20
