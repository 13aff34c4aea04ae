import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from modecheck.lattice import PeriodLattice
from modecheck.matrices import PolyMatrix, UPolyMatrix
from modecheck.mpoly import MPoly
from modecheck.scalars import GaussianRational, PiScalar, QiPoly
from modecheck.upoly import UPoly

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


# ---------------------------------------------------------------------------
# random exact objects
# ---------------------------------------------------------------------------


def rand_fraction(rng, span=3):
    num = rng.randint(-span, span)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def rand_gaussian(rng, span=3, allow_imag=True):
    re = rand_fraction(rng, span)
    im = rand_fraction(rng, span) if allow_imag and rng.random() < 0.4 else Fraction(0)
    return GaussianRational(re, im)


def rand_qipoly(rng, maxdeg=2, span=3):
    deg = rng.randint(0, maxdeg)
    return QiPoly([rand_gaussian(rng, span) for _ in range(deg + 1)])


def rand_piscalar(rng, maxdeg=2, fraction_prob=0.15):
    num = rand_qipoly(rng, maxdeg)
    if rng.random() < fraction_prob:
        den = rand_qipoly(rng, 1)
        if not den:
            den = QiPoly.one()
        return PiScalar(num, den)
    return PiScalar(num)


def rand_upoly(rng, maxdeg=3, allow_pi=True, nonzero=False):
    while True:
        deg = rng.randint(0, maxdeg)
        coeffs = []
        for _ in range(deg + 1):
            if rng.random() < 0.25:
                coeffs.append(PiScalar.zero())
            elif allow_pi and rng.random() < 0.3:
                coeffs.append(rand_piscalar(rng, maxdeg=2, fraction_prob=0.0))
            else:
                coeffs.append(PiScalar.of(rand_gaussian(rng)))
        p = UPoly(coeffs)
        if p or not nonzero:
            return p


def rand_mpoly(rng, dim=2, max_terms=4, max_exp=2, allow_pi=False, span=3, nonzero=False):
    while True:
        terms = {}
        for _ in range(rng.randint(0, max_terms)):
            e = [rng.randint(0, max_exp) for _ in range(dim)]
            e.append(rng.randint(0, max_exp))
            e.append(rng.randint(0, 1) if allow_pi else 0)
            c = rand_gaussian(rng, span)
            if c:
                terms[tuple(e)] = c
        p = MPoly(dim, terms)
        if p or not nonzero:
            return p


def rand_upoly_matrix(rng, m, n, maxdeg=3, allow_pi=True):
    return UPolyMatrix(
        [[rand_upoly(rng, maxdeg, allow_pi) for _ in range(n)] for _ in range(m)]
    )


def rand_poly_matrix(rng, m, n, dim=1, max_exp=2, allow_pi=False):
    return PolyMatrix(
        [
            [rand_mpoly(rng, dim, max_terms=3, max_exp=max_exp, allow_pi=allow_pi) for _ in range(n)]
            for _ in range(m)
        ]
    )


def rand_lattice(rng, d):
    while True:
        rows = [[rand_fraction(rng, 2) for _ in range(d)] for _ in range(d)]
        try:
            return PeriodLattice(rows)
        except ValueError:
            continue


def rand_unimodular_upoly(rng, size, ops=4):
    """Product of elementary operations: unit determinant over the scalars."""
    from modecheck.matrices import UPolyMatrix

    entries = [
        [UPoly.one() if i == j else UPoly.zero() for j in range(size)]
        for i in range(size)
    ]
    M = UPolyMatrix(entries)
    for _ in range(ops):
        i, j = rng.sample(range(size), 2) if size > 1 else (0, 0)
        if size == 1:
            break
        E = [
            [UPoly.one() if a == b else UPoly.zero() for b in range(size)]
            for a in range(size)
        ]
        E[i][j] = rand_upoly(rng, maxdeg=1, allow_pi=False)
        M = M.matmul(UPolyMatrix(E))
    return M
