"""Multivariate machinery behind the symbolic certificates.

Everything here treats matrix entries as polynomials in the spatial symbols,
the time symbol and the pi symbol at once: generic rank over the full
fraction field, top-order minors, time-direction GCD degrees via
pseudo-remainder sequences, Sylvester resultants, and (in one spatial
dimension) exact hunting for lattice frequencies that kill a polynomial.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Optional, Sequence

from .config import DEFAULT_CONFIG, ToolConfig
from .errors import MinorLimitExceeded
from .mpoly import MPoly
from .scalars import GR_ZERO, GaussianRational, PiScalar, QiPoly
from .upoly import UPoly, upoly_gcd

_DIVISOR_CAP = 10**12  # beyond this, integer factoring falls back to "unknown"


# ---------------------------------------------------------------------------
# fraction-free linear algebra over the multivariate ring
# ---------------------------------------------------------------------------


def mpoly_determinant(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    k = len(rows)
    if k == 0:
        raise ValueError("empty determinant")
    dim = rows[0][0].dim
    a = [list(r) for r in rows]
    sign = 1
    prev = MPoly.one(dim)
    for p in range(k - 1):
        if not a[p][p]:
            for i in range(p + 1, k):
                if a[i][p]:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return MPoly.zero(dim)
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                num = a[p][p] * a[i][j] - a[i][p] * a[p][j]
                a[i][j] = num.exact_div(prev)
            a[i][p] = MPoly.zero(dim)
        prev = a[p][p]
    det = a[k - 1][k - 1]
    return -det if sign < 0 else det


def mpoly_generic_rank(entries: Sequence[Sequence[MPoly]]) -> int:
    """Rank over the fraction field in all variables jointly."""
    m = len(entries)
    n = len(entries[0]) if m else 0
    if n == 0:
        return 0
    dim = entries[0][0].dim
    a = [list(row) for row in entries]
    prev = MPoly.one(dim)
    rank = 0
    step = 0
    while step < m and step < n:
        piv = None
        for i in range(step, m):
            for j in range(step, n):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi_, pj = piv
        if pi_ != step:
            a[step], a[pi_] = a[pi_], a[step]
        if pj != step:
            for r in range(m):
                a[r][step], a[r][pj] = a[r][pj], a[r][step]
        p = a[step][step]
        for i in range(step + 1, m):
            for j in range(step + 1, n):
                num = p * a[i][j] - a[i][step] * a[step][j]
                a[i][j] = num.exact_div(prev)
            a[i][step] = MPoly.zero(dim)
        prev = p
        rank += 1
        step += 1
    return rank


def mpoly_minors(
    entries: Sequence[Sequence[MPoly]], k: int, config: ToolConfig = DEFAULT_CONFIG
) -> list[MPoly]:
    m = len(entries)
    n = len(entries[0])
    if k < 1 or k > min(m, n):
        raise ValueError(f"minor order {k} out of range for {m}x{n}")
    if min(m, n) > config.minor_limit:
        raise MinorLimitExceeded(
            f"matrix side {min(m, n)} exceeds minor enumeration cap {config.minor_limit}"
        )
    out = []
    for rsel in itertools.combinations(range(m), k):
        for csel in itertools.combinations(range(n), k):
            out.append(mpoly_determinant([[entries[i][j] for j in csel] for i in rsel]))
    return out


# ---------------------------------------------------------------------------
# time-direction structure of multivariate polynomials
# ---------------------------------------------------------------------------


def tau_coefficient_polys(ps: Sequence[MPoly]) -> list[MPoly]:
    """All nonzero time-power coefficients of the given polynomials."""
    out = []
    for p in ps:
        for k in range(p.tau_degree() + 1):
            c = p.tau_coefficient(k)
            if c:
                out.append(c)
    return out


def is_spatial_free(p: MPoly) -> bool:
    return not p.has_spatial()


def is_unit_scalar(p: MPoly) -> bool:
    """Nonzero, free of the spatial symbols and of the time symbol: such a
    value never vanishes at any mode or time (pi is transcendental)."""
    return bool(p) and not p.has_spatial() and p.tau_degree() == 0


def _strip_units(p: MPoly) -> MPoly:
    """Divide out factors that are units over the spatial fraction field:
    the rational content and any common non-time monomial."""
    if not p:
        return p
    d = p.dim
    mins = None
    nums: list[int] = []
    dens: list[int] = []
    for e, c in p.terms.items():
        key = e[:d] + (0,) + e[d + 1 :]
        mins = key if mins is None else tuple(min(a, b) for a, b in zip(mins, key))
        for f in (c.re, c.im):
            if f:
                nums.append(abs(f.numerator))
                dens.append(f.denominator)
    g = Fraction(math.gcd(*nums) if len(nums) > 1 else nums[0], 1)
    l = dens[0]
    for x in dens[1:]:
        l = l * x // math.gcd(l, x)
    content = g / l
    out = {}
    for e, c in p.terms.items():
        ne = tuple(a - b for a, b in zip(e, mins))
        out[ne] = c / content if content != 1 else c
    return MPoly(p.dim, out)


def _tau_prem(a: MPoly, b: MPoly) -> MPoly:
    """Pseudo-remainder in the time variable with multivariate coefficients."""
    db = b.tau_degree()
    lb = b.tau_coefficient(db)
    r = a
    while r and r.tau_degree() >= db:
        dr = r.tau_degree()
        lr = r.tau_coefficient(dr)
        shift = MPoly.tau(a.dim, dr - db) if dr > db else MPoly.one(a.dim)
        r = lb * r - lr * shift * b
    return r


def tau_gcd_degree(ps: Sequence[MPoly]) -> int:
    """Degree in the time variable of the GCD of the inputs, computed over
    the fraction field of the remaining variables.  Inputs must not all be
    zero."""
    ms = [p for p in ps if p]
    if not ms:
        raise ValueError("gcd degree undefined: all inputs are zero")
    g = _strip_units(ms[0])
    for f in ms[1:]:
        if g.tau_degree() == 0:
            return 0
        a, b = g, _strip_units(f)
        while b:
            if b.tau_degree() == 0:
                a = b
                break
            if a.tau_degree() < b.tau_degree():
                a, b = b, a
            r = _tau_prem(a, b)
            a, b = b, _strip_units(r)
        g = a
    return g.tau_degree()


def tau_leading_coeff(p: MPoly) -> MPoly:
    return p.tau_coefficient(p.tau_degree())


def tau_resultant(a: MPoly, b: MPoly) -> MPoly:
    """Resultant with respect to the time variable, by a fraction-free
    determinant of the Sylvester matrix."""
    if not a or not b:
        return MPoly.zero(a.dim if a else b.dim)
    dim = a.dim
    da, db = a.tau_degree(), b.tau_degree()
    if da == 0:
        return a**db if db > 0 else MPoly.one(dim)
    if db == 0:
        return b**da
    size = da + db
    ac = [a.tau_coefficient(k) for k in range(da, -1, -1)]
    bc = [b.tau_coefficient(k) for k in range(db, -1, -1)]
    zero = MPoly.zero(dim)
    rows = []
    for i in range(db):
        rows.append([zero] * i + ac + [zero] * (db - 1 - i))
    for i in range(da):
        rows.append([zero] * i + bc + [zero] * (da - 1 - i))
    return mpoly_determinant(rows)


# ---------------------------------------------------------------------------
# one-spatial-dimension elimination: exact lattice-root hunting
# ---------------------------------------------------------------------------


def to_spatial_upoly(p: MPoly) -> UPoly:
    """Reinterpret a polynomial in (x1, pi) as univariate in x1 over the
    pi-rational field.  Requires dim == 1 and no time dependence."""
    if p.dim != 1:
        raise ValueError("only defined in one spatial dimension")
    if p.tau_degree() > 0:
        raise ValueError("polynomial still involves the time symbol")
    by_power: dict[int, dict[int, GaussianRational]] = {}
    for e, c in p.terms.items():
        row = by_power.setdefault(e[0], {})
        row[e[2]] = row.get(e[2], GR_ZERO) + c
    if not by_power:
        return UPoly.zero()
    deg = max(by_power)
    coeffs = []
    for k in range(deg + 1):
        row = by_power.get(k)
        if not row:
            coeffs.append(PiScalar.zero())
        else:
            top = max(row)
            coeffs.append(PiScalar(QiPoly([row.get(j, GR_ZERO) for j in range(top + 1)])))
    return UPoly(coeffs)


def spatial_gcd(ps: Sequence[MPoly]) -> UPoly:
    """Monic GCD in the single spatial variable over the pi-rational field."""
    return upoly_gcd([to_spatial_upoly(p) for p in ps])


def _integer_divisors(n: int) -> Optional[list[int]]:
    n = abs(n)
    if n == 0:
        return None
    if n > _DIVISOR_CAP:
        return None
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(poly: QiPoly) -> Optional[list[Fraction]]:
    """All rational roots of a Gaussian-rational-coefficient polynomial, or
    None when the integer factoring involved is out of reach.

    A rational root must kill the real and imaginary parts simultaneously,
    so the hunt runs on their GCD.
    """
    if not poly:
        raise ValueError("every rational is a root of the zero polynomial")
    re = QiPoly([GaussianRational(c.re) for c in poly.coeffs])
    im = QiPoly([GaussianRational(c.im) for c in poly.coeffs])
    g = QiPoly.gcd(re, im) if re and im else (re if re else im)
    roots: list[Fraction] = []
    # strip powers of the variable: root at zero
    k = 0
    while k <= g.degree and not g.coeffs[k]:
        k += 1
    if k > 0:
        roots.append(Fraction(0))
        g = QiPoly(g.coeffs[k:])
    if g.degree <= 0:
        return sorted(set(roots))
    # clear to a primitive integer polynomial
    den_lcm = 1
    for c in g.coeffs:
        q = c.re.denominator
        den_lcm = den_lcm * q // math.gcd(den_lcm, q)
    ints = [int(c.re * den_lcm) for c in g.coeffs]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    ints = [v // content for v in ints]
    lead = ints[-1]
    const = ints[0]
    dn = _integer_divisors(const)
    dl = _integer_divisors(lead)
    if dn is None or dl is None:
        return None
    candidates = set()
    for p in dn:
        for q in dl:
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    gr = QiPoly([GaussianRational(Fraction(v)) for v in ints])
    for cand in candidates:
        if not gr.evaluate_exact(cand):
            roots.append(cand)
    return sorted(set(roots))


def modes_killing_polynomial(h: UPoly) -> Optional[list[Fraction]]:
    """Rationals q such that substituting 2*i*pi*q for the variable of h
    yields the identically-zero pi-polynomial.

    h lives over the pi-rational field; None means the search could not be
    completed exactly (oversized integer factoring), never that there are no
    such q.
    """
    if not h:
        raise ValueError("zero polynomial vanishes at every frequency")
    # clear denominators: coefficients become pi-polynomials c_k
    den = QiPoly.one()
    for c in h.coeffs:
        if c and c.den.degree > 0:
            den = QiPoly.lcm(den, c.den)
    cleared: List[QiPoly] = []
    for c in h.coeffs:
        if not c:
            cleared.append(QiPoly.zero())
        else:
            cleared.append(c.num * den.exact_div(c.den))
    # substitute 2*i*pi*q: the pi^s coefficient is a polynomial in q
    two_i = GaussianRational(0, 2)
    by_pi: dict[int, dict[int, GaussianRational]] = {}
    for k, ck in enumerate(cleared):
        factor = two_i**k
        for j, c in enumerate(ck.coeffs):
            if not c:
                continue
            row = by_pi.setdefault(k + j, {})
            row[k] = row.get(k, GR_ZERO) + c * factor
    polys_in_q = []
    for row in by_pi.values():
        top = max(row)
        qp = QiPoly([row.get(j, GR_ZERO) for j in range(top + 1)])
        if qp:
            polys_in_q.append(qp)
    if not polys_in_q:
        raise AssertionError("nonzero input reduced to no conditions")
    g = polys_in_q[0]
    for qp in polys_in_q[1:]:
        if g.degree == 0:
            return []
        g = QiPoly.gcd(g, qp)
    if g.degree == 0:
        return []
    return rational_roots(g)
