"""Exact linear algebra over univariate polynomial rings.

Generic rank and determinants go through fraction-free (Bareiss) elimination;
the Smith form uses minimum-degree pivoting with deterministic tie-breaking.
Kernel and image representations are read off the Smith transformation
matrices, so the defining identities hold as exact polynomial equations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .config import DEFAULT_CONFIG, ToolConfig
from .errors import MinorLimitExceeded
from .mpoly import MPoly
from .scalars import PS_ONE, PiScalar, QIP_ONE, QiPoly
from .upoly import UPoly, upoly_gcd


class PolyMatrix:
    """Rectangular matrix of multivariate polynomial entries."""

    __slots__ = ("rows", "cols", "dim", "entries")

    def __init__(self, entries: Sequence[Sequence[MPoly]]):
        rows = [tuple(row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        dim = rows[0][0].dim
        for r in rows:
            for e in r:
                if e.dim != dim:
                    raise ValueError("mixed dimensions in matrix entries")
        self.rows = len(rows)
        self.cols = width
        self.dim = dim
        self.entries = tuple(rows)

    def at_mode(self, v) -> "UPolyMatrix":
        return UPolyMatrix([[e.substitute_mode(v) for e in row] for row in self.entries])

    def has_spatial(self) -> bool:
        return any(e.has_spatial() for row in self.entries for e in row)

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = MPoly.zero(self.dim)
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def to_strings(self) -> list[list[str]]:
        return [[e.to_string() for e in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, d={self.dim})"


class UPolyMatrix:
    """Rectangular matrix of univariate polynomials; zero columns are legal
    (an image representation of a trivial behaviour has none)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[UPoly]], cols: Optional[int] = None):
        rows = [tuple(row) for row in entries]
        if not rows:
            raise ValueError("matrix must have at least one row")
        width = len(rows[0]) if cols is None else cols
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    @staticmethod
    def identity(n: int) -> "UPolyMatrix":
        return UPolyMatrix(
            [[UPoly.one() if i == j else UPoly.zero() for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(m: int, n: int) -> "UPolyMatrix":
        return UPolyMatrix([[UPoly.zero() for _ in range(n)] for _ in range(m)])

    def matmul(self, other: "UPolyMatrix") -> "UPolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = UPoly.zero()
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return UPolyMatrix(out, cols=other.cols)

    def apply_vector(self, vec: Sequence[UPoly]) -> list[UPoly]:
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            acc = UPoly.zero()
            for k in range(self.cols):
                acc = acc + self.entries[i][k] * vec[k]
            out.append(acc)
        return out

    def evaluate(self, t: complex, pi_val=None):
        import numpy as np

        return np.array(
            [[e.evaluate(t, pi_val) for e in row] for row in self.entries], dtype=complex
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, UPolyMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __repr__(self):
        return f"UPolyMatrix({self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


# ---------------------------------------------------------------------------
# determinants, minors, rank
# ---------------------------------------------------------------------------


def bareiss_determinant(rows: Sequence[Sequence[UPoly]]) -> UPoly:
    """Fraction-free determinant; every interior division is exact."""
    k = len(rows)
    if k == 0:
        return UPoly.one()
    if any(len(r) != k for r in rows):
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in rows]
    sign = 1
    prev = UPoly.one()
    for p in range(k - 1):
        if not a[p][p]:
            for i in range(p + 1, k):
                if a[i][p]:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return UPoly.zero()
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                num = a[p][p] * a[i][j] - a[i][p] * a[p][j]
                a[i][j] = num.exact_div(prev)
            a[i][p] = UPoly.zero()
        prev = a[p][p]
    det = a[k - 1][k - 1]
    return -det if sign < 0 else det


def minors(M: UPolyMatrix, k: int, config: ToolConfig = DEFAULT_CONFIG) -> list[UPoly]:
    """All k x k minors in row-major order of (row choice, column choice)."""
    if k < 1 or k > min(M.rows, M.cols):
        raise ValueError(f"minor order {k} out of range for {M.rows}x{M.cols}")
    if min(M.rows, M.cols) > config.minor_limit:
        raise MinorLimitExceeded(
            f"matrix side {min(M.rows, M.cols)} exceeds minor enumeration cap "
            f"{config.minor_limit}"
        )
    out = []
    for rsel in itertools.combinations(range(M.rows), k):
        for csel in itertools.combinations(range(M.cols), k):
            sub = [[M.entries[i][j] for j in csel] for i in rsel]
            out.append(bareiss_determinant(sub))
    return out


def generic_rank(M: UPolyMatrix) -> int:
    """Rank over the rational-function field in the time variable."""
    m, n = M.rows, M.cols
    if n == 0:
        return 0
    a = [list(row) for row in M.entries]
    prev = UPoly.one()
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
            a[i][step] = UPoly.zero()
        prev = p
        rank += 1
        step += 1
    return rank


@dataclass(frozen=True)
class RankConstancy:
    generic_rank: int
    gcd: UPoly  # monic GCD of the nonzero top-order minors; 1 when rank is 0
    constant: bool


def rank_constancy(M: UPolyMatrix, config: ToolConfig = DEFAULT_CONFIG) -> RankConstancy:
    """Whether the pointwise rank equals the generic rank for every time
    value; the returned GCD's roots are exactly the rank-drop locus."""
    r = generic_rank(M)
    if r == 0:
        return RankConstancy(0, UPoly.one(), True)
    tops = [mu for mu in minors(M, r, config) if mu]
    g = upoly_gcd(tops)
    return RankConstancy(r, g, g.degree() == 0)


# ---------------------------------------------------------------------------
# Smith decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    U: UPolyMatrix
    D: UPolyMatrix
    V: UPolyMatrix

    @property
    def invariant_factors(self) -> list[UPoly]:
        out = []
        for k in range(min(self.D.rows, self.D.cols)):
            d = self.D.entries[k][k]
            if d:
                out.append(d)
        return out


def _content_unit(coeffs) -> Optional[PiScalar]:
    """A unit u of the scalar field such that dividing the coefficients by u
    clears pi denominators and strips common pi and rational content.  Any
    unit is sound here; this choice just keeps entries small.  None when all
    coefficients are zero or the list is already primitive."""
    import math as _math
    from fractions import Fraction as _Fr

    nums = []
    den = QIP_ONE
    for c in coeffs:
        if c:
            nums.append(c.num)
            if c.den.degree > 0:
                den = QiPoly.lcm(den, c.den)
    if not nums:
        return None
    g = nums[0].monic()
    for nq in nums[1:]:
        if g.degree == 0:
            break
        g = QiPoly.gcd(g, nq)
    gnum = 0
    lden = 1
    for c in coeffs:
        if not c:
            continue
        for gr in c.num.coeffs:
            for f in (gr.re, gr.im):
                if f:
                    gnum = _math.gcd(gnum, abs(f.numerator))
                    lden = lden * f.denominator // _math.gcd(lden, f.denominator)
    rat = _Fr(gnum, lden) if gnum else _Fr(1)
    if den.degree == 0 and g.degree == 0 and rat == 1:
        return None
    return PiScalar(g.scale(rat), den)


def _min_degree_pivot(a, k, m, n):
    best = None
    best_deg = None
    for i in range(k, m):
        for j in range(k, n):
            if a[i][j]:
                d = a[i][j].degree()
                if best is None or d < best_deg:
                    best = (i, j)
                    best_deg = d
    return best


def smith_form(M: UPolyMatrix) -> SmithDecomposition:
    """U*M*V = D with U, V unimodular over the polynomial ring and monic
    diagonal invariant factors, each dividing the next.

    Pivot choice: minimum-degree nonzero entry, ties broken by lowest
    (row, col), which makes the computation deterministic.
    """
    m, n = M.rows, M.cols
    a = [list(row) for row in M.entries]
    u = [list(row) for row in UPolyMatrix.identity(m).entries]
    v = [list(row) for row in UPolyMatrix.identity(n).entries]

    def row_op(i, q, k):  # row_i -= q*row_k  (on a and u)
        for j in range(n):
            a[i][j] = a[i][j] - q * a[k][j]
        for j in range(m):
            u[i][j] = u[i][j] - q * u[k][j]

    def row_add(i, k):  # row_k += row_i
        for j in range(n):
            a[k][j] = a[k][j] + a[i][j]
        for j in range(m):
            u[k][j] = u[k][j] + u[i][j]

    def col_op(j, q, k):  # col_j -= q*col_k  (on a and v)
        for i in range(m):
            a[i][j] = a[i][j] - q * a[i][k]
        for i in range(n):
            v[i][j] = v[i][j] - q * v[i][k]

    def normalize_block(k):
        # unit row/column scalings (absorbed by U and V) to fight swell
        for i in range(k, m):
            u_i = _content_unit([c for e in a[i] for c in e.coeffs])
            if u_i is not None:
                inv = PS_ONE / u_i
                for j in range(n):
                    a[i][j] = a[i][j].scale(inv)
                for j in range(m):
                    u[i][j] = u[i][j].scale(inv)
        for j in range(k, n):
            u_j = _content_unit([c for i in range(m) for c in a[i][j].coeffs])
            if u_j is not None:
                inv = PS_ONE / u_j
                for i in range(m):
                    a[i][j] = a[i][j].scale(inv)
                for i in range(n):
                    v[i][j] = v[i][j].scale(inv)

    k = 0
    guard = 0
    while k < min(m, n):
        normalize_block(k)
        piv = _min_degree_pivot(a, k, m, n)
        if piv is None:
            break
        while True:
            guard += 1
            if guard > 100000:
                raise AssertionError("smith form failed to converge")
            i0, j0 = piv
            if i0 != k:
                a[k], a[i0] = a[i0], a[k]
                u[k], u[i0] = u[i0], u[k]
            if j0 != k:
                for r in range(m):
                    a[r][k], a[r][j0] = a[r][j0], a[r][k]
                for r in range(n):
                    v[r][k], v[r][j0] = v[r][j0], v[r][k]
            lc = a[k][k].lc
            if not lc.is_one:
                # monic pivot keeps the division quotients small
                inv = PS_ONE / lc
                for j in range(n):
                    a[k][j] = a[k][j].scale(inv)
                for j in range(m):
                    u[k][j] = u[k][j].scale(inv)
            p = a[k][k]
            dirty = False
            for i in range(k + 1, m):
                if a[i][k]:
                    q, rem = divmod(a[i][k], p)
                    if q:
                        row_op(i, q, k)
                    if rem:
                        dirty = True
            for j in range(k + 1, n):
                if a[k][j]:
                    q, rem = divmod(a[k][j], p)
                    if q:
                        col_op(j, q, k)
                    if rem:
                        dirty = True
            if dirty:
                normalize_block(k)
                piv = _min_degree_pivot(a, k, m, n)
                continue
            # row and column k are clear; enforce divisibility of the rest

            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if a[i][j] and (a[i][j] % a[k][k]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(offender, k)
            piv = _min_degree_pivot(a, k, m, n)
        # normalize the pivot to be monic (unit row scaling)
        lc = a[k][k].lc
        if not lc.is_one:
            inv = PS_ONE / lc
            for j in range(n):
                a[k][j] = a[k][j].scale(inv)
            for j in range(m):
                u[k][j] = u[k][j].scale(inv)
        k += 1
    return SmithDecomposition(
        UPolyMatrix(u), UPolyMatrix(a, cols=n), UPolyMatrix(v)
    )


# ---------------------------------------------------------------------------
# kernel and image representations
# ---------------------------------------------------------------------------


def _clear_and_reduce(vec: List[UPoly]) -> list[UPoly]:
    """Canonicalize a kernel vector: divide out the common polynomial factor,
    clear pi denominators, and scale the first nonzero entry monic."""
    nonzero = [p for p in vec if p]
    g = upoly_gcd(nonzero)
    if g.degree() > 0:
        vec = [p.exact_div(g) if p else p for p in vec]
    den = QIP_ONE
    for p in vec:
        for c in p.coeffs:
            if c and c.den != QIP_ONE:
                den = QiPoly.lcm(den, c.den)
    if den.degree > 0:
        s = PiScalar(den)
        vec = [p.scale(s) for p in vec]
    first = next(p for p in vec if p)
    lc = first.lc
    if not lc.is_one:
        inv = PS_ONE / lc
        vec = [p.scale(inv) for p in vec]
    return list(vec)


def nullspace_vector(M: UPolyMatrix) -> Optional[list[UPoly]]:
    """A nonzero polynomial kernel vector, or None when the matrix has full
    column rank.  The returned vector satisfies M*k = 0 exactly."""
    if M.cols == 0:
        return None
    S = smith_form(M)
    r = len(S.invariant_factors)
    if r >= M.cols:
        return None
    vec = [S.V.entries[i][r] for i in range(M.cols)]
    vec = _clear_and_reduce(vec)
    residual = M.apply_vector(vec)
    assert all(not e for e in residual), "kernel identity failed"
    return vec


def image_representation(
    M: UPolyMatrix, config: ToolConfig = DEFAULT_CONFIG
) -> Optional[UPolyMatrix]:
    """Matrix N with M*N = 0 whose columns generate the full solution set of
    the mode; None when the mode is not rank-constant (some invariant factor
    is a nonunit)."""
    rc = rank_constancy(M, config)
    if not rc.constant:
        return None
    S = smith_form(M)
    facs = S.invariant_factors
    r = len(facs)
    assert r == rc.generic_rank
    assert all(f.degree() == 0 for f in facs)
    n = M.cols
    cols = list(range(r, n))
    N = UPolyMatrix([[S.V.entries[i][j] for j in cols] for i in range(n)], cols=len(cols))
    prod = M.matmul(N)
    assert prod.is_zero(), "image identity failed"
    return N
