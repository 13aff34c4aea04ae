"""Independent reference implementations used to check the production code.

These stay deliberately naive: Laplace cofactor expansion instead of
fraction-free elimination, plain dict convolution instead of the polynomial
classes, numpy SVD for numeric rank.
"""

import itertools

import numpy as np

from modecheck.upoly import UPoly


def cofactor_det(rows):
    """Recursive Laplace expansion along the first row."""
    k = len(rows)
    if k == 0:
        return UPoly.one()
    if k == 1:
        return rows[0][0]
    acc = UPoly.zero()
    for j in range(k):
        if not rows[0][j]:
            continue
        sub = [[rows[i][c] for c in range(k) if c != j] for i in range(1, k)]
        term = rows[0][j] * cofactor_det(sub)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def brute_rank(M):
    """Largest k with a nonzero k x k minor, by full enumeration."""
    best = 0
    for k in range(1, min(M.rows, M.cols) + 1):
        found = False
        for rsel in itertools.combinations(range(M.rows), k):
            for csel in itertools.combinations(range(M.cols), k):
                sub = [[M.entries[i][j] for j in csel] for i in rsel]
                if cofactor_det(sub):
                    found = True
                    break
            if found:
                break
        if found:
            best = k
        else:
            break
    return best


def svd_rank(A, rel_tol=1e-8):
    s = np.linalg.svd(np.asarray(A, dtype=complex), compute_uv=False)
    if len(s) == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


def naive_term_product(terms_a, terms_b):
    """Dict-convolution product of exponent->coefficient maps."""
    out = {}
    for ea, ca in terms_a.items():
        for eb, cb in terms_b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            if e in out:
                c = out[e] + c
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def minor_gcd_invariant_factors(M, r):
    """Invariant factors as quotients of successive minor GCDs."""
    from modecheck.matrices import minors
    from modecheck.upoly import upoly_gcd_euclid

    gs = [UPoly.one()]
    for k in range(1, r + 1):
        nz = [mu for mu in minors(M, k) if mu]
        gs.append(upoly_gcd_euclid(nz))
    return [gs[k].exact_div(gs[k - 1]).monic() for k in range(1, r + 1)]
