"""Rational period lattices and their frequency modes.

The period matrix A holds the period vectors as rows.  Frequencies live on
the lattice generated by the inverse: mode(n) = A^{-1} n for integer n.
Entries are exact rationals so every mode is an exact rational vector.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise ValueError(f"period matrix entries must be exact rationals, got {x!r}")


class PeriodLattice:
    """Invertible rational period matrix with exact mode arithmetic."""

    __slots__ = ("dim", "matrix", "inverse")

    def __init__(self, rows: Sequence[Sequence]):
        A = tuple(tuple(_to_fraction(x) for x in row) for row in rows)
        d = len(A)
        if d == 0 or any(len(r) != d for r in A):
            raise ValueError("period matrix must be square")
        self.dim = d
        self.matrix = A
        self.inverse = _invert(A)

    @staticmethod
    def identity(d: int) -> "PeriodLattice":
        return PeriodLattice(
            [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
        )

    def mode(self, n_vec: Sequence[int]) -> Tuple[Fraction, ...]:
        """The frequency A^{-1} n for an integer index vector."""
        if len(n_vec) != self.dim:
            raise ValueError(f"index vector has {len(n_vec)} entries, expected {self.dim}")
        n = [int(k) for k in n_vec]
        return tuple(
            sum(self.inverse[i][j] * n[j] for j in range(self.dim)) for i in range(self.dim)
        )

    def lattice_index(self, v: Sequence[Fraction]) -> Optional[Tuple[int, ...]]:
        """The integer index of a frequency, or None when v is off-lattice."""
        if len(v) != self.dim:
            raise ValueError("wrong frequency dimension")
        out = []
        for i in range(self.dim):
            x = sum(self.matrix[i][j] * Fraction(v[j]) for j in range(self.dim))
            if x.denominator != 1:
                return None
            out.append(int(x))
        return tuple(out)

    def shell(self, radius: int) -> Iterator[Tuple[int, ...]]:
        """Integer vectors with sup-norm exactly ``radius``, lexicographic."""
        if radius == 0:
            yield (0,) * self.dim
            return
        for n in itertools.product(range(-radius, radius + 1), repeat=self.dim):
            if max(abs(k) for k in n) == radius:
                yield n

    def box(self, window: int) -> Iterator[Tuple[int, ...]]:
        """All integer vectors with sup-norm <= window, smallest shells
        first and lexicographic within a shell."""
        if window < 0:
            raise ValueError("window must be nonnegative")
        for s in range(window + 1):
            yield from self.shell(s)

    def period_vectors(self) -> list[Tuple[Fraction, ...]]:
        return [tuple(row) for row in self.matrix]

    def __repr__(self):
        return f"PeriodLattice(d={self.dim})"


def _invert(A):
    d = len(A)
    aug = [list(A[i]) + [Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
    for col in range(d):
        piv = None
        for r in range(col, d):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("period matrix not invertible")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[d:]) for row in aug)
