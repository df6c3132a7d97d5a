"""Canonical bases of the subset modules and Wilson's diagonal forms.

The canonical basis matrix for k-subsets stacks, for j = 0..k, the rows of
the inclusion matrix labeled by full-rank j-subsets.  It is unimodular and
simultaneously diagonalizes every inclusion matrix with t <= k <= n/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .bigmat import IntMatrix
from .subsets import (SubsetOrder, count_full_rank, enumerate_subsets,
                      has_full_rank, incidence_matrix)


def _check_half(n: int, k: int) -> None:
    if 2 * k > n:
        raise ValueError(f"k={k} exceeds n/2 for n={n}")


@dataclass(frozen=True)
class CanonicalBasis:
    """Unimodular change of basis on k-subsets; rows labeled (j, subset)."""
    n: int
    k: int
    matrix: IntMatrix
    row_labels: tuple  # (j, j-subset) pairs, j ascending, colex within j


@dataclass(frozen=True)
class WilsonForm:
    """Diagonal form of the (t,k) inclusion matrix.

    Diagonal entries C(k-j, t-j) with multiplicity C(n,j) - C(n,j-1),
    for j = 0..t, in block order.
    """
    n: int
    t: int
    k: int
    matrix: IntMatrix

    def diagonal_entries(self) -> tuple:
        out = []
        for j in range(self.t + 1):
            out.extend([comb(self.k - j, self.t - j)] * count_full_rank(self.n, j))
        return tuple(out)


def build_E_jk(n: int, j: int, k: int) -> IntMatrix:
    """Rows of the (j,k) inclusion matrix restricted to full-rank j-subsets."""
    if not 0 <= j <= k:
        raise ValueError(f"need 0 <= j <= k, got j={j}, k={k}")
    _check_half(n, k)
    w = incidence_matrix(n, j, k)
    keep = [i for i, s in enumerate(enumerate_subsets(n, j)) if has_full_rank(s)]
    return w.submatrix(keep, range(w.cols))


@lru_cache(maxsize=None)
def build_E(n: int, k: int) -> CanonicalBasis:
    """The canonical basis matrix: stacked full-rank blocks, j = 0..k."""
    _check_half(n, k)
    labels = []
    rows = []
    for j in range(k + 1):
        block = build_E_jk(n, j, k)
        rows.extend(block.row_lists())
        labels.extend((j, s) for s in enumerate_subsets(n, j) if has_full_rank(s))
    matrix = IntMatrix(rows, comb(n, k))
    assert matrix.rows == matrix.cols
    return CanonicalBasis(n, k, matrix, tuple(labels))


def wilson_form(n: int, t: int, k: int) -> WilsonForm:
    """Wilson's diagonal form for the (t,k) inclusion matrix, t <= k <= n/2."""
    if t > k:
        raise ValueError(f"need t <= k, got t={t}, k={k}")
    _check_half(n, k)
    data = [[0] * comb(n, k) for _ in range(comb(n, t))]
    i = 0
    for j in range(t + 1):
        entry = comb(k - j, t - j)
        for _ in range(count_full_rank(n, j)):
            data[i][i] = entry
            i += 1
    assert i == comb(n, t)
    return WilsonForm(n, t, k, IntMatrix(data, comb(n, k)))


def verify_bier(n: int, t: int, k: int) -> bool:
    """Check E_t * W_{t,k} = D_{t,k} * E_k (inversion-free form)."""
    if t > k:
        raise ValueError(f"need t <= k, got t={t}, k={k}")
    _check_half(n, k)
    e_t = build_E(n, t).matrix
    e_k = build_E(n, k).matrix
    w = incidence_matrix(n, t, k)
    d = wilson_form(n, t, k).matrix
    return e_t @ w == d @ e_k
