"""Pfaffians of skew-symmetric matrices.

Two routes are provided on purpose: the literal permutation sum (the
defining formula, exponential cost, capped at 8x8) and an O(N^3)
skew-symmetric Gaussian elimination in the Parlett-Reid style.  The slow
route is the oracle the fast one is tested against.
"""

from __future__ import annotations

from itertools import permutations
from math import factorial

import numpy as np

from .errors import DimensionMismatch, InvariantViolation

SKEW_TOL = 1e-10
PIVOT_TOL = 1e-13  # pivots below this treat the matrix as singular, Pf = 0
DEFINITION_MAX_DIM = 8


def _as_skew(m, skew_tol: float) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] % 2:
        raise DimensionMismatch("Pfaffian requires even dimension")
    if m.size:
        r = float(np.max(np.abs(m + m.T)))
        if r > skew_tol:
            raise InvariantViolation(f"matrix not skew-symmetric (residual {r:.3e})")
    return m


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def pfaffian_definition(m, *, skew_tol: float = SKEW_TOL) -> complex:
    """Pfaffian by the permutation sum (1/(2^N N!)) sum_pi sgn(pi) prod M.

    Exact transcription of the defining formula; dimension capped at
    DEFINITION_MAX_DIM since the sum runs over all of S_2N.
    """
    m = _as_skew(m, skew_tol)
    dim = m.shape[0]
    if dim == 0:
        return 1.0 + 0j
    if dim > DEFINITION_MAX_DIM:
        raise ValueError(f"permutation-sum Pfaffian capped at {DEFINITION_MAX_DIM}x{DEFINITION_MAX_DIM}")
    n = dim // 2
    total = 0j
    for perm in permutations(range(dim)):
        term = complex(_perm_sign(perm))
        for j in range(n):
            term *= m[perm[2 * j], perm[2 * j + 1]]
            if term == 0:
                break
        total += term
    return total / (2**n * factorial(n))


def pfaffian(m, *, skew_tol: float = SKEW_TOL, pivot_tol: float = PIVOT_TOL) -> complex:
    """Pfaffian via skew-symmetric Gaussian elimination with partial pivoting.

    Reduces the matrix to skew tridiagonal form with unit Gauss transforms
    (each leaving the Pfaffian invariant) and accumulates the product of
    super-diagonal pivots; row/column interchanges flip the sign.  A pivot
    column below ``pivot_tol`` means the matrix is singular and Pf = 0.
    """
    a = np.array(_as_skew(m, skew_tol), copy=True)
    dim = a.shape[0]
    if dim == 0:
        return 1.0 + 0j
    value = 1.0 + 0j
    for k in range(0, dim - 1, 2):
        kp = k + 1 + int(np.argmax(np.abs(a[k + 1:, k])))
        if kp != k + 1:
            a[[k + 1, kp], k:] = a[[kp, k + 1], k:]
            a[k:, [k + 1, kp]] = a[k:, [kp, k + 1]]
            value = -value
        pivot = a[k, k + 1]
        if abs(pivot) < pivot_tol:
            return 0j
        value *= pivot
        if k + 2 < dim:
            tau = a[k, k + 2:] / pivot
            col = a[k + 2:, k + 1]
            a[k + 2:, k + 2:] += np.outer(tau, col) - np.outer(col, tau)
    return value
