import logging
from typing import List, Tuple

import numpy as np

from ..exceptions.custom_exceptions import ValidationError
from ..models.matrix import EigenPair, RealMatrix
from .charpoly import char_poly
from .roots import is_real_root, polynomial_roots

logger = logging.getLogger(__name__)

# relative pivot size below which a column counts as numerically dependent
_RANK_RTOL = 1e-7

def eigenvalues(A: RealMatrix, max_iter: int = 500) -> np.ndarray:
    """Full complex root set of the characteristic polynomial"""
    return polynomial_roots(char_poly(A), max_iter=max_iter)

def eigen_all(A: RealMatrix, tol: float = 1e-9, max_n: int = 8,
              max_iter: int = 500) -> List[EigenPair]:
    """Real eigenpairs of A, largest eigenvalue first"""
    if tol <= 0:
        raise ValidationError("tol must be positive")
    if A.n > max_n:
        raise ValidationError(f"Matrix dimension {A.n} exceeds the eigen cap {max_n}")

    roots = eigenvalues(A, max_iter=max_iter)
    scale = max(A.norm_inf(), np.finfo(float).tiny)

    real_indices = [i for i, z in enumerate(roots) if is_real_root(z, tol)]
    real_indices.sort(key=lambda i: -roots[i].real)

    pairs = []
    for i in real_indices:
        value = float(roots[i].real)
        others = np.delete(roots, i)
        gap = float(np.min(np.abs(others - value))) if len(others) else float('inf')

        shifted = A.data - value * np.eye(A.n)
        right, right_nullity = null_vector(shifted)
        left, left_nullity = null_vector(shifted.T)
        simple = gap > tol * (1.0 + abs(value)) and right_nullity == 1 and left_nullity == 1
        if right_nullity > 1 or left_nullity > 1:
            logger.debug(f"Eigenvalue {value:.6g} has a numerically 2-dimensional null space")

        residual = max(
            float(np.max(np.abs(A.data @ right - value * right))),
            float(np.max(np.abs(left @ A.data - value * left))),
        ) / scale
        pairs.append(EigenPair(
            value=value,
            right=_frozen(right),
            left=_frozen(left),
            gap=gap if right_nullity == 1 and left_nullity == 1 else 0.0,
            simple=simple,
            residual=residual,
        ))

    return pairs

def null_vector(m: np.ndarray) -> Tuple[np.ndarray, int]:
    """Null vector of m by partial-pivoting elimination.

    The column with the smallest pivot is the free variable. Returns the
    normalized vector and the numerical nullity (1, or 2 when a second pivot
    is also negligible).
    """
    n = m.shape[0]
    u = np.array(m, dtype=np.float64, copy=True)
    scale = max(float(np.max(np.sum(np.abs(u), axis=1))), np.finfo(float).tiny)

    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(u[col:, col])))
        if pivot_row != col:
            u[[col, pivot_row]] = u[[pivot_row, col]]
        pivot = u[col, col]
        if pivot == 0.0:
            continue
        for row in range(col + 1, n):
            factor = u[row, col] / pivot
            if factor != 0.0:
                u[row, col:] -= factor * u[col, col:]

    pivots = np.abs(np.diag(u))
    order = np.argsort(pivots, kind='stable')
    free = int(order[0])
    nullity = 1
    if n > 1 and pivots[order[1]] <= _RANK_RTOL * scale:
        nullity = 2

    x = np.zeros(n)
    x[free] = 1.0
    for row in reversed(range(n)):
        if row == free:
            continue
        diag = u[row, row]
        if diag == 0.0:
            continue
        x[row] = -float(u[row, row + 1:] @ x[row + 1:]) / diag

    return normalize_vector(x), nullity

def normalize_vector(x: np.ndarray, zero_tol: float = 0.0) -> np.ndarray:
    """Unit max-norm with the first nonzero coordinate positive"""
    peak = float(np.max(np.abs(x)))
    if peak == 0.0:
        return x
    y = x / peak
    nonzero = np.flatnonzero(np.abs(y) > zero_tol)
    if len(nonzero) and y[nonzero[0]] < 0:
        y = -y
    return y

def _frozen(x: np.ndarray) -> np.ndarray:
    y = np.array(x, dtype=np.float64, copy=True)
    y.setflags(write=False)
    return y
