"""Dense tableau simplex for  max c.x  s.t.  A x <= b, x >= 0, b >= 0.

The slack basis is feasible because b >= 0, so a single phase suffices.
Bland's rule picks the lowest-index improving column and breaks ratio ties by
the lowest basic variable index.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions.custom_exceptions import LpNumericalFailure

logger = logging.getLogger(__name__)

EPS = 1e-12

@dataclass(frozen=True, eq=False)
class SimplexResult:
    """Optimal point, objective value and pivot count"""
    x: np.ndarray
    value: float
    pivots: int

def maximize(c: np.ndarray, A: np.ndarray, b: np.ndarray,
             pivot_budget: int = 500) -> SimplexResult:
    c = np.asarray(c, dtype=np.float64)
    A = np.asarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    m, n = A.shape
    if np.any(b < 0):
        raise LpNumericalFailure("Right-hand side must be non-negative for the slack basis")

    tableau = np.hstack((A, np.eye(m), b.reshape(m, 1)))
    objective = np.concatenate((-c, np.zeros(m + 1)))
    basis = np.arange(n, n + m)

    pivots = 0
    while True:
        entering = _bland_entering(objective[:-1])
        if entering < 0:
            break
        if pivots >= pivot_budget:
            logger.error(f"Simplex exceeded its pivot budget of {pivot_budget}")
            raise LpNumericalFailure(f"Simplex exceeded pivot budget {pivot_budget}")

        leaving = _ratio_test(tableau, basis, entering)
        if leaving < 0:
            raise LpNumericalFailure("LP is unbounded in the entering direction")

        _pivot(tableau, objective, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    x = np.zeros(n + m)
    x[basis] = tableau[:, -1]
    return SimplexResult(x=x[:n], value=float(objective[-1]), pivots=pivots)

def _bland_entering(reduced: np.ndarray) -> int:
    candidates = np.flatnonzero(reduced < -EPS)
    return int(candidates[0]) if len(candidates) else -1

def _ratio_test(tableau: np.ndarray, basis: np.ndarray, column: int) -> int:
    best_row, best_ratio = -1, np.inf
    for row in range(tableau.shape[0]):
        coef = tableau[row, column]
        if coef <= EPS:
            continue
        ratio = tableau[row, -1] / coef
        if ratio < best_ratio - EPS or (abs(ratio - best_ratio) <= EPS and basis[row] < basis[best_row]):
            best_row, best_ratio = row, ratio
    return best_row

def _pivot(tableau: np.ndarray, objective: np.ndarray, row: int, column: int) -> None:
    tableau[row, :] /= tableau[row, column]
    for other in range(tableau.shape[0]):
        if other != row and tableau[other, column] != 0.0:
            tableau[other, :] -= tableau[other, column] * tableau[row, :]
    objective -= objective[column] * tableau[row, :]

def box_constraints(num_vars: int, upper: float) -> Tuple[np.ndarray, np.ndarray]:
    """Rows x_i <= upper for i < num_vars"""
    return np.eye(num_vars), np.full(num_vars, upper)
