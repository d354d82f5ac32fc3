"""Sign-pattern calculus: signs of matrices, sampling of Q(S), the positive and
negative parts of a pattern, B_A and the theory-based necessary and sufficient tests.
"""
import logging
from typing import Tuple

import numpy as np

from ..exceptions.custom_exceptions import ValidationError
from ..graphs.digraph import digraph_of, strongly_connected
from ..models.matrix import RealMatrix
from ..models.pattern import SignPattern
from ..utils.helpers import SeedLike, make_rng

logger = logging.getLogger(__name__)

DEFAULT_MAGNITUDES = (1e-2, 1e2)

def pattern_of(X: RealMatrix, zero_tol: float = 0.0) -> SignPattern:
    if zero_tol < 0:
        raise ValidationError("zero_tol must be non-negative")
    data = X.data
    signs = np.where(np.abs(data) <= zero_tol, 0, np.sign(data)).astype(int)
    return SignPattern(X.n, tuple(int(s) for s in signs.ravel()))

def sample(S: SignPattern, seed: SeedLike,
           magnitude_profile: Tuple[float, float] = DEFAULT_MAGNITUDES) -> RealMatrix:
    """Member of Q(S) with log-uniform magnitudes; Zero cells are exactly 0"""
    low, high = magnitude_profile
    if not 0 < low <= high:
        raise ValidationError(f"Invalid magnitude profile {magnitude_profile}")
    rng = make_rng(seed)
    magnitudes = np.exp(rng.uniform(np.log(low), np.log(high), size=S.n * S.n))
    signs = np.array(S.cells, dtype=np.float64)
    return RealMatrix((signs * magnitudes).reshape(S.n, S.n))

def decompose(S: SignPattern) -> Tuple[SignPattern, SignPattern]:
    """(A_plus, A_minus) with S = A_plus + A_minus cellwise"""
    plus = SignPattern(S.n, tuple(max(c, 0) for c in S.cells))
    minus = SignPattern(S.n, tuple(min(c, 0) for c in S.cells))
    return plus, minus

def b_matrix(S: SignPattern) -> SignPattern:
    """B = A_plus - A_minus^T as a {0, +} pattern"""
    plus, minus = decompose(S)
    flipped = minus.transpose()
    return SignPattern(S.n, tuple(1 if p > 0 or m < 0 else 0 for p, m in zip(plus.cells, flipped.cells)))

def is_irreducible(S: SignPattern) -> bool:
    return strongly_connected(digraph_of(S))

def theorem4_excludes(S: SignPattern) -> bool:
    """True proves the pattern does not allow algebraic positivity"""
    return is_irreducible(S) and not is_irreducible(b_matrix(S))

def row_col_necessary(S: SignPattern) -> bool:
    """Every row and column holds a +, or every row and column holds a -"""
    grid = S.to_array()

    def covers(sign: int) -> bool:
        hits = grid == sign
        return bool(np.all(hits.any(axis=1)) and np.all(hits.any(axis=0)))

    return covers(1) or covers(-1)

def uniform_offdiag(S: SignPattern) -> bool:
    """Off-diagonal cells all nonnegative or all nonpositive"""
    off = S.offdiag()
    return all(c >= 0 for c in off) or all(c <= 0 for c in off)
