"""Scalar-shift subclass relation between sign patterns.

B is a scalar-shift subclass of A when every member X of Q(B) can be shifted
to X + alpha * I with a sign pattern equivalent to A. Uniform shift rules give
sound positive answers; otherwise seeded falsification either finds a member
that no shift carries into A's class or gives up with Unknown.
"""
import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exceptions.custom_exceptions import DimensionMismatch
from ..models.classification import SubclassVerdict
from ..models.enums import ShiftRule, SubclassOutcome
from ..models.matrix import RealMatrix
from ..models.pattern import EquivTransform, SignPattern
from ..utils.helpers import SeedLike, make_rng
from .algebra import DEFAULT_MAGNITUDES, pattern_of, sample
from .equivalence import equivalent, group_elements

logger = logging.getLogger(__name__)

def _small_positive(sign: int) -> int:
    return 1 if sign == 0 else sign

def _small_negative(sign: int) -> int:
    return -1 if sign == 0 else sign

_RULES = (
    (ShiftRule.IDENTITY, lambda d: tuple(d)),
    (ShiftRule.SMALL_POSITIVE, lambda d: tuple(_small_positive(s) for s in d)),
    (ShiftRule.SMALL_NEGATIVE, lambda d: tuple(_small_negative(s) for s in d)),
    (ShiftRule.LARGE_POSITIVE, lambda d: (1,) * len(d)),
    (ShiftRule.LARGE_NEGATIVE, lambda d: (-1,) * len(d)),
)

def _diagonal_targets(B: SignPattern, A: SignPattern) -> Sequence[Tuple[Tuple[int, ...], EquivTransform]]:
    """Diagonals of the members of A's orbit whose off-diagonal part equals B's"""
    targets = []
    seen = set()
    for g in group_elements(A.n):
        image = g.apply(A)
        if image.offdiag() == B.offdiag() and image.diagonal() not in seen:
            seen.add(image.diagonal())
            targets.append((image.diagonal(), g))
    return targets

def subclass_check(B: SignPattern, A: SignPattern, seed: SeedLike = 0, samples: int = 50,
                   magnitude_profile: Tuple[float, float] = DEFAULT_MAGNITUDES) -> SubclassVerdict:
    if B.n != A.n:
        raise DimensionMismatch(f"Patterns of dimension {B.n} and {A.n}")

    targets = _diagonal_targets(B, A)
    for rule, shifted in _RULES:
        reached = shifted(B.diagonal())
        for diagonal, g in targets:
            if diagonal == reached:
                return SubclassVerdict(SubclassOutcome.HOLDS, rule=rule, transform=g)

    rng = make_rng(seed)
    for _ in range(samples):
        X = sample(B, rng, magnitude_profile)
        if find_shift(X, A) is None:
            logger.debug(f"No shift carries a member of Q({B}) into the class of {A}")
            return SubclassVerdict(SubclassOutcome.FAILS, counterexample=X)
    return SubclassVerdict(SubclassOutcome.UNKNOWN)

def find_shift(X: RealMatrix, A: SignPattern) -> Optional[float]:
    """Some alpha with pattern(X + alpha I) equivalent to A, or None.

    The pattern of X + alpha I is constant between the breakpoints -x_ii, so
    the breakpoints, their midpoints and one point beyond each end cover
    every case.
    """
    if X.n != A.n:
        raise DimensionMismatch(f"Matrix of dimension {X.n}, pattern of dimension {A.n}")
    breakpoints = np.unique(-np.diag(X.data))
    candidates = list(breakpoints)
    candidates += list((breakpoints[:-1] + breakpoints[1:]) / 2.0)
    candidates += [breakpoints[0] - 1.0, breakpoints[-1] + 1.0]

    identity = np.eye(X.n)
    for alpha in sorted(candidates, key=abs):
        shifted = RealMatrix(X.data + alpha * identity)
        if equivalent(pattern_of(shifted), A) is not None:
            return float(alpha)
    return None
