"""Transforms under which algebraic positivity is preserved"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..exceptions.custom_exceptions import DegenerateScale, ValidationError
from ..models.enums import ClosureKind
from ..models.matrix import Polynomial, RealMatrix

@dataclass(frozen=True)
class ClosureTransform:
    """One of Transpose, Negate, PermSim(perm) or Affine(alpha, beta).

    PermSim maps A to B with B[i][j] = A[perm[i]][perm[j]]; Affine maps A to
    alpha * I + beta * A.
    """
    kind: ClosureKind
    perm: Optional[Tuple[int, ...]] = None
    alpha: float = 0.0
    beta: float = 1.0

    @classmethod
    def transpose(cls) -> "ClosureTransform":
        return cls(ClosureKind.TRANSPOSE)

    @classmethod
    def negate(cls) -> "ClosureTransform":
        return cls(ClosureKind.NEGATE)

    @classmethod
    def perm_sim(cls, perm) -> "ClosureTransform":
        return cls(ClosureKind.PERM_SIM, perm=tuple(int(p) for p in perm))

    @classmethod
    def affine(cls, alpha: float, beta: float) -> "ClosureTransform":
        return cls(ClosureKind.AFFINE, alpha=float(alpha), beta=float(beta))

def closure_transform(A: RealMatrix, which: ClosureTransform) -> RealMatrix:
    if which.kind == ClosureKind.TRANSPOSE:
        return A.transpose()
    if which.kind == ClosureKind.NEGATE:
        return RealMatrix(-A.data)
    if which.kind == ClosureKind.PERM_SIM:
        perm = _checked_perm(which.perm, A.n)
        return RealMatrix(A.data[np.ix_(perm, perm)])
    if which.beta == 0.0:
        raise DegenerateScale("Affine closure transform needs beta != 0")
    if which.alpha == 0.0 and which.beta == 1.0:
        return A
    return RealMatrix(which.alpha * np.eye(A.n) + which.beta * A.data)

def transport_polynomial(p: Polynomial, which: ClosureTransform) -> Polynomial:
    """q with q(T(A)) equal to p(A) up to the same transpose or permutation"""
    if which.kind == ClosureKind.NEGATE:
        return p.compose_affine(-1.0, 0.0)
    if which.kind == ClosureKind.AFFINE:
        if which.beta == 0.0:
            raise DegenerateScale("Affine closure transform needs beta != 0")
        return p.compose_affine(1.0 / which.beta, -which.alpha / which.beta)
    return p

def _checked_perm(perm, n: int) -> list:
    if perm is None or sorted(perm) != list(range(n)):
        raise ValidationError(f"Not a permutation of 0..{n - 1}: {perm}")
    return list(perm)
