import numpy as np

from ..exceptions.custom_exceptions import ValidationError
from ..models.matrix import Polynomial, RealMatrix

def poly_eval_matrix(p: Polynomial, A: RealMatrix, max_degree: int = 16) -> RealMatrix:
    """Horner evaluation (((c_d A + c_{d-1} I) A + ...) + c_0 I)"""
    if p.degree > max_degree:
        raise ValidationError(f"Polynomial degree {p.degree} exceeds the cap {max_degree}")

    identity = np.eye(A.n)
    result = p.coeffs[-1] * identity
    for c in reversed(p.coeffs[:-1]):
        result = result @ A.data + c * identity
    return RealMatrix(result)

def matrix_powers(A: RealMatrix, degree: int) -> list:
    """[A^1, ..., A^degree] as arrays"""
    powers = []
    current = np.eye(A.n)
    for _ in range(degree):
        current = current @ A.data
        powers.append(current)
    return powers
