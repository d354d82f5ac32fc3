import numpy as np

from ..models.matrix import Polynomial, RealMatrix

def char_poly(A: RealMatrix) -> Polynomial:
    """det(xI - A) by the Faddeev-LeVerrier recurrence; monic, degree n"""
    n = A.n
    a = A.data
    identity = np.eye(n)
    coeffs = [0.0] * (n + 1)
    coeffs[n] = 1.0

    m = np.zeros((n, n))
    for k in range(1, n + 1):
        m = a @ m + coeffs[n - k + 1] * identity
        coeffs[n - k] = -float(np.trace(a @ m)) / k

    return Polynomial(tuple(coeffs))
