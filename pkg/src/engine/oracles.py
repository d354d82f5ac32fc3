"""The two algebraic-positivity oracles and their reconciliation.

The spectral oracle looks for a simple real eigenvalue with strictly positive
left and right eigenvectors. The certificate oracle solves a small LP for
coefficients k_1..k_d making the off-diagonal part of sum k_i A^i positive,
then absorbs the diagonal with a constant term.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from ..config.config import NumericsConfig
from ..exceptions.custom_exceptions import ValidationError
from ..linalg.eigen import eigen_all
from ..linalg.polyeval import matrix_powers, poly_eval_matrix
from ..models.certificates import ApVerdict, EigenCertificate, PolyCertificate
from ..models.enums import Agreement
from ..models.matrix import Polynomial, RealMatrix
from .simplex import box_constraints, maximize

logger = logging.getLogger(__name__)

DEFAULT_NUMERICS = NumericsConfig(
    tol=1e-9,
    borderline=1e-6,
    lp_eps=1e-9,
    max_degree=0,
    eigen_max_n=8,
    poly_max_degree=16,
    root_max_iter=500,
    pivot_budget=500,
)

def eigen_ap_check(A: RealMatrix, tol: float = 1e-9, max_n: int = 8,
                   max_iter: int = 500) -> Optional[EigenCertificate]:
    certificate, _, _ = eigen_scan(A, tol, max_n, max_iter)
    return certificate

def eigen_scan(A: RealMatrix, tol: float, max_n: int,
                max_iter: int) -> Tuple[Optional[EigenCertificate], float, float]:
    """Certificate (if any), best positivity score over real pairs and that pair's gap"""
    certificate = None
    best_score, best_gap = -np.inf, np.inf

    for pair in eigen_all(A, tol=tol, max_n=max_n, max_iter=max_iter):
        score = pair.min_entry
        if score > best_score:
            best_score, best_gap = score, pair.gap
        if certificate is None and pair.simple and score > tol:
            certificate = EigenCertificate(pair=pair, min_entry=score, gap=pair.gap)

    if certificate is not None:
        best_score, best_gap = certificate.min_entry, certificate.gap
    return certificate, float(best_score), float(best_gap)

def certificate_search(A: RealMatrix, max_degree: Optional[int] = None, eps: float = 1e-9,
                       pivot_budget: int = 500) -> Optional[PolyCertificate]:
    certificate, _ = _lp_search(A, max_degree, eps, pivot_budget)
    return certificate

def _lp_search(A: RealMatrix, max_degree: Optional[int], eps: float,
               pivot_budget: int) -> Tuple[Optional[PolyCertificate], float]:
    """Certificate (if any) and the LP optimum t on the rescaled matrix"""
    degree = A.n - 1 if max_degree is None else max_degree
    if degree < 1:
        raise ValidationError("max_degree must be at least 1")

    scale = A.norm_inf()
    if scale == 0.0:
        return None, 0.0

    # powers of A / ||A|| keep every constraint row of order one
    powers = matrix_powers(RealMatrix(A.data / scale), degree)
    offdiag = ~np.eye(A.n, dtype=bool)
    rows = np.array([power[offdiag] for power in powers]).T

    # shift k_i = u_i - 1 and t = w - t0 so that every variable is >= 0
    # and the slack basis is feasible
    t0 = float(sum(np.max(np.abs(power)) for power in powers)) + 1.0
    box_a, box_b = box_constraints(degree, 2.0)
    a_ub = np.vstack((
        np.hstack((-rows, np.ones((rows.shape[0], 1)))),
        np.hstack((box_a, np.zeros((degree, 1)))),
    ))
    b_ub = np.concatenate((t0 - rows.sum(axis=1), box_b))
    c = np.zeros(degree + 1)
    c[-1] = 1.0

    result = maximize(c, a_ub, b_ub, pivot_budget=pivot_budget)
    t = result.value - t0
    logger.debug(f"LP optimum t={t:.3e} after {result.pivots} pivots (degree {degree})")
    if t <= eps:
        return None, t

    scaled = result.x[:degree] - 1.0
    k = np.array([scaled[i] / scale ** (i + 1) for i in range(degree)])
    k = k / np.max(np.abs(k))

    homogeneous = np.zeros((A.n, A.n))
    for coef, power in zip(k, matrix_powers(A, degree)):
        homogeneous += coef * power
    t_h = float(np.min(homogeneous[offdiag]))
    k0 = max(0.0, float(np.max(t_h - np.diag(homogeneous))))

    p = Polynomial((k0,) + tuple(float(x) for x in k))
    margin = poly_eval_matrix(p, A, max_degree=max(degree, 16)).min_entry()
    if margin <= 0.0:
        logger.debug(f"LP optimum {t:.3e} did not survive rescaling (margin {margin:.3e})")
        return None, t
    return PolyCertificate(offdiag_coeffs=tuple(p.coeffs[1:]), k0=k0, margin=margin), t

def is_ap(A: RealMatrix, numerics: Optional[NumericsConfig] = None) -> ApVerdict:
    cfg = numerics or DEFAULT_NUMERICS
    eigen, score, gap = eigen_scan(A, cfg.tol, cfg.eigen_max_n, cfg.root_max_iter)
    poly, t = _lp_search(A, cfg.degree_for(A.n), cfg.lp_eps, cfg.pivot_budget)

    margins = {'eigen_min_entry': score, 'eigen_gap': gap, 'lp_t': t}
    if (eigen is None) == (poly is None):
        agreement = Agreement.AGREE
    elif abs(score) < cfg.borderline or gap < cfg.borderline or abs(t) < cfg.borderline:
        agreement = Agreement.BORDERLINE
        logger.warning(f"Oracles disagree inside the borderline band: {margins}")
    else:
        agreement = Agreement.EIGEN_ONLY if eigen is not None else Agreement.POLY_ONLY
        logger.warning(f"Oracles disagree ({agreement.value}): {margins}")

    return ApVerdict(
        is_ap=eigen is not None,
        eigen=eigen,
        poly=poly,
        agreement=agreement,
        margins=margins,
    )
