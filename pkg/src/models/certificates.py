from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..exceptions.custom_exceptions import ValidationError
from .enums import Agreement
from .matrix import EigenPair, Polynomial, RealMatrix

@dataclass(frozen=True, eq=False)
class EigenCertificate:
    """Simple real eigenvalue with strictly positive left and right eigenvectors"""
    pair: EigenPair
    min_entry: float
    gap: float

    def to_dict(self) -> Dict[str, Any]:
        return self.pair.to_dict()

@dataclass(frozen=True)
class PolyCertificate:
    """p(x) = k0 + k1 x + ... + k_d x^d with p(A) entrywise positive"""
    offdiag_coeffs: Tuple[float, ...]
    k0: float
    margin: float

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial((self.k0,) + tuple(self.offdiag_coeffs))

    @property
    def degree(self) -> int:
        return len(self.offdiag_coeffs)

    @classmethod
    def from_polynomial(cls, p: Polynomial, A: RealMatrix) -> "PolyCertificate":
        """Rescale p so its homogeneous part has max |k_i| = 1 and record the margin on A"""
        from ..linalg.polyeval import poly_eval_matrix

        homogeneous = np.array(p.coeffs[1:], dtype=np.float64)
        scale = float(np.max(np.abs(homogeneous))) if len(homogeneous) else 0.0
        if scale == 0.0:
            raise ValidationError("A constant polynomial cannot certify algebraic positivity")

        k = tuple(float(c) for c in homogeneous / scale)
        k0 = p.coeffs[0] / scale
        margin = poly_eval_matrix(Polynomial((k0,) + k), A, max_degree=max(len(k), 1)).min_entry()
        return cls(offdiag_coeffs=k, k0=k0, margin=margin)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'k': list(self.offdiag_coeffs),
            'k0': self.k0,
            'margin': self.margin,
        }

@dataclass(frozen=True, eq=False)
class ApVerdict:
    """Reconciled verdict of both oracles"""
    is_ap: bool
    eigen: Optional[EigenCertificate]
    poly: Optional[PolyCertificate]
    agreement: Agreement
    margins: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.is_ap and self.eigen is None and self.poly is None:
            raise ValueError("An AP verdict needs at least one certificate")

    @property
    def borderline(self) -> bool:
        return self.agreement == Agreement.BORDERLINE

    def to_dict(self) -> Dict[str, Any]:
        return {
            'is_ap': self.is_ap,
            'agreement': self.agreement.value,
            'eigen': self.eigen.to_dict() if self.eigen else None,
            'poly': self.poly.to_dict() if self.poly else None,
            'margins': dict(self.margins),
        }
