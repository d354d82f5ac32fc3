from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from ..exceptions.custom_exceptions import ValidationError
from ..utils.validators import MatrixTextValidator

@dataclass(frozen=True, eq=False)
class RealMatrix:
    """Dense n x n real matrix, immutable after construction"""
    data: np.ndarray

    def __post_init__(self):
        array = np.array(self.data, dtype=np.float64, copy=True)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValidationError(f"Matrix must be square, got shape {array.shape}")
        if array.shape[0] < 2:
            raise ValidationError("Matrix dimension must be at least 2")
        if not np.all(np.isfinite(array)):
            raise ValidationError("Matrix entries must be finite")
        array.setflags(write=False)
        object.__setattr__(self, 'data', array)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[float]]) -> "RealMatrix":
        return cls(np.array([list(r) for r in rows], dtype=np.float64))

    @classmethod
    def from_text(cls, text: str) -> "RealMatrix":
        """Parse ``"1 2; 3 4"`` style text"""
        return cls.from_rows(MatrixTextValidator.parse(text))

    @classmethod
    def identity(cls, n: int) -> "RealMatrix":
        return cls(np.eye(n))

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def entries(self) -> Tuple[float, ...]:
        """Row-major entries"""
        return tuple(float(x) for x in self.data.ravel())

    def __getitem__(self, index):
        return self.data[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    __hash__ = None

    def transpose(self) -> "RealMatrix":
        return RealMatrix(self.data.T)

    def norm_inf(self) -> float:
        """Max absolute row sum"""
        return float(np.max(np.sum(np.abs(self.data), axis=1)))

    def min_entry(self) -> float:
        return float(np.min(self.data))

    def min_offdiag(self) -> float:
        mask = ~np.eye(self.n, dtype=bool)
        return float(np.min(self.data[mask]))

    def to_text(self) -> str:
        return '; '.join(' '.join(repr(float(x)) for x in row) for row in self.data)

    def to_list(self):
        return [[float(x) for x in row] for row in self.data]

@dataclass(frozen=True)
class Polynomial:
    """Real polynomial, coeffs[i] is the coefficient of x**i"""
    coeffs: Tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise ValidationError("Polynomial needs at least one coefficient")
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self) -> int:
        """Formal degree (leading zeros included)"""
        return len(self.coeffs) - 1

    def trimmed(self) -> "Polynomial":
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs.pop()
        return Polynomial(tuple(coeffs))

    def __call__(self, x):
        result = 0.0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((0.0,))
        return Polynomial(tuple(P.polyder(np.array(self.coeffs))))

    def compose_affine(self, scale: float, shift: float) -> "Polynomial":
        """q(x) = p(scale * x + shift)"""
        inner = np.array([shift, scale])
        result = np.array([self.coeffs[-1]])
        for c in reversed(self.coeffs[:-1]):
            result = P.polyadd(P.polymul(result, inner), [c])
        return Polynomial(tuple(result))

    def to_dict(self) -> Dict[str, Any]:
        return {'coeffs': list(self.coeffs)}

@dataclass(frozen=True, eq=False)
class EigenPair:
    """Real eigenvalue with normalized right and left eigenvectors"""
    value: float
    right: np.ndarray
    left: np.ndarray
    gap: float
    simple: bool = True
    residual: float = field(default=0.0)

    @property
    def min_entry(self) -> float:
        """Smallest coordinate across both vectors"""
        return float(min(np.min(self.right), np.min(self.left)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'lambda': self.value,
            'right': [float(x) for x in self.right],
            'left': [float(x) for x in self.left],
            'gap': self.gap,
        }
