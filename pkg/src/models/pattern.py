from dataclasses import dataclass
from typing import Any, Dict, Iterable, Sequence, Tuple

import numpy as np

from ..exceptions.custom_exceptions import DimensionMismatch, ValidationError
from ..utils.validators import PatternTextValidator
from .enums import Sign
from .matrix import RealMatrix

@dataclass(frozen=True, order=True)
class SignPattern:
    """n x n grid over {-, 0, +}, cells stored row-major as -1/0/1.

    Ordering compares cells lexicographically, so Minus < Zero < Plus.
    """
    n: int
    cells: Tuple[int, ...]

    def __post_init__(self):
        cells = tuple(int(c) for c in self.cells)
        if self.n < 1 or len(cells) != self.n * self.n:
            raise ValidationError(f"Sign pattern needs {self.n}x{self.n} cells, got {len(cells)}")
        if any(c not in (-1, 0, 1) for c in cells):
            raise ValidationError("Sign pattern cells must be -1, 0 or 1")
        object.__setattr__(self, 'cells', cells)

    @classmethod
    def from_text(cls, text: str) -> "SignPattern":
        """Parse ``0+0/+0-/+0+`` style text"""
        n, flat = PatternTextValidator.split_rows(text)
        return cls(n, tuple(Sign.from_symbol(c) for c in flat))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "SignPattern":
        rows = [list(r) for r in rows]
        return cls(len(rows), tuple(int(c) for row in rows for c in row))

    @classmethod
    def zeros(cls, n: int) -> "SignPattern":
        return cls(n, (0,) * (n * n))

    @classmethod
    def full(cls, n: int, sign: Sign) -> "SignPattern":
        return cls(n, (int(sign),) * (n * n))

    def cell(self, i: int, j: int) -> Sign:
        return Sign(self.cells[i * self.n + j])

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.cells[i * self.n:(i + 1) * self.n] for i in range(self.n))

    def to_array(self) -> np.ndarray:
        return np.array(self.cells, dtype=np.int8).reshape(self.n, self.n)

    def to_text(self) -> str:
        return '/'.join(''.join(Sign(c).symbol for c in row) for row in self.rows())

    def __str__(self) -> str:
        return self.to_text()

    def transpose(self) -> "SignPattern":
        n = self.n
        return SignPattern(n, tuple(self.cells[j * n + i] for i in range(n) for j in range(n)))

    def negate(self) -> "SignPattern":
        return SignPattern(self.n, tuple(-c for c in self.cells))

    def permute(self, perm: Sequence[int]) -> "SignPattern":
        """Pattern U with U[i][j] = S[perm[i]][perm[j]]"""
        n = self.n
        return SignPattern(n, tuple(self.cells[perm[i] * n + perm[j]] for i in range(n) for j in range(n)))

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.cells[i * self.n + i] for i in range(self.n))

    def offdiag(self) -> Tuple[int, ...]:
        """Off-diagonal cells in row-major order"""
        n = self.n
        return tuple(self.cells[i * n + j] for i in range(n) for j in range(n) if i != j)

    def with_diagonal(self, diagonal: Sequence[int]) -> "SignPattern":
        cells = list(self.cells)
        for i, value in enumerate(diagonal):
            cells[i * self.n + i] = int(value)
        return SignPattern(self.n, tuple(cells))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.cells)

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'pattern': self.to_text()}

@dataclass(frozen=True)
class EquivTransform:
    """Element of the sign-pattern equivalence group.

    Applying it transposes (when ``transposed``), then relabels with
    U[i][j] = V[perm[i]][perm[j]], then negates (when ``negated``). The three
    generators commute, so the group is S_n x Z2 x Z2.
    """
    perm: Tuple[int, ...]
    transposed: bool = False
    negated: bool = False

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValidationError(f"Not a permutation: {perm}")
        object.__setattr__(self, 'perm', perm)

    @classmethod
    def identity(cls, n: int) -> "EquivTransform":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply(self, S: SignPattern) -> SignPattern:
        self._check_dim(S.n)
        result = S.transpose() if self.transposed else S
        result = result.permute(self.perm)
        return result.negate() if self.negated else result

    def apply_matrix(self, X: RealMatrix) -> RealMatrix:
        self._check_dim(X.n)
        data = X.data.T if self.transposed else X.data
        data = data[np.ix_(self.perm, self.perm)]
        return RealMatrix(-data if self.negated else data)

    def compose(self, other: "EquivTransform") -> "EquivTransform":
        """self after other: compose(g, h).apply(S) == g.apply(h.apply(S))"""
        self._check_dim(other.n)
        return EquivTransform(
            perm=tuple(other.perm[self.perm[i]] for i in range(self.n)),
            transposed=self.transposed != other.transposed,
            negated=self.negated != other.negated,
        )

    def inverse(self) -> "EquivTransform":
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        return EquivTransform(tuple(inv), self.transposed, self.negated)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not self.transposed and not self.negated

    def to_dict(self) -> Dict[str, Any]:
        return {
            'perm': list(self.perm),
            'transposed': self.transposed,
            'negated': self.negated,
        }

    def _check_dim(self, n: int) -> None:
        if n != self.n:
            raise DimensionMismatch(f"Transform acts on dimension {self.n}, got {n}")
