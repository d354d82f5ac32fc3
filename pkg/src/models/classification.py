from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..exceptions.custom_exceptions import ValidationError
from .enums import EvidenceKind, ShiftRule, SubclassOutcome, Verdict
from .matrix import RealMatrix
from .pattern import EquivTransform, SignPattern

_ALLOWED_EVIDENCE = {
    Verdict.DNA: {EvidenceKind.REDUCIBLE, EvidenceKind.ROW_COL_FAIL, EvidenceKind.THEOREM4,
                  EvidenceKind.TABLE, EvidenceKind.SAMPLED_NONE_AP},
    Verdict.RAP: {EvidenceKind.UNIFORM_OFFDIAG, EvidenceKind.RECIPE, EvidenceKind.TABLE,
                  EvidenceKind.SAMPLED_ALL_AP},
    Verdict.AAP: {EvidenceKind.TABLE, EvidenceKind.SAMPLED_BOTH},
}

_NON_PROOF = {EvidenceKind.SAMPLED_ALL_AP, EvidenceKind.SAMPLED_NONE_AP}

@dataclass(frozen=True)
class Evidence:
    """How a verdict was reached; ``detail`` holds JSON-ready supporting data"""
    kind: EvidenceKind
    detail: Dict[str, Any] = field(default_factory=dict, compare=True, hash=False)

    @property
    def is_proof(self) -> bool:
        return self.kind not in _NON_PROOF

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'detail': dict(self.detail)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Evidence":
        return cls(kind=EvidenceKind(data['kind']), detail=dict(data.get('detail', {})))

@dataclass(frozen=True)
class Classification:
    """Verdict for a sign pattern plus the evidence that established it"""
    pattern: SignPattern
    verdict: Verdict
    evidence: Evidence
    entry_id: Optional[str] = None

    def __post_init__(self):
        if self.evidence.kind not in _ALLOWED_EVIDENCE[self.verdict]:
            raise ValidationError(
                f"{self.evidence.kind.value} evidence cannot support a {self.verdict.value} verdict"
            )

    @property
    def proven(self) -> bool:
        return self.evidence.is_proof

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pattern': self.pattern.to_text(),
            'verdict': self.verdict.value,
            'evidence': self.evidence.to_dict(),
            'entry_id': self.entry_id,
            'proven': self.proven,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Classification":
        return cls(
            pattern=SignPattern.from_text(data['pattern']),
            verdict=Verdict(data['verdict']),
            evidence=Evidence.from_dict(data['evidence']),
            entry_id=data.get('entry_id'),
        )

@dataclass(frozen=True)
class Clause:
    """Every lhs expression stands in relation ``op`` to every rhs expression"""
    lhs: Tuple[str, ...]
    op: str
    rhs: Tuple[str, ...]

    def to_text(self) -> str:
        def side(exprs):
            return exprs[0] if len(exprs) == 1 else '{' + ', '.join(exprs) + '}'
        return f"{side(self.lhs)} {self.op} {side(self.rhs)}"

@dataclass(frozen=True)
class Recipe:
    """p(x) = k2 x^2 + k1 x + k0 with k1 = r * k2.

    r comes from ``ratio_fixed`` or from the open interval (ratio_lower,
    ratio_upper); ``k0`` lists lower bounds on the constant term, or is
    ``("diagonal",)`` for the bound read off the diagonal of -k1 A - k2 A^2.
    """
    k2_sign: int
    ratio_lower: Optional[str] = None
    ratio_upper: Optional[str] = None
    ratio_fixed: Optional[float] = None
    k0: Tuple[str, ...] = ('diagonal',)
    printed: str = ''

    @property
    def diagonal_rule(self) -> bool:
        return self.k0 == ('diagonal',)

@dataclass(frozen=True)
class Witness:
    """Concrete matrix (row-major values) and the AP status printed for it"""
    values: Tuple[float, ...]
    ap: bool
    source: int = 0
    pattern_mismatch: bool = False

    def matrix(self) -> RealMatrix:
        n = int(round(len(self.values) ** 0.5))
        return RealMatrix.from_rows(
            [self.values[i * n:(i + 1) * n] for i in range(n)]
        )

@dataclass(frozen=True)
class TableEntry:
    """One row of the 3x3 classification table"""
    id: str
    digraph: int
    template: str
    label: Verdict
    condition: Tuple[Clause, ...] = ()
    recipe: Optional[Recipe] = None
    witnesses: Tuple[Witness, ...] = ()
    suspect: bool = False
    notes: str = ''

    @property
    def has_condition(self) -> bool:
        return bool(self.condition)

    def condition_text(self) -> str:
        return ' and '.join(clause.to_text() for clause in self.condition)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'digraph': self.digraph,
            'template': self.template,
            'label': self.label.value,
            'condition': self.condition_text() or None,
            'recipe': self.recipe.printed if self.recipe else None,
            'witnesses': len(self.witnesses),
            'suspect': self.suspect,
        }

@dataclass(frozen=True)
class WitnessResult:
    """Outcome of running both oracles on one printed witness"""
    entry_id: str
    index: int
    matrix: Tuple[Tuple[float, ...], ...]
    expected_ap: bool
    observed_ap: bool
    agreement: str
    eigen_margin: float
    lp_margin: float
    borderline: bool = False
    pattern_mismatch: bool = False

    @property
    def match(self) -> bool:
        return self.expected_ap == self.observed_ap

    def to_dict(self) -> Dict[str, Any]:
        return {
            'entry_id': self.entry_id,
            'index': self.index,
            'matrix': [list(row) for row in self.matrix],
            'expected_ap': self.expected_ap,
            'observed_ap': self.observed_ap,
            'match': self.match,
            'agreement': self.agreement,
            'eigen_margin': self.eigen_margin,
            'lp_margin': self.lp_margin,
            'borderline': self.borderline,
            'pattern_mismatch': self.pattern_mismatch,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WitnessResult":
        return cls(
            entry_id=data['entry_id'],
            index=data['index'],
            matrix=tuple(tuple(float(x) for x in row) for row in data['matrix']),
            expected_ap=data['expected_ap'],
            observed_ap=data['observed_ap'],
            agreement=data['agreement'],
            eigen_margin=data['eigen_margin'],
            lp_margin=data['lp_margin'],
            borderline=data.get('borderline', False),
            pattern_mismatch=data.get('pattern_mismatch', False),
        )

@dataclass(frozen=True)
class HarnessResult:
    """Seeded consistency run of one table entry (``check`` is condition or recipe)"""
    entry_id: str
    check: str
    total: int
    passed: int
    skipped: int = 0
    worst: Optional[float] = None
    counterexamples: Tuple[Tuple[Tuple[float, ...], ...], ...] = ()

    @property
    def failed(self) -> int:
        return self.total - self.passed - self.skipped

    @property
    def clean(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'entry_id': self.entry_id,
            'check': self.check,
            'total': self.total,
            'passed': self.passed,
            'skipped': self.skipped,
            'failed': self.failed,
            'worst': self.worst,
            'counterexamples': [[list(row) for row in m] for m in self.counterexamples],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "HarnessResult":
        return cls(
            entry_id=data['entry_id'],
            check=data['check'],
            total=data['total'],
            passed=data['passed'],
            skipped=data.get('skipped', 0),
            worst=data.get('worst'),
            counterexamples=tuple(
                tuple(tuple(float(x) for x in row) for row in m) for m in data.get('counterexamples', [])
            ),
        )

@dataclass(frozen=True, eq=False)
class SubclassVerdict:
    """Holds(rule, transform), Fails(counterexample) or Unknown"""
    outcome: SubclassOutcome
    rule: Optional[ShiftRule] = None
    transform: Optional[EquivTransform] = None
    counterexample: Optional[RealMatrix] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'outcome': self.outcome.value,
            'rule': self.rule.value if self.rule else None,
            'transform': self.transform.to_dict() if self.transform else None,
            'counterexample': self.counterexample.to_list() if self.counterexample is not None else None,
        }
