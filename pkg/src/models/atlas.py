from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .classification import Classification, HarnessResult, WitnessResult
from .enums import DiscrepancyKind, Verdict

@dataclass(frozen=True)
class ClassRecord:
    """One canonical irreducible pattern class and how it was classified"""
    pattern: str
    size: int
    classification: Classification
    entry_ids: Tuple[str, ...] = ()
    printed_label: Optional[str] = None
    corroboration: Dict[str, int] = field(default_factory=dict, hash=False)

    @property
    def verdict(self) -> Verdict:
        return self.classification.verdict

    @property
    def label_differs(self) -> bool:
        return self.printed_label is not None and self.printed_label != self.verdict.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pattern': self.pattern,
            'size': self.size,
            'classification': self.classification.to_dict(),
            'entry_ids': list(self.entry_ids),
            'printed_label': self.printed_label,
            'label_differs': self.label_differs,
            'corroboration': dict(self.corroboration),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassRecord":
        return cls(
            pattern=data['pattern'],
            size=data['size'],
            classification=Classification.from_dict(data['classification']),
            entry_ids=tuple(data.get('entry_ids', [])),
            printed_label=data.get('printed_label'),
            corroboration=dict(data.get('corroboration', {})),
        )

@dataclass(frozen=True)
class DigraphGroup:
    """Classes sharing one irreducible digraph up to relabeling and reversal"""
    index: int
    digraph: str
    edge_count: int
    table_digraphs: Tuple[int, ...]
    classes: Tuple[ClassRecord, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'digraph': self.digraph,
            'edge_count': self.edge_count,
            'table_digraphs': list(self.table_digraphs),
            'classes': [c.to_dict() for c in self.classes],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DigraphGroup":
        return cls(
            index=data['index'],
            digraph=data['digraph'],
            edge_count=data['edge_count'],
            table_digraphs=tuple(data.get('table_digraphs', [])),
            classes=tuple(ClassRecord.from_dict(c) for c in data['classes']),
        )

@dataclass(frozen=True)
class Discrepancy:
    """Finding that contradicts or qualifies a table entry"""
    kind: DiscrepancyKind
    entry_id: str
    message: str
    pattern: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'entry_id': self.entry_id,
            'message': self.message,
            'pattern': self.pattern,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Discrepancy":
        return cls(
            kind=DiscrepancyKind(data['kind']),
            entry_id=data['entry_id'],
            message=data['message'],
            pattern=data.get('pattern'),
        )

@dataclass
class AtlasReport:
    """Full reproduction of the 3x3 classification with its verification results"""
    digraph_groups: List[DigraphGroup]
    totals: Dict[str, int]
    witness_report: List[WitnessResult] = field(default_factory=list)
    harness: List[HarnessResult] = field(default_factory=list)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    table_misses: List[str] = field(default_factory=list)
    coverage_gaps: List[str] = field(default_factory=list)
    soundness_violations: List[str] = field(default_factory=list)
    run_meta: Dict[str, Any] = field(default_factory=dict)
    elapsed_seconds: Optional[float] = field(default=None, compare=False)

    @property
    def class_count(self) -> int:
        return sum(len(g.classes) for g in self.digraph_groups)

    @property
    def clean(self) -> bool:
        return not self.discrepancies

    @property
    def passed(self) -> bool:
        """No table miss and no theory-stage soundness violation"""
        return not self.table_misses and not self.soundness_violations

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            'run_meta': dict(self.run_meta),
            'totals': dict(self.totals),
            'class_count': self.class_count,
            'digraph_groups': [g.to_dict() for g in self.digraph_groups],
            'witness_report': [w.to_dict() for w in self.witness_report],
            'harness': [h.to_dict() for h in self.harness],
            'discrepancies': [d.to_dict() for d in self.discrepancies],
            'table_misses': list(self.table_misses),
            'coverage_gaps': list(self.coverage_gaps),
            'soundness_violations': list(self.soundness_violations),
        }
        if include_timing and self.elapsed_seconds is not None:
            data['elapsed_seconds'] = self.elapsed_seconds
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AtlasReport":
        return cls(
            digraph_groups=[DigraphGroup.from_dict(g) for g in data['digraph_groups']],
            totals=dict(data['totals']),
            witness_report=[WitnessResult.from_dict(w) for w in data.get('witness_report', [])],
            harness=[HarnessResult.from_dict(h) for h in data.get('harness', [])],
            discrepancies=[Discrepancy.from_dict(d) for d in data.get('discrepancies', [])],
            table_misses=list(data.get('table_misses', [])),
            coverage_gaps=list(data.get('coverage_gaps', [])),
            soundness_violations=list(data.get('soundness_violations', [])),
            run_meta=dict(data.get('run_meta', {})),
            elapsed_seconds=data.get('elapsed_seconds'),
        )
