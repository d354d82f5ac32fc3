"""Exhaustive 3x3 atlas: enumerate, deduplicate, classify and cross-check against the table"""
import logging
import time
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from ..classify.classifier import classify
from ..classify.table import ClassifierTable, default_table
from ..classify.witnesses import (
    check_condition_consistency,
    check_recipe_soundness,
    verify_witnesses,
    witness_summary,
)
from ..config.config import Config
from ..engine.oracles import eigen_scan
from ..graphs.digraph import (
    check_census,
    census,
    digraph_canonical,
    digraph_of,
    enumerate_irreducible_3digraphs,
    strongly_connected,
)
from ..models.atlas import AtlasReport, ClassRecord, DigraphGroup, Discrepancy
from ..models.classification import HarnessResult, TableEntry, WitnessResult
from ..models.enums import Agreement, DiscrepancyKind, EvidenceKind, Verdict
from ..models.pattern import SignPattern
from ..patterns.algebra import sample
from ..patterns.equivalence import canonical_form
from ..utils.helpers import derive_seed, make_rng

logger = logging.getLogger(__name__)

ATLAS_N = 3
HARNESS_SEED_OFFSET = 100_000

_THEORY_DNA = {EvidenceKind.REDUCIBLE, EvidenceKind.ROW_COL_FAIL, EvidenceKind.THEOREM4}
_THEORY = _THEORY_DNA | {EvidenceKind.UNIFORM_OFFDIAG}
_SAMPLED = {EvidenceKind.SAMPLED_BOTH, EvidenceKind.SAMPLED_ALL_AP, EvidenceKind.SAMPLED_NONE_AP}

def irreducible_classes(n: int = ATLAS_N) -> Dict[SignPattern, int]:
    """Canonical representative -> number of concrete irreducible patterns in its class"""
    sizes: Counter = Counter()
    for cells in product((-1, 0, 1), repeat=n * n):
        S = SignPattern(n, cells)
        if strongly_connected(digraph_of(S)):
            sizes[canonical_form(S)[0]] += 1
    return dict(sorted(sizes.items()))

class AtlasBuilder:
    """Builds the atlas report; classification fans out over canonical classes"""

    def __init__(self, config: Optional[Config] = None, table: Optional[ClassifierTable] = None):
        self.config = config or Config()
        self.table = table or default_table()
        self.executor = ThreadPoolExecutor(max_workers=self.config.sampling.workers)

    def build(self) -> AtlasReport:
        started = time.perf_counter()
        cfg = self.config
        try:
            # Enumerate digraphs
            digraphs = enumerate_irreducible_3digraphs()
            check_census(digraphs)
            logger.info(f"Digraph census {census(digraphs)} ({len(digraphs)} classes)")

            # Enumerate pattern classes
            classes = irreducible_classes()
            logger.info(f"{len(classes)} canonical irreducible classes from "
                        f"{sum(classes.values())} concrete patterns")

            # Classify concurrently
            items = list(enumerate(classes.items()))
            records = list(tqdm(
                self.executor.map(self._process_class, items),
                total=len(items),
                desc="Classifying",
                disable=not cfg.output.show_progress,
            ))

            # Group and verify table
            groups = self._group(records, digraphs)
            witness_report, harness = self._verify_table()
        except Exception as e:
            logger.error(f"Atlas build failed: {e}")
            raise
        finally:
            self.executor.shutdown(wait=True)

        # Assemble report
        report = AtlasReport(
            digraph_groups=groups,
            totals=self._totals(records),
            witness_report=witness_report,
            harness=harness,
            run_meta=self._run_meta(records, digraphs),
            elapsed_seconds=round(time.perf_counter() - started, 3),
        )
        self._cross_check(report, records, witness_report, harness)
        logger.info(f"Atlas built: {report.totals}, {len(report.discrepancies)} discrepancies, "
                    f"{len(report.table_misses)} table misses")
        return report

    def _process_class(self, item: Tuple[int, Tuple[SignPattern, int]]) -> ClassRecord:
        index, (S, size) = item
        classify_seed, sample_seed = derive_seed(self.config.sampling.seed, index).spawn(2)
        classification = classify(S, self.config, self.table, seed=classify_seed)

        matches = self.table.match_entries(S)
        entry_ids = tuple(entry.id for entry, _ in matches)
        printed = matches[0][0].label.value if matches else None
        logger.debug(f"{S}: {classification.verdict.value} via {classification.evidence.kind.value}, "
                     f"entries {entry_ids}")
        return ClassRecord(
            pattern=S.to_text(),
            size=size,
            classification=classification,
            entry_ids=entry_ids,
            printed_label=printed,
            corroboration=self._corroborate(S, sample_seed),
        )

    def _corroborate(self, S: SignPattern, seed) -> Dict[str, int]:
        """Spectral verdict counts over seeded members of Q(S)"""
        numerics, sampling = self.config.numerics, self.config.sampling
        rng = make_rng(seed)
        counts = {'ap': 0, 'not_ap': 0, 'inconclusive': 0}
        for _ in range(sampling.samples):
            X = sample(S, rng, (sampling.magnitude_low, sampling.magnitude_high))
            certificate, score, gap = eigen_scan(X, numerics.tol, numerics.eigen_max_n,
                                                 numerics.root_max_iter)
            if abs(score) < numerics.borderline or gap < numerics.borderline:
                counts['inconclusive'] += 1
            elif certificate is not None:
                counts['ap'] += 1
            else:
                counts['not_ap'] += 1
        return counts

    def _group(self, records: List[ClassRecord], digraphs) -> List[DigraphGroup]:
        members = defaultdict(list)
        for record in records:
            key = digraph_canonical(digraph_of(SignPattern.from_text(record.pattern)))
            members[key].append(record)

        groups = []
        for index, G in enumerate(digraphs, start=1):
            classes = tuple(members.get(G, ()))
            table_digraphs = sorted({
                self.table.get(entry_id).digraph for record in classes for entry_id in record.entry_ids
            })
            groups.append(DigraphGroup(
                index=index,
                digraph=G.to_text(),
                edge_count=G.edge_count,
                table_digraphs=tuple(table_digraphs),
                classes=classes,
            ))
        return groups

    def _verify_table(self) -> Tuple[List[WitnessResult], List[HarnessResult]]:
        cfg = self.config
        entries = list(self.table)
        profile = (cfg.sampling.magnitude_low, cfg.sampling.magnitude_high)

        # Check printed witnesses
        witness_report = []
        for entry in entries:
            witness_report.extend(verify_witnesses(entry, cfg.numerics))
        logger.info(f"Verified {len(witness_report)} printed witnesses")

        def run(item: Tuple[int, TableEntry]) -> List[HarnessResult]:
            k, entry = item
            seed = derive_seed(cfg.sampling.seed, HARNESS_SEED_OFFSET + k)
            condition_seed, recipe_seed = seed.spawn(2)
            results = []
            if entry.has_condition:
                results.append(check_condition_consistency(
                    entry, cfg.sampling.samples, condition_seed, cfg.numerics, self.table, profile))
            if entry.recipe is not None:
                results.append(check_recipe_soundness(
                    entry, cfg.sampling.recipe_samples, recipe_seed, self.table, profile))
            return results

        # Run condition and recipe checks
        harness = [r for results in self.executor.map(run, enumerate(entries)) for r in results]
        logger.info(f"Ran {len(harness)} condition and recipe checks")
        return witness_report, harness

    @staticmethod
    def _totals(records: List[ClassRecord]) -> Dict[str, int]:
        counts = Counter(record.verdict.value for record in records)
        return {verdict.value: counts.get(verdict.value, 0) for verdict in Verdict}

    def _run_meta(self, records: List[ClassRecord], digraphs) -> Dict[str, object]:
        cfg = self.config
        return {
            'seed': cfg.sampling.seed,
            'samples': cfg.sampling.samples,
            'recipe_samples': cfg.sampling.recipe_samples,
            'magnitudes': [cfg.sampling.magnitude_low, cfg.sampling.magnitude_high],
            'tol': cfg.numerics.tol,
            'borderline': cfg.numerics.borderline,
            'lp_eps': cfg.numerics.lp_eps,
            'table_entries': len(self.table),
            'digraph_classes': len(digraphs),
            'census': {str(k): v for k, v in census(digraphs).items()},
            'concrete_patterns': sum(record.size for record in records),
        }

    def _cross_check(self, report: AtlasReport, records: List[ClassRecord],
                     witness_report: List[WitnessResult], harness: List[HarnessResult]) -> None:
        findings = report.discrepancies
        findings.extend(self.table_discrepancies(witness_report, harness))

        for record in records:
            kind = record.classification.evidence.kind
            corroboration = record.corroboration

            # Theory stages must never be contradicted by a sampled member
            if kind in _THEORY_DNA and corroboration.get('ap', 0):
                report.soundness_violations.append(record.pattern)
            if kind == EvidenceKind.UNIFORM_OFFDIAG and corroboration.get('not_ap', 0):
                report.soundness_violations.append(record.pattern)

            if not record.entry_ids:
                if kind in _SAMPLED:
                    report.table_misses.append(record.pattern)
                else:
                    report.coverage_gaps.append(record.pattern)
                continue

            findings.extend(self.record_findings(record))

        for pattern in report.soundness_violations:
            logger.warning(f"Theory-stage verdict for {pattern} contradicted by sampling")
        for pattern in report.table_misses:
            logger.warning(f"Table miss: {pattern}")

    def record_findings(self, record: ClassRecord) -> List[Discrepancy]:
        """Check the printed label of every entry covering the class"""
        kind = record.classification.evidence.kind
        corroboration = record.corroboration
        labels = {entry_id: self.table.get(entry_id).label.value for entry_id in record.entry_ids}
        findings = []

        if len(labels) > 1:
            findings.append(Discrepancy(DiscrepancyKind.DOUBLE_MATCH, record.entry_ids[0],
                                        f"class matches entries {', '.join(record.entry_ids)}",
                                        record.pattern))
            if len(set(labels.values())) > 1:
                printed = ', '.join(f"{entry_id} {label}" for entry_id, label in labels.items())
                for entry_id, label in labels.items():
                    if label != record.verdict.value:
                        findings.append(Discrepancy(
                            DiscrepancyKind.LABEL_CONTRADICTION, entry_id,
                            f"entries covering one class disagree ({printed})", record.pattern))

        for entry_id, label in labels.items():
            if kind in _THEORY and label != record.verdict.value:
                findings.append(Discrepancy(
                    DiscrepancyKind.THEORY_CONFLICT, entry_id,
                    f"printed {label}, {kind.value} proves {record.verdict.value}", record.pattern))
            if label == Verdict.RAP.value and corroboration.get('not_ap', 0):
                findings.append(Discrepancy(
                    DiscrepancyKind.LABEL_CONTRADICTION, entry_id,
                    f"printed RAP but {corroboration['not_ap']} sampled members are not AP", record.pattern))
            if label == Verdict.DNA.value and corroboration.get('ap', 0):
                findings.append(Discrepancy(
                    DiscrepancyKind.LABEL_CONTRADICTION, entry_id,
                    f"printed DNA but {corroboration['ap']} sampled members are AP", record.pattern))
        return findings

    def table_discrepancies(self, witness_report: List[WitnessResult],
                            harness: List[HarnessResult]) -> List[Discrepancy]:
        """Suspect rows, witness mismatches and failed condition or recipe checks"""
        findings = [
            Discrepancy(DiscrepancyKind.SUSPECT_ROW, entry.id, entry.notes or 'flagged in table')
            for entry in self.table.suspect_entries()
        ]

        for result in witness_report:
            if not result.match:
                note = ' (borderline)' if result.borderline else ''
                findings.append(Discrepancy(
                    DiscrepancyKind.WITNESS_MISMATCH, result.entry_id,
                    f"witness {result.index} printed ap={result.expected_ap}, oracle ap={result.observed_ap}{note}"))
            if result.agreement in (Agreement.EIGEN_ONLY.value, Agreement.POLY_ONLY.value):
                findings.append(Discrepancy(
                    DiscrepancyKind.ORACLE_DISAGREEMENT, result.entry_id,
                    f"witness {result.index}: {result.agreement}"))

        for result in harness:
            if result.clean:
                continue
            kind = DiscrepancyKind.CONDITION_MISMATCH if result.check == 'condition' \
                else DiscrepancyKind.RECIPE_VIOLATION
            findings.append(Discrepancy(kind, result.entry_id,
                                        f"{result.failed}/{result.total} seeded samples disagree"))
        return findings

    def verify_paper(self) -> Tuple[Dict[str, float], List[WitnessResult], List[HarnessResult], List[Discrepancy]]:
        """Witnesses, conditions and recipes of every table entry, without the enumeration"""
        try:
            witness_report, harness = self._verify_table()
        finally:
            self.executor.shutdown(wait=True)
        summary = dict(witness_summary(witness_report))
        summary['harness_checks'] = len(harness)
        summary['harness_failures'] = sum(1 for r in harness if not r.clean)
        return summary, witness_report, harness, self.table_discrepancies(witness_report, harness)

def build_atlas(cfg: Optional[Config] = None, table: Optional[ClassifierTable] = None) -> AtlasReport:
    return AtlasBuilder(cfg, table).build()
