"""Verification harness for the classification table.

Printed witnesses are run through both oracles, and the printed conditions
and recipes are checked against seeded samples of their templates. Mismatches
are returned as data.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..engine.oracles import DEFAULT_NUMERICS, is_ap
from ..config.config import NumericsConfig
from ..exceptions.custom_exceptions import NumericalError, RecipeViolation
from ..models.classification import HarnessResult, TableEntry, WitnessResult
from ..models.enums import Agreement
from ..models.matrix import RealMatrix
from ..patterns.algebra import DEFAULT_MAGNITUDES, sample
from ..utils.helpers import SeedLike, make_rng
from .recipes import recipe_certificate
from .table import ClassifierTable, default_table, expand_template

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 3

def _rows(X: RealMatrix) -> Tuple[Tuple[float, ...], ...]:
    return tuple(tuple(row) for row in X.to_list())

def verify_witnesses(entry: TableEntry, numerics: Optional[NumericsConfig] = None) -> List[WitnessResult]:
    numerics = numerics or DEFAULT_NUMERICS
    results = []
    for index, witness in enumerate(entry.witnesses):
        X = witness.matrix()
        try:
            verdict = is_ap(X, numerics)
        except NumericalError as e:
            logger.warning(f"Witness {entry.id}#{index} could not be decided: {e}")
            results.append(WitnessResult(
                entry_id=entry.id, index=index, matrix=_rows(X), expected_ap=witness.ap,
                observed_ap=False, agreement='NumericalFailure', eigen_margin=float('nan'),
                lp_margin=float('nan'), borderline=True, pattern_mismatch=witness.pattern_mismatch,
            ))
            continue

        eigen_margin = verdict.margins['eigen_min_entry']
        result = WitnessResult(
            entry_id=entry.id,
            index=index,
            matrix=_rows(X),
            expected_ap=witness.ap,
            observed_ap=verdict.is_ap,
            agreement=verdict.agreement.value,
            eigen_margin=eigen_margin,
            lp_margin=verdict.margins['lp_t'],
            borderline=verdict.borderline or abs(eigen_margin) < numerics.borderline,
            pattern_mismatch=witness.pattern_mismatch,
        )
        if not result.match:
            logger.warning(f"Witness {entry.id}#{index} expected ap={witness.ap}, oracle says {verdict.is_ap}")
        else:
            logger.debug(f"Witness {entry.id}#{index} matches (margin {eigen_margin:.3g})")
        results.append(result)
    return results

def witness_summary(results: Sequence[WitnessResult]) -> Dict[str, float]:
    """Match rate and oracle agreement outside the borderline band"""
    total = len(results)
    matched = sum(1 for r in results if r.match)
    decisive = [r for r in results if not r.borderline]
    agreeing = sum(1 for r in decisive if r.agreement == Agreement.AGREE.value)
    return {
        'witnesses': total,
        'matched': matched,
        'match_rate': matched / total if total else 1.0,
        'decisive': len(decisive),
        'oracle_agreement': agreeing / len(decisive) if decisive else 1.0,
    }

def check_condition_consistency(entry: TableEntry, samples: int = 200, seed: SeedLike = 0,
                                numerics: Optional[NumericsConfig] = None,
                                table: Optional[ClassifierTable] = None,
                                magnitude_profile: Tuple[float, float] = DEFAULT_MAGNITUDES) -> HarnessResult:
    """Printed condition against the full verdict on seeded members of every template expansion"""
    numerics = numerics or DEFAULT_NUMERICS
    table = table or default_table()
    if not entry.has_condition:
        return HarnessResult(entry_id=entry.id, check='condition', total=0, passed=0)

    rng = make_rng(seed)
    expansions = expand_template(entry.template)
    passed = skipped = 0
    counterexamples = []
    for i in range(samples):
        X = sample(expansions[i % len(expansions)], rng, magnitude_profile)
        expected = table.table_condition(entry, X)
        verdict = is_ap(X, numerics)
        if verdict.borderline or abs(verdict.margins['eigen_min_entry']) < numerics.borderline:
            skipped += 1
        elif expected == verdict.is_ap:
            passed += 1
        elif len(counterexamples) < MAX_COUNTEREXAMPLES:
            counterexamples.append(_rows(X))

    result = HarnessResult(entry_id=entry.id, check='condition', total=samples, passed=passed,
                           skipped=skipped, counterexamples=tuple(counterexamples))
    if not result.clean:
        logger.warning(f"Condition of {entry.id} disagrees with the oracle on {result.failed}/{samples} samples")
    return result

def check_recipe_soundness(entry: TableEntry, samples: int = 100, seed: SeedLike = 0,
                           table: Optional[ClassifierTable] = None,
                           magnitude_profile: Tuple[float, float] = DEFAULT_MAGNITUDES) -> HarnessResult:
    """Recipe certificate on seeded members of every template expansion"""
    if entry.recipe is None:
        return HarnessResult(entry_id=entry.id, check='recipe', total=0, passed=0)

    table = table or default_table()
    rng = make_rng(seed)
    expansions = expand_template(entry.template)
    passed = 0
    worst = None
    counterexamples = []
    for i in range(samples):
        X = sample(expansions[i % len(expansions)], rng, magnitude_profile)
        try:
            certificate = recipe_certificate(entry, X, table)
        except RecipeViolation as e:
            logger.debug(f"{e} on {X.to_text()}")
            if len(counterexamples) < MAX_COUNTEREXAMPLES:
                counterexamples.append(_rows(X))
            continue
        passed += 1
        worst = certificate.margin if worst is None else min(worst, certificate.margin)

    result = HarnessResult(entry_id=entry.id, check='recipe', total=samples, passed=passed,
                           worst=worst, counterexamples=tuple(counterexamples))
    if not result.clean:
        logger.warning(f"Recipe of {entry.id} failed on {result.failed}/{samples} samples")
    return result
