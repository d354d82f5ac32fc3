"""Constructive polynomial certificates for the RAP rows that carry a recipe"""
import logging
import math
from typing import Optional

import numpy as np

from ..exceptions.custom_exceptions import RecipeViolation, TemplateMismatch
from ..linalg.polyeval import matrix_powers
from ..models.certificates import PolyCertificate
from ..models.classification import TableEntry
from ..models.matrix import Polynomial, RealMatrix
from ..patterns.algebra import pattern_of
from .table import ClassifierTable, default_table, template_matches

logger = logging.getLogger(__name__)

SLACK = 2.0

def slack_above(bound: float) -> float:
    """Deterministic value strictly above a lower bound"""
    return SLACK * bound if bound > 0 else bound + 1.0

def slack_below(bound: float) -> float:
    return -slack_above(-bound)

def choose_ratio(lower: Optional[float], upper: Optional[float]) -> float:
    """Point of the open interval (lower, upper); either end may be missing"""
    if lower is not None and upper is not None:
        return (lower + upper) / 2.0
    if lower is not None:
        return slack_above(lower)
    if upper is not None:
        return slack_below(upper)
    raise ValueError("Ratio interval has no finite end")

def recipe_certificate(entry: TableEntry, X: RealMatrix,
                       table: Optional[ClassifierTable] = None) -> PolyCertificate:
    """Instantiate the entry's recipe on X and check p(X) > 0 entrywise"""
    if entry.recipe is None:
        raise TemplateMismatch(f"Entry {entry.id} has no polynomial recipe")
    if not template_matches(entry.template, pattern_of(X)):
        raise TemplateMismatch(f"Matrix pattern {pattern_of(X)} does not match template {entry.template}")

    table = table or default_table()
    recipe = entry.recipe
    k2 = float(recipe.k2_sign)

    if recipe.ratio_fixed is not None:
        ratio = recipe.ratio_fixed
    else:
        lower = table.evaluate(recipe.ratio_lower, X) if recipe.ratio_lower is not None else None
        upper = table.evaluate(recipe.ratio_upper, X) if recipe.ratio_upper is not None else None
        if lower is not None and upper is not None and not lower < upper:
            raise RecipeViolation(
                f"Entry {entry.id}: empty ratio interval ({lower:.6g}, {upper:.6g})",
                entry_id=entry.id, inequality=recipe.printed,
            )
        ratio = choose_ratio(lower, upper)
    k1 = ratio * k2

    if recipe.diagonal_rule:
        A1, A2 = matrix_powers(X, 2)
        bound = float(np.max(np.diag(-k1 * A1 - k2 * A2)))
    else:
        bound = max(table.evaluate(expression, X, k1=k1, k2=k2) for expression in recipe.k0)
    if not math.isfinite(bound):
        raise RecipeViolation(f"Entry {entry.id}: non-finite k0 bound", entry_id=entry.id,
                              inequality=recipe.printed)
    k0 = slack_above(bound)

    certificate = PolyCertificate.from_polynomial(Polynomial((k0, k1, k2)), X)
    if certificate.margin <= 0.0:
        logger.warning(f"Recipe for {entry.id} fails on {X.to_text()}: margin {certificate.margin:.3e}")
        raise RecipeViolation(
            f"Entry {entry.id}: recipe polynomial has minimum entry {certificate.margin:.6g}",
            entry_id=entry.id, inequality=recipe.printed,
        )
    return certificate
