"""Equivalence group of sign patterns: permutation similarity, transposition and negation"""
from functools import lru_cache
from itertools import permutations, product
from typing import FrozenSet, List, Optional, Tuple

from ..exceptions.custom_exceptions import ValidationError
from ..models.pattern import EquivTransform, SignPattern

MAX_ORBIT_N = 6

@lru_cache(maxsize=None)
def group_elements(n: int) -> Tuple[EquivTransform, ...]:
    """All 4 * n! transforms, identity first"""
    if n > MAX_ORBIT_N:
        raise ValidationError(f"Orbit enumeration is limited to n <= {MAX_ORBIT_N}")
    return tuple(
        EquivTransform(perm, transposed, negated)
        for transposed, negated in product((False, True), repeat=2)
        for perm in permutations(range(n))
    )

@lru_cache(maxsize=None)
def _index_maps(n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Per group element: source index of every target cell, and the sign factor"""
    maps = []
    for g in group_elements(n):
        p = g.perm
        if g.transposed:
            source = tuple(p[j] * n + p[i] for i in range(n) for j in range(n))
        else:
            source = tuple(p[i] * n + p[j] for i in range(n) for j in range(n))
        maps.append((source, -1 if g.negated else 1))
    return tuple(maps)

def _images(S: SignPattern) -> List[Tuple[int, ...]]:
    cells = S.cells
    return [tuple(sign * cells[k] for k in source) for source, sign in _index_maps(S.n)]

def orbit(S: SignPattern) -> FrozenSet[SignPattern]:
    return frozenset(SignPattern(S.n, cells) for cells in _images(S))

@lru_cache(maxsize=65536)
def canonical_form(S: SignPattern) -> Tuple[SignPattern, EquivTransform]:
    """Lexicographically least orbit member and a transform mapping S onto it"""
    images = _images(S)
    best = min(range(len(images)), key=lambda k: images[k])
    return SignPattern(S.n, images[best]), group_elements(S.n)[best]

def equivalent(S1: SignPattern, S2: SignPattern) -> Optional[EquivTransform]:
    """Transform g with g.apply(S1) == S2, or None"""
    if S1.n != S2.n:
        return None
    canon1, g1 = canonical_form(S1)
    canon2, g2 = canonical_form(S2)
    if canon1 != canon2:
        return None
    return g2.inverse().compose(g1)
