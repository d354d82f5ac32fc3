"""Digraphs of sign patterns, irreducibility and digraph equivalence.

Two digraphs are equivalent when one is obtained from the other by relabeling
the vertices and possibly reversing every edge.
"""
import logging
from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..exceptions.custom_exceptions import CensusMismatch, ValidationError
from ..models.digraph import Digraph
from ..models.pattern import SignPattern

logger = logging.getLogger(__name__)

MAX_CANONICAL_N = 6

# edge count -> number of irreducible 3-vertex digraph classes (loops count as edges)
EXPECTED_CENSUS = {3: 1, 4: 3, 5: 6, 6: 8, 7: 5, 8: 2, 9: 1}

def digraph_of(S: SignPattern) -> Digraph:
    n = S.n
    return Digraph(n, frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(n) if S.cells[i * n + j] != 0
    ))

@lru_cache(maxsize=4096)
def strongly_connected(G: Digraph) -> bool:
    """Single strongly connected component covering every vertex"""
    if G.n < 1:
        raise ValidationError("Digraph needs at least one vertex")
    return nx.is_strongly_connected(G.to_networkx())

def reverse(G: Digraph) -> Digraph:
    return G.reverse()

def reducing_partition(G: Digraph) -> Optional[Tuple[Set[int], Set[int]]]:
    """Vertex split (first, second) with no edge from second into first, or None if irreducible"""
    if strongly_connected(G):
        return None
    condensed = nx.condensation(G.to_networkx())
    sink = min(
        (c for c in condensed.nodes if condensed.out_degree(c) == 0),
        key=lambda c: min(condensed.nodes[c]['members']),
    )
    second = set(condensed.nodes[sink]['members'])
    first = set(range(1, G.n + 1)) - second
    return first, second

@lru_cache(maxsize=None)
def _vertex_permutations(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(permutations(range(n)))

@lru_cache(maxsize=8192)
def digraph_canonical(G: Digraph) -> Digraph:
    """Least adjacency bitstring over all relabelings, with and without reversal"""
    if G.n > MAX_CANONICAL_N:
        raise ValidationError(f"Canonical form is limited to n <= {MAX_CANONICAL_N}")
    best = None
    for candidate in (G, G.reverse()):
        for perm in _vertex_permutations(G.n):
            bits = candidate.relabel(perm).bits()
            if best is None or bits < best:
                best = bits
    return Digraph.from_bits(G.n, best)

def digraph_equivalent(G1: Digraph, G2: Digraph) -> bool:
    if G1.n != G2.n or G1.edge_count != G2.edge_count:
        return False
    return digraph_canonical(G1) == digraph_canonical(G2)

def enumerate_irreducible_3digraphs() -> List[Digraph]:
    """Canonical representatives of the irreducible 3-vertex digraphs, by edge count"""
    representatives = set()
    for bits in product((0, 1), repeat=9):
        G = Digraph.from_bits(3, bits)
        if strongly_connected(G):
            representatives.add(digraph_canonical(G))
    result = sorted(representatives, key=lambda g: (g.edge_count, g.bits()))
    logger.debug(f"Enumerated {len(result)} irreducible 3-vertex digraph classes")
    return result

def census(digraphs: List[Digraph]) -> Dict[int, int]:
    return dict(sorted(Counter(g.edge_count for g in digraphs).items()))

def check_census(digraphs: List[Digraph]) -> None:
    counts = census(digraphs)
    if counts != EXPECTED_CENSUS:
        logger.error(f"Digraph census {counts} differs from {EXPECTED_CENSUS}")
        raise CensusMismatch(f"Digraph census {counts} differs from {EXPECTED_CENSUS}")

def to_text(G: Digraph) -> str:
    return G.to_text()
