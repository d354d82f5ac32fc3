from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Sequence, Tuple

import networkx as nx

from ..exceptions.custom_exceptions import ParseError, ValidationError

@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 1..n, loops allowed"""
    n: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValidationError(f"Edge {i}->{j} outside vertex set 1..{self.n}")
        object.__setattr__(self, 'edges', edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset(edges))

    @classmethod
    def from_bits(cls, n: int, bits: Sequence[int]) -> "Digraph":
        """Row-major adjacency bits, bit k is edge (k // n + 1, k % n + 1)"""
        return cls(n, frozenset((k // n + 1, k % n + 1) for k, b in enumerate(bits) if b))

    @classmethod
    def from_text(cls, n: int, text: str) -> "Digraph":
        """Parse ``1->2,2->3,3->1``"""
        edges = []
        for token in (t.strip() for t in text.split(',') if t.strip()):
            head, sep, tail = token.partition('->')
            if not sep or not head.strip().isdigit() or not tail.strip().isdigit():
                raise ParseError(f"Invalid edge: {token!r}", token=token)
            edges.append((int(head), int(tail)))
        return cls(n, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def bits(self) -> Tuple[int, ...]:
        n = self.n
        return tuple(int((i + 1, j + 1) in self.edges) for i in range(n) for j in range(n))

    def reverse(self) -> "Digraph":
        return Digraph(self.n, frozenset((j, i) for i, j in self.edges))

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Digraph of the permuted pattern U[i][j] = S[perm[i]][perm[j]] (perm 0-based)"""
        position = {old: new for new, old in enumerate(perm)}
        return Digraph(self.n, frozenset(
            (position[i - 1] + 1, position[j - 1] + 1) for i, j in self.edges
        ))

    def loops(self) -> FrozenSet[int]:
        return frozenset(i for i, j in self.edges if i == j)

    def to_networkx(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(range(1, self.n + 1))
        G.add_edges_from(self.edges)
        return G

    def to_text(self) -> str:
        return ','.join(f"{i}->{j}" for i, j in sorted(self.edges))

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'edges': self.to_text()}
