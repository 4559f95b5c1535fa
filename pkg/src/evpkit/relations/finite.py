"""Binary relations on {0, ..., n-1}, their transitive closures and maximal elements.

On a finite set every subset that can be well ordered compatibly with s* is finite, so
maximal elements always exist. Chains of strict s*-successors cannot repeat a point, so
following them reaches a maximal element.
"""

import logging
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from evpkit.core.exceptions import DimensionMismatch, IndexOutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteRelation:
    """adj[i][j] holds iff i s j."""

    adj: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.adj)
        if n == 0:
            raise DimensionMismatch("a relation needs at least one point")
        if any(len(row) != n for row in self.adj):
            raise DimensionMismatch(f"relation matrix must be {n}x{n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "FiniteRelation":
        adj = [[False] * n for _ in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexOutOfRange(f"pair ({i}, {j}) outside 0..{n - 1}")
            adj[i][j] = True
        return cls(tuple(tuple(row) for row in adj))

    @property
    def n(self) -> int:
        return len(self.adj)

    def holds(self, i: int, j: int) -> bool:
        return self.adj[i][j]

    def pairs(self) -> set[tuple[int, int]]:
        return {(i, j) for i in range(self.n) for j in range(self.n) if self.adj[i][j]}

    def check_index(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"point {x} outside 0..{self.n - 1}")

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.pairs())
        return graph


def transitive_closure(s: FiniteRelation) -> FiniteRelation:
    """s*: i s* j iff a chain i = x1 s x2 ... s xk = j with at least one step exists.

    i s* i therefore holds only when i lies on a cycle of s (or s relates i to itself).
    """
    closure = nx.transitive_closure(s.to_graph(), reflexive=False)
    return FiniteRelation.from_pairs(s.n, closure.edges())


def is_maximal(s: FiniteRelation, x: int) -> bool:
    """x s y implies y s x for every y."""
    s.check_index(x)
    return all(s.adj[y][x] for y in range(s.n) if s.adj[x][y])


def find_maximal(s: FiniteRelation, start: int) -> int:
    """An s*-maximal element reachable from `start` under s* (or `start` itself).

    Strict successors are taken smallest index first.
    """
    s.check_index(start)
    closure = transitive_closure(s)

    current = start
    visited = {current}
    while not is_maximal(closure, current):
        successor = next(
            y for y in range(s.n) if closure.adj[current][y] and not closure.adj[y][current] and y not in visited
        )
        logger.debug("relation chain %d -> %d", current, successor)
        visited.add(successor)
        current = successor
    return current
