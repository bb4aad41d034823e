"""Simple undirected graphs on dense 0-based vertex indices.

Adjacency is kept twice: as the canonical sorted edge tuple and as one
integer bitmask of neighbours per vertex.  The search code works almost
entirely on the bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from boxkit.bitset import bits


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph.

    ``edges`` is always the sorted tuple of ``(u, v)`` pairs with ``u < v``.
    Build instances through :meth:`from_edges`, which normalises and validates.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        canon = tuple(sorted(seen))
        adj = [0] * n
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, canon, tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map each canonical edge to its position in ``edges``."""
        return {e: i for i, e in enumerate(self.edges)}

    def edge_mask(self, edge_set: Iterable[Sequence[int]]) -> int:
        """Bitmask over ``edges`` positions for a collection of vertex pairs."""
        index = self.edge_index()
        m = 0
        for u, v in edge_set:
            key = (u, v) if u < v else (v, u)
            try:
                m |= 1 << index[key]
            except KeyError:
                raise ValueError(f"pair {key} is not an edge of the graph") from None
        return m

    def edges_of_mask(self, mask: int) -> list[tuple[int, int]]:
        return [self.edges[i] for i in bits(mask)]

    def spanning(self, edge_set: Iterable[Sequence[int]]) -> Graph:
        """The spanning subgraph on the same vertex set with ``edge_set``."""
        return Graph.from_edges(self.n, edge_set)


@dataclass(frozen=True)
class LineGraphMap:
    """A base graph, its line graph, and the edge/vertex correspondence."""

    base: Graph
    lg: Graph
    to_lg: dict[tuple[int, int], int] = field(compare=False)
    from_lg: tuple[tuple[int, int], ...]


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def line_graph(g: Graph) -> LineGraphMap:
    """Line graph of ``g``; vertex ``i`` of the result is ``g.edges[i]``."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    lg_edges = set()
    for star in incident:
        lg_edges.update(combinations(star, 2))
    lg = Graph.from_edges(g.m, lg_edges)
    to_lg = {e: i for i, e in enumerate(g.edges)}
    return LineGraphMap(g, lg, to_lg, g.edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    edges = []
    for u in range(g.n):
        rest = full & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        edges.extend((u, v) for v in bits(rest))
    return Graph.from_edges(g.n, edges)


def kneser_n2(n: int) -> Graph:
    """KG(n, 2): 2-subsets of range(n), adjacent when disjoint.

    Vertices are numbered in the lexicographic order of the pairs, which is
    the numbering ``line_graph(complete_graph(n))`` uses.
    """
    if n < 5:
        raise ValueError(f"KG(n,2) needs n >= 5, got {n}")
    pairs = list(combinations(range(n), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return Graph.from_edges(len(pairs), edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``s``; returns it with ``new -> old`` vertex map.

    New indices follow the ascending order of the old ones.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph.from_edges(len(keep), edges), keep


def max_degree(g: Graph) -> int:
    return max((a.bit_count() for a in g.adj), default=0)
