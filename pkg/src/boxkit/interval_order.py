"""Orderings, nested out-neighbourhoods and interval-order subgraphs.

An ordering ``sigma`` of the vertices orients every edge from the earlier to
the later vertex.  A graph is an interval-order graph (the complement of an
interval graph) exactly when some ordering makes the out-neighbourhoods
nested: ``N+(sigma[i]) ⊆ N+(sigma[j])`` whenever ``i > j``.

Orderings are plain tuples of vertex indices.  Positions reported in
diagnostics are 0-based.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from boxkit import kernels
from boxkit.bitset import bits, mask_of, maximal_masks
from boxkit.graph import Graph

Ordering = tuple[int, ...]

BRUTEFORCE_MAX_VERTICES = 10


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("BOXKIT_THREADS", "1")))
    except ValueError:
        return 1


def validate_ordering(g: Graph, sigma: Sequence[int], *, full: bool = False) -> Ordering:
    seq = tuple(int(v) for v in sigma)
    for v in seq:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if len(set(seq)) != len(seq):
        raise ValueError("ordering repeats a vertex")
    if full and len(seq) != g.n:
        raise ValueError(f"ordering has {len(seq)} vertices, graph has {g.n}")
    return seq


def complete_ordering(g: Graph, prefix: Sequence[int]) -> Ordering:
    """``prefix`` followed by the unused vertices in ascending order."""
    used = set(prefix)
    return tuple(prefix) + tuple(v for v in range(g.n) if v not in used)


def out_neighborhoods(h: Graph, sigma: Sequence[int]) -> list[int]:
    """Out-neighbourhood bitmask of each position of a full ordering."""
    later = (1 << h.n) - 1
    out = []
    for v in sigma:
        later &= ~(1 << v)
        out.append(h.adj[v] & later)
    return out


class ChainCheck(NamedTuple):
    """Result of :func:`check_chain_property`.

    ``violation`` is ``(i, j, x)``: positions ``j < i`` and a vertex ``x`` in
    ``N+(sigma[i])`` but not in ``N+(sigma[j])``.
    """

    ok: bool
    violation: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_chain_property(h: Graph, sigma: Sequence[int]) -> ChainCheck:
    sigma = validate_ordering(h, sigma, full=True)
    outs = out_neighborhoods(h, sigma)
    # nesting is transitive, so consecutive positions suffice
    for i in range(1, len(outs)):
        extra = outs[i] & ~outs[i - 1]
        if extra:
            return ChainCheck(False, (i, i - 1, bits(extra)[0]))
    return ChainCheck(True)


@dataclass(frozen=True)
class PrefixState:
    """Outcome of running the frontier recursion along a prefix.

    ``frontier`` is the current set ``V_i`` (all vertices for the empty
    prefix); ``captured`` is the edge bitmask over ``graph.edges`` of every
    edge from a prefix vertex to its frontier.
    """

    graph: Graph
    prefix: Ordering
    frontier: int
    used: int
    captured: int

    @property
    def terminal(self) -> bool:
        return self.frontier == 0

    @property
    def captured_edges(self) -> list[tuple[int, int]]:
        return self.graph.edges_of_mask(self.captured)

    @property
    def frontier_vertices(self) -> list[int]:
        return bits(self.frontier)

    @property
    def remaining(self) -> list[int]:
        return bits(((1 << self.graph.n) - 1) & ~self.used)

    def witness(self) -> Ordering:
        """A full ordering whose chain check passes on the captured subgraph."""
        return complete_ordering(self.graph, self.prefix)

    def subgraph(self) -> Graph:
        return self.graph.spanning(self.captured_edges)


def _edge_table(g: Graph) -> list[list[int]]:
    idx = g.edge_index()
    table = [[-1] * g.n for _ in range(g.n)]
    for (u, v), i in idx.items():
        table[u][v] = table[v][u] = i
    return table


def _edges_to(table: list[list[int]], v: int, targets: int) -> int:
    row = table[v]
    return mask_of(row[w] for w in bits(targets))


def subgraph_from_ordering(g: Graph, sigma: Sequence[int]) -> PrefixState:
    """Run ``V_i = V_{i-1} ∩ N(v_i)`` along ``sigma``.

    Consumption stops once the frontier is empty; later vertices cannot add
    edges, so the returned prefix is cut there.
    """
    sigma = validate_ordering(g, sigma)
    table = _edge_table(g)
    frontier = (1 << g.n) - 1
    used = captured = 0
    taken: list[int] = []
    for v in sigma:
        if not frontier:
            break
        frontier &= g.adj[v]
        used |= 1 << v
        captured |= _edges_to(table, v, frontier)
        taken.append(v)
    return PrefixState(g, tuple(taken), frontier, used, captured)


def next_mandatory_vertices(state: PrefixState) -> list[int]:
    """Unused vertices whose neighbourhood contains the whole frontier.

    Any ordering realising a maximal subgraph through this prefix continues
    with exactly these vertices, in any order.
    """
    g, f = state.graph, state.frontier
    return [v for v in state.remaining if g.adj[v] & f == f]


@dataclass(frozen=True)
class TwoWayBranch:
    """Split of the unused vertices around a two-vertex frontier ``{x, y}``."""

    state: PrefixState
    x: int
    y: int
    only_x: tuple[int, ...]
    only_y: tuple[int, ...]
    both: tuple[int, ...]

    def completions(self) -> list[Ordering]:
        """The (at most two) prefixes any maximal completion must start with."""
        base = self.state.prefix + self.both
        out = [base + self.only_x]
        if base + self.only_y != out[0]:
            out.append(base + self.only_y)
        return out


def two_way_branch(state: PrefixState) -> TwoWayBranch:
    f = state.frontier_vertices
    if len(f) != 2:
        raise ValueError(f"frontier has {len(f)} vertices, need exactly 2")
    x, y = f
    g = state.graph
    only_x, only_y, both = [], [], []
    for v in state.remaining:
        ax, ay = g.has_edge(v, x), g.has_edge(v, y)
        if ax and ay:
            both.append(v)
        elif ax:
            only_x.append(v)
        elif ay:
            only_y.append(v)
    return TwoWayBranch(state, x, y, tuple(only_x), tuple(only_y), tuple(both))


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer intervals, one per vertex, indexed by vertex."""

    intervals: tuple[tuple[int, int], ...]

    def disjointness_graph(self) -> Graph:
        iv = self.intervals
        edges = [
            (u, v)
            for u in range(len(iv))
            for v in range(u + 1, len(iv))
            if iv[u][1] < iv[v][0] or iv[v][1] < iv[u][0]
        ]
        return Graph.from_edges(len(iv), edges)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.intervals]


def intervals_from_ordering(h: Graph, sigma: Sequence[int]) -> IntervalModel:
    """Interval model whose disjointness graph is ``h``.

    With 1-based positions, vertex ``sigma[j]`` gets ``[2e + 1, 2j]`` where
    ``e`` is the last earlier position adjacent to it (0 if none).  The chain
    property makes each vertex's earlier neighbours an initial segment, which
    is what makes the model exact.
    """
    check = check_chain_property(h, sigma)
    if not check:
        raise ValueError(f"ordering violates the chain property at {check.violation}")
    pos = {v: j for j, v in enumerate(sigma, start=1)}
    out = [(0, 0)] * h.n
    for v, j in pos.items():
        e = max((pos[u] for u in h.neighbors(v) if pos[u] < j), default=0)
        out[v] = (2 * e + 1, 2 * j)
    return IntervalModel(tuple(out))


def _check_size(g: Graph, bound: int) -> None:
    if g.n > bound:
        raise ValueError(f"graph has {g.n} vertices; brute force is limited to {bound}")


def is_interval_order_bruteforce(h: Graph, max_vertices: int = BRUTEFORCE_MAX_VERTICES) -> Ordering | None:
    """An ordering passing the chain check, or ``None`` if none exists.

    Placing ``v`` after the set ``P`` fixes ``N+(v) = N(v) - P``, so the
    search is over (placed set, last vertex) states and memoised on them.
    """
    _check_size(h, max_vertices)
    n = h.n
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()
    order: list[int] = []

    def extend(placed: int, last_out: int, last: int) -> bool:
        if placed == full:
            return True
        if (placed, last) in dead:
            return False
        for v in bits(full & ~placed):
            out = h.adj[v] & ~placed
            if out & ~last_out:
                continue
            order.append(v)
            if extend(placed | 1 << v, out, v):
                return True
            order.pop()
        dead.add((placed, last))
        return False

    if extend(0, full, -1):
        return tuple(order)
    return None


@dataclass(frozen=True)
class MaximalSubgraph:
    """A maximal interval-order subgraph as an edge bitmask plus witness."""

    mask: int
    edges: tuple[tuple[int, int], ...]
    witness: Ordering


def maximal_interval_order_subgraphs_bruteforce(
    g: Graph,
    max_vertices: int = BRUTEFORCE_MAX_VERTICES,
    threads: int | None = None,
    backend: str | None = None,
) -> list[MaximalSubgraph]:
    """All inclusion-wise maximal interval-order subgraphs of ``g``.

    Enumerates ``E^sigma`` over pruned prefixes (mandatory vertices appended
    eagerly, branches cut when the frontier empties), then keeps the maximal
    edge sets.  Output is sorted by edge list and does not depend on
    ``threads``.
    """
    _check_size(g, max_vertices)
    threads = threads or default_threads()
    table = _edge_table(g)
    firsts = list(range(g.n))
    if threads > 1 and g.n > 1:
        chunks = [firsts[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(
                lambda fs: kernels.prefix_terminals(g.n, g.adj, table, fs, backend=backend),
                [sorted(c) for c in chunks if c],
            ))
        found: dict[int, Ordering] = {}
        # replay in single-threaded branch order so the kept witness matches
        by_first = {}
        for part in parts:
            for mask, prefix in part:
                by_first.setdefault(prefix[0] if prefix else -1, []).append((mask, prefix))
        for first in sorted(by_first):
            for mask, prefix in by_first[first]:
                found.setdefault(mask, prefix)
    else:
        found = dict(kernels.prefix_terminals(g.n, g.adj, table, firsts, backend=backend))
    keep = maximal_masks(found)
    out = [
        MaximalSubgraph(m, tuple(g.edges_of_mask(m)), complete_ordering(g, found[m]))
        for m in keep
    ]
    out.sort(key=lambda s: s.edges)
    return out
