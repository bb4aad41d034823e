"""Interval completions and boxicity for complements of line graphs.

For a base graph ``g`` on ``n >= 5`` vertices, L(g) is the subgraph of
L(K_n) induced by the edges of ``g``.  Restricting each catalog entry of
K_n to that vertex set and keeping the maximal results gives every maximal
interval-order subgraph of L(g).  Their complements inside E(L(g)) are the
edges a minimal interval completion of co-L(g) adds.

A k-interval-order-cover of L(g) certifies ``boxicity(co-L(g)) <= k``.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from boxkit import kernels
from boxkit.bitset import bits, maximal_masks
from boxkit.catalog import CatalogEntry, cached_catalog, catalog_context
from boxkit.graph import Graph, LineGraphMap, complement, line_graph
from boxkit.interval_order import (
    BRUTEFORCE_MAX_VERTICES,
    Ordering,
    check_chain_property,
    complete_ordering,
    default_threads,
    maximal_interval_order_subgraphs_bruteforce,
)

CATALOG_MIN_VERTICES = 5


class CertificateError(ValueError):
    """A cover or completion certificate is structurally malformed."""


@dataclass(frozen=True)
class Color:
    """One colour of a cover: an edge list and its witness ordering."""

    edges: tuple[tuple[int, int], ...]
    witness: Ordering


@dataclass(frozen=True)
class Cover:
    colors: tuple[Color, ...]

    @property
    def k(self) -> int:
        return len(self.colors)

    def to_json(self) -> list[dict]:
        return [{"edges": [list(e) for e in c.edges], "witness": list(c.witness)} for c in self.colors]

    @classmethod
    def from_json(cls, data) -> Cover:
        if not isinstance(data, list):
            raise CertificateError("cover must be a list of colours")
        colors = []
        for i, c in enumerate(data):
            try:
                edges = tuple(tuple(sorted((int(u), int(v)))) for u, v in c["edges"])
                witness = tuple(int(v) for v in c["witness"])
            except (KeyError, TypeError, ValueError) as exc:
                raise CertificateError(f"colour {i} is malformed: {exc}") from None
            colors.append(Color(edges, witness))
        return cls(tuple(colors))


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    message: str
    color: int | None = None
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_cover(lg: Graph, cover: Cover) -> CoverReport:
    """Check every colour is an interval-order subgraph and the union is E(lg).

    Malformed witnesses (not a permutation of the vertices) raise
    :class:`CertificateError`; everything else is reported in the result.
    """
    index = lg.edge_index()
    union = 0
    for i, color in enumerate(cover.colors):
        w = color.witness
        if sorted(w) != list(range(lg.n)):
            raise CertificateError(f"colour {i} witness is not a permutation of the {lg.n} vertices")
        mask = 0
        for e in color.edges:
            if e[0] == e[1] or not all(0 <= x < lg.n for x in e):
                raise CertificateError(f"colour {i} has invalid pair {e}")
            key = (min(e), max(e))
            if key not in index:
                return CoverReport(False, f"colour {i} uses non-edge {key}", i, key)
            mask |= 1 << index[key]
        check = check_chain_property(lg.spanning(lg.edges_of_mask(mask)), w)
        if not check:
            return CoverReport(False, f"colour {i} witness fails the chain property at {check.violation}", i)
        union |= mask
    missing = ((1 << lg.m) - 1) & ~union
    if missing:
        e = lg.edges[bits(missing)[0]]
        return CoverReport(False, f"edge {e} is not covered", None, e)
    return CoverReport(True, f"valid {len(cover.colors)}-interval-order-cover")


@dataclass(frozen=True)
class Candidate:
    """A maximal interval-order subgraph of L(g), in L(g) edge-bit space."""

    mask: int
    witness: Ordering
    source: CatalogEntry | None = None


class Restriction:
    """Maps catalog entries of K_n onto L(g) for a base graph on n vertices."""

    def __init__(self, g: Graph):
        self.g = g
        self.lgm: LineGraphMap = line_graph(g)
        self.ctx = catalog_context(g.n)
        kn_vertex = [self.ctx.vertex(u, v) for u, v in g.edges]
        self.pos = {p: i for i, p in enumerate(kn_vertex)}
        lg_index = self.lgm.lg.edge_index()
        self._to_lg_bit: dict[int, int] = {}
        induced = 0
        for bit, (p, q) in enumerate(self.ctx.lg.edges):
            if p in self.pos and q in self.pos:
                a, b = self.pos[p], self.pos[q]
                self._to_lg_bit[bit] = lg_index[(min(a, b), max(a, b))]
                induced |= 1 << bit
        self.induced = induced

    @property
    def lg(self) -> Graph:
        return self.lgm.lg

    def translate(self, kn_mask: int) -> int:
        out = 0
        for bit in bits(kn_mask & self.induced):
            out |= 1 << self._to_lg_bit[bit]
        return out

    def witness(self, entry: CatalogEntry) -> Ordering:
        return tuple(self.pos[p] for p in entry.witness if p in self.pos)

    def restrict(self, entry: CatalogEntry) -> Candidate:
        return Candidate(self.translate(entry.mask), self.witness(entry), entry)


def restrict_entry(entry: CatalogEntry, g: Graph) -> Candidate:
    """The entry's edges induced on L(g), with its witness filtered to L(g)."""
    if g.n != entry.n:
        raise ValueError(f"entry is for n={entry.n}, graph has {g.n} vertices")
    return Restriction(g).restrict(entry)


def maximal_candidates(g: Graph, *, threads: int | None = None, backend: str | None = None) -> list[Candidate]:
    """Maximal interval-order subgraphs of L(g), canonically ordered.

    Uses the catalog for ``g.n >= 5`` and the brute-force enumerator below
    that.  Order: decreasing size, then ascending edge-bit mask.
    """
    if g.n >= CATALOG_MIN_VERTICES:
        r = Restriction(g)
        first: dict[int, CatalogEntry] = {}
        for entry in cached_catalog(g.n):
            first.setdefault(entry.mask & r.induced, entry)
        keep = maximal_masks(first)
        out = [Candidate(r.translate(m), r.witness(first[m]), first[m]) for m in keep]
    else:
        lg = line_graph(g).lg
        out = [
            Candidate(s.mask, s.witness)
            for s in maximal_interval_order_subgraphs_bruteforce(lg, threads=threads, backend=backend)
        ]
    out.sort(key=lambda c: (-c.mask.bit_count(), c.mask))
    return out


@dataclass(frozen=True)
class Completion:
    """A minimal interval completion of co-L(base).

    ``added_edges`` are pairs of L(base) vertices; ``kept_mask`` is the
    interval-order subgraph of L(base) left after removing them, certified
    by ``witness``.
    """

    base: Graph
    added_edges: tuple[tuple[int, int], ...]
    witness: Ordering
    weight: float
    kept_mask: int = field(repr=False)

    def to_json(self) -> dict:
        return {
            "added_edges": [list(e) for e in self.added_edges],
            "weight": self.weight,
            "witness": list(self.witness),
        }


def _validate_weights(weights: Mapping[tuple[int, int], float] | None) -> dict[tuple[int, int], float]:
    if not weights:
        return {}
    out = {}
    for (u, v), w in weights.items():
        if w < 0:
            raise ValueError(f"negative weight {w} on pair ({u}, {v})")
        out[(min(u, v), max(u, v))] = w
    return out


def minimal_interval_completions(
    g: Graph,
    weights: Mapping[tuple[int, int], float] | None = None,
) -> list[Completion]:
    """All inclusion-wise minimal interval completions of co-L(g).

    Weighted by ``weights`` (pairs of L(g) vertices; missing pairs weigh 1).
    Ordered by the sorted added-edge lists.
    """
    w = _validate_weights(weights)
    lg = line_graph(g).lg
    full = (1 << lg.m) - 1
    out = []
    for cand in maximal_candidates(g):
        added = tuple(lg.edges_of_mask(full & ~cand.mask))
        weight = sum(w.get(e, 1) for e in added)
        out.append(Completion(g, added, complete_ordering(lg, cand.witness), weight, cand.mask))
    out.sort(key=lambda c: c.added_edges)
    return out


def min_completion(g: Graph, weights: Mapping[tuple[int, int], float] | None = None) -> Completion:
    """Minimum-weight interval completion of co-L(g); ties go to canonical order."""
    comps = minimal_interval_completions(g, weights)
    return min(comps, key=lambda c: c.weight)


@dataclass(frozen=True)
class SearchResult:
    chosen: list[int] | None
    nodes: int


def search_cover(
    universe: int,
    masks: Sequence[int],
    k: int,
    *,
    threads: int | None = None,
    budget: int | None = None,
    backend: str | None = None,
) -> SearchResult:
    """Exact k-subset cover search, split into one task per root branch.

    Root branches are handed out in candidate order and the first one that
    leads to a cover wins, so ``chosen`` and ``nodes`` (counted as a
    single-threaded run would) do not depend on ``threads``.  ``budget``
    caps the nodes of each root branch.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    threads = threads or default_threads()
    options = kernels.first_branch_options(universe, masks)
    if len(options) < 2 or k == 0:
        chosen, nodes = kernels.cover_search(universe, masks, k, None, budget, backend)
        return SearchResult(chosen, nodes)

    problem = kernels.cover_problem(universe, masks, backend)
    results: dict[int, object] = {}
    lock = threading.Lock()
    state = {"next": 0, "stop": len(options)}

    def worker() -> None:
        while True:
            with lock:
                r = state["next"]
                if r >= state["stop"]:
                    return
                state["next"] = r + 1
            try:
                res = problem.search(k, [options[r]], budget)
            except kernels.SearchBudgetExceeded as exc:
                res = exc
            with lock:
                results[r] = res
                if not isinstance(res, Exception) and res[0] is not None:
                    state["stop"] = min(state["stop"], r + 1)

    if threads <= 1:
        worker()
    else:
        with ThreadPoolExecutor(threads) as pool:
            for f in [pool.submit(worker) for _ in range(threads)]:
                f.result()
    # every task below "stop" has finished; replay them in order
    nodes = 1
    for r in range(state["stop"]):
        res = results[r]
        if isinstance(res, Exception):
            raise res
        chosen, sub = res
        nodes += sub - 1
        if chosen is not None:
            return SearchResult(chosen, nodes)
    return SearchResult(None, nodes)


def _cover_from(cands: Sequence[Candidate], chosen: Sequence[int], lg: Graph) -> Cover:
    colors = []
    for i in chosen:
        c = cands[i]
        colors.append(Color(tuple(lg.edges_of_mask(c.mask)), complete_ordering(lg, c.witness)))
    return Cover(tuple(colors))


def boxicity_le_k(
    g: Graph,
    k: int,
    *,
    threads: int | None = None,
    budget: int | None = None,
    backend: str | None = None,
) -> Cover | None:
    """A cover of L(g) by at most ``k`` interval-order subgraphs, or ``None``.

    Exact: ``None`` means ``boxicity(co-L(g)) > k``.
    """
    cands = maximal_candidates(g, threads=threads, backend=backend)
    lg = line_graph(g).lg
    res = search_cover((1 << lg.m) - 1, [c.mask for c in cands], k, threads=threads, budget=budget, backend=backend)
    if res.chosen is None:
        return None
    cover = _cover_from(cands, res.chosen, lg)
    report = verify_cover(lg, cover)
    if not report:
        raise AssertionError(f"search produced an invalid cover: {report.message}")
    return cover


@dataclass(frozen=True)
class BoxicityResult:
    """``boxicity`` is ``None`` when it exceeds ``max_k``."""

    boxicity: int | None
    cover: Cover | None
    method: str
    max_k: int | None = None

    def to_json(self) -> dict:
        return {
            "boxicity": self.boxicity if self.boxicity is not None else f"exceeds {self.max_k}",
            "method": self.method,
            "cover": self.cover.to_json() if self.cover is not None else None,
        }


def _smallest_cover(universe: int, cands: Sequence[Candidate], lg: Graph, max_k, method, **kw) -> BoxicityResult:
    masks = [c.mask for c in cands]
    limit = len(masks) if max_k is None else max_k
    k = 0
    while k <= limit:
        res = search_cover(universe, masks, k, **kw)
        if res.chosen is not None:
            return BoxicityResult(k, _cover_from(cands, res.chosen, lg), method, max_k)
        k += 1
    return BoxicityResult(None, None, method, max_k)


def boxicity_co_line(
    g: Graph,
    max_k: int | None = None,
    *,
    threads: int | None = None,
    budget: int | None = None,
    backend: str | None = None,
) -> BoxicityResult:
    """Boxicity of co-L(g) with a cover certificate.

    Tries ``k = 0, 1, ...`` through the catalog route (brute force for
    fewer than five base vertices).
    """
    lg = line_graph(g).lg
    cands = maximal_candidates(g, threads=threads, backend=backend)
    method = "catalog" if g.n >= CATALOG_MIN_VERTICES else "bruteforce"
    return _smallest_cover((1 << lg.m) - 1, cands, lg, max_k, method, threads=threads, budget=budget, backend=backend)


def boxicity_bruteforce(
    h: Graph,
    max_k: int | None = None,
    *,
    max_vertices: int = BRUTEFORCE_MAX_VERTICES,
    threads: int | None = None,
    budget: int | None = None,
    backend: str | None = None,
) -> BoxicityResult:
    """Boxicity of an arbitrary small graph ``h``.

    Enumerates the maximal interval-order subgraphs of the complement by
    prefix search and finds the fewest that cover it.  The cover is
    expressed over ``complement(h)``.
    """
    co = complement(h)
    subs = maximal_interval_order_subgraphs_bruteforce(co, max_vertices, threads=threads, backend=backend)
    cands = [Candidate(s.mask, s.witness) for s in subs]
    cands.sort(key=lambda c: (-c.mask.bit_count(), c.mask))
    return _smallest_cover((1 << co.m) - 1, cands, co, max_k, "bruteforce", threads=threads, budget=budget, backend=backend)
