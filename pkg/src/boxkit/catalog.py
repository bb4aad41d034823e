"""Closed-form maximal interval-order subgraphs of L(K_n).

Vertices of L(K_n) are the base pairs ``(u, v)`` of K_n in lexicographic
order; an edge of L(K_n) joins two pairs sharing one endpoint.  Edge sets
are bitmasks over ``ctx.lg.edges``.

Building blocks, for base vertices ``u, v, w`` and a vertex set ``U``:

* ``clique_set(v)``: all L(K_n) edges between pairs through ``v``.
* ``star_set(u, v)``: the star of the line vertex ``uv``.
* ``half_star_set(u, v)``: the part of that star through ``u`` only.
* ``clique_on_subset(U)``: the edges of L(K_n[U]).
* ``triple_half(u, v, w)``: the two edges ``(uv, uw)`` and ``(uv, vw)``.

Every maximal interval-order subgraph of L(K_n), n >= 5, is one of four
families built from these.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from boxkit.bitset import maximal_masks
from boxkit.graph import Graph, LineGraphMap, complete_graph, line_graph
from boxkit.interval_order import Ordering, complete_ordering

FAMILIES = ("A", "B", "C", "C'")


def family_a_size(n: int) -> int:
    return (n + 2) * (n - 1) // 2


def family_b_size(n: int) -> int:
    return 4 * (n - 1)


def family_c_size(n: int) -> int:
    return 5 * (n - 2)


FAMILY_SIZE = {"A": family_a_size, "B": family_b_size, "C": family_c_size, "C'": family_c_size}


def _distinct(n: int, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < n:
            raise ValueError(f"base vertex {v} out of range for n={n}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"base vertices must be distinct, got {vs}")


class CatalogContext:
    """L(K_n) with lookup tables and cached building blocks."""

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"need n >= 3, got {n}")
        self.n = n
        self.lgm: LineGraphMap = line_graph(complete_graph(n))
        self.lg: Graph = self.lgm.lg
        index = self.lg.edge_index()
        size = self.lg.n
        self._eid = [[-1] * size for _ in range(size)]
        for (p, q), i in index.items():
            self._eid[p][q] = self._eid[q][p] = i

    @property
    def total_edges(self) -> int:
        return self.lg.m

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.lg.m) - 1

    def vertex(self, u: int, v: int) -> int:
        """Line vertex of the base pair ``{u, v}``."""
        return self.lgm.to_lg[(u, v) if u < v else (v, u)]

    def pair(self, e: int, f: int) -> int:
        """Bit of the L(K_n) edge between base pairs ``e`` and ``f``."""
        i = self._eid[e][f]
        if i < 0:
            raise ValueError(f"base pairs {self.lgm.from_lg[e]} and {self.lgm.from_lg[f]} are not incident")
        return 1 << i

    def incident(self, v: int) -> list[int]:
        """Line vertices of the base pairs through ``v``, ascending."""
        return [self.vertex(v, w) for w in range(self.n) if w != v]

    def decode(self, mask: int) -> list[tuple[int, int]]:
        return self.lg.edges_of_mask(mask)

    @lru_cache(maxsize=None)
    def clique_set(self, v: int) -> int:
        _distinct(self.n, v)
        m = 0
        for e, f in combinations(self.incident(v), 2):
            m |= self.pair(e, f)
        return m

    @lru_cache(maxsize=None)
    def half_star_set(self, u: int, v: int) -> int:
        _distinct(self.n, u, v)
        centre = self.vertex(u, v)
        m = 0
        for w in range(self.n):
            if w not in (u, v):
                m |= self.pair(centre, self.vertex(u, w))
        return m

    @lru_cache(maxsize=None)
    def star_set(self, u: int, v: int) -> int:
        return self.half_star_set(u, v) | self.half_star_set(v, u)

    def clique_on_subset(self, subset: Iterable[int]) -> int:
        return self._clique_on(frozenset(subset))

    @lru_cache(maxsize=None)
    def _clique_on(self, subset: frozenset[int]) -> int:
        _distinct(self.n, *subset)
        verts = [self.vertex(u, v) for u, v in combinations(sorted(subset), 2)]
        m = 0
        for e, f in combinations(verts, 2):
            if self._eid[e][f] >= 0:
                m |= self.pair(e, f)
        return m

    def triple_half(self, u: int, v: int, w: int) -> int:
        _distinct(self.n, u, v, w)
        uv = self.vertex(u, v)
        return self.pair(uv, self.vertex(u, w)) | self.pair(uv, self.vertex(v, w))


@lru_cache(maxsize=16)
def catalog_context(n: int) -> CatalogContext:
    return CatalogContext(n)


@dataclass(frozen=True)
class CatalogEntry:
    """One member of a family: edge bitmask over L(K_n) plus witness.

    ``witness`` is a full ordering of the line vertices whose frontier
    recursion on L(K_n) reproduces ``mask``.
    """

    n: int
    family: str
    tuple: tuple[int, ...]
    mask: int
    witness: Ordering

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def edges(self) -> list[tuple[int, int]]:
        return catalog_context(self.n).decode(self.mask)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "tuple": list(self.tuple),
            "size": self.size,
            "edges": [list(e) for e in self.edges],
            "witness": list(self.witness),
        }


def _witness(ctx: CatalogContext, pairs: Sequence[tuple[int, int]]) -> Ordering:
    return complete_ordering(ctx.lg, [ctx.vertex(u, v) for u, v in pairs])


def _others(n: int, centre: int, skip: Iterable[int]) -> list[tuple[int, int]]:
    """Base pairs ``(centre, w)`` for ``w`` outside ``skip``, ascending ``w``."""
    skip = set(skip) | {centre}
    return [(centre, w) for w in range(n) if w not in skip]


def family_a(ctx: CatalogContext, a: int, b: int, c: int, d: int, e: int) -> CatalogEntry:
    _distinct(ctx.n, a, b, c, d, e)
    mask = (
        ctx.clique_set(a)
        | ctx.star_set(a, b)
        | ctx.star_set(a, d)
        | ctx.clique_on_subset((a, b, c))
        | ctx.clique_on_subset((a, d, e))
    )
    order = [(a, b), (a, c)]
    order += _others(ctx.n, a, (b, c, d, e))
    order.append((d, e))
    order += _others(ctx.n, d, (a, e))
    order.append((a, e))
    return CatalogEntry(ctx.n, "A", (a, b, c, d, e), mask, _witness(ctx, order))


def family_b(ctx: CatalogContext, a: int, b: int, c: int, d: int) -> CatalogEntry:
    _distinct(ctx.n, a, b, c, d)
    mask = ctx.star_set(a, b) | ctx.star_set(a, d) | ctx.clique_on_subset((a, b, c, d))
    order = [(a, b), (c, d), (a, c), (b, d)]
    order += _others(ctx.n, a, (b, c, d))
    order += _others(ctx.n, d, (a, b, c))
    return CatalogEntry(ctx.n, "B", (a, b, c, d), mask, _witness(ctx, order))


def family_c(ctx: CatalogContext, a: int, b: int, c: int, d: int, variant: str = "C") -> CatalogEntry:
    """``F`` (variant ``"C"``) or ``F'`` (variant ``"C'"``) on ``(a, b, c, d)``.

    The two differ only in carrying the star of ``ad`` or of ``bc``.
    """
    _distinct(ctx.n, a, b, c, d)
    if variant not in ("C", "C'"):
        raise ValueError(f"variant must be 'C' or \"C'\", got {variant!r}")
    core = (
        ctx.star_set(a, b)
        | ctx.half_star_set(a, c)
        | ctx.clique_on_subset((a, b, c))
        | ctx.clique_on_subset((a, b, d))
        | ctx.triple_half(a, d, c)
        | ctx.triple_half(b, c, d)
    )
    order = [(a, b), (a, c), (b, d), (c, d)]
    if variant == "C":
        mask = core | ctx.star_set(a, d)
        order += _others(ctx.n, a, (b, c, d)) + _others(ctx.n, d, (a, b, c))
    else:
        mask = core | ctx.star_set(b, c)
        order += _others(ctx.n, b, (a, c, d)) + _others(ctx.n, c, (a, b, d))
    return CatalogEntry(ctx.n, variant, (a, b, c, d), mask, _witness(ctx, order))


def raw_catalog(n: int) -> Iterator[CatalogEntry]:
    """Every family instance over all ordered tuples, duplicates included.

    Order: family A over 5-tuples, then B, C, C' over 4-tuples, each in
    lexicographic tuple order.
    """
    if n < 5:
        raise ValueError(f"the catalog needs n >= 5, got {n}")
    ctx = catalog_context(n)
    for t in permutations(range(n), 5):
        yield family_a(ctx, *t)
    quads = list(permutations(range(n), 4))
    for t in quads:
        yield family_b(ctx, *t)
    for t in quads:
        yield family_c(ctx, *t, variant="C")
    for t in quads:
        yield family_c(ctx, *t, variant="C'")


@dataclass(frozen=True)
class CatalogStats:
    raw: dict[str, int]
    distinct: int
    maximal: int


def enumerate_catalog(n: int, *, with_stats: bool = False):
    """Distinct, inclusion-wise maximal family instances for L(K_n).

    The first generated instance of each edge set is kept, so the returned
    list is in :func:`raw_catalog` order.
    """
    first: dict[int, CatalogEntry] = {}
    raw = dict.fromkeys(FAMILIES, 0)
    for entry in raw_catalog(n):
        raw[entry.family] += 1
        first.setdefault(entry.mask, entry)
    keep = maximal_masks(first)
    out = [e for e in first.values() if e.mask in keep]
    if with_stats:
        return out, CatalogStats(raw, len(first), len(out))
    return out


@lru_cache(maxsize=8)
def cached_catalog(n: int) -> tuple[CatalogEntry, ...]:
    return tuple(enumerate_catalog(n))


def catalog_summary(entries: Sequence[CatalogEntry]) -> dict:
    families = dict.fromkeys(FAMILIES, 0)
    sizes: dict[int, int] = {}
    for e in entries:
        families[e.family] += 1
        sizes[e.size] = sizes.get(e.size, 0) + 1
    return {"families": families, "sizes": {str(k): sizes[k] for k in sorted(sizes)}, "count": len(entries)}


__all__ = [
    "FAMILIES",
    "CatalogContext",
    "CatalogEntry",
    "catalog_context",
    "cached_catalog",
    "catalog_summary",
    "enumerate_catalog",
    "family_a",
    "family_b",
    "family_c",
    "raw_catalog",
]
