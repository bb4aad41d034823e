"""Boxicity of the Kneser graphs KG(n, 2) = co-L(K_n).

The upper bound n - 2 comes from an explicit cover by family-A subgraphs.
The lower bound is refuted exhaustively through the catalog for n <= 6;
for larger n it rests on exact counting inequalities checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from boxkit.catalog import catalog_context, family_a, family_a_size
from boxkit.completion import (
    Color,
    Cover,
    boxicity_le_k,
    maximal_candidates,
    search_cover,
    verify_cover,
)
from boxkit.graph import complete_graph
from boxkit.interval_order import complete_ordering

EXHAUSTIVE_MAX_N = 6


def upper_bound_cover(n: int) -> Cover:
    """Cover of L(K_n) by n - 2 family-A subgraphs.

    Colour ``i`` is ``A(i, n-2, c, n-1, e)`` with ``c < e`` the two smallest
    base vertices other than ``i``, ``n-2`` and ``n-1``.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    ctx = catalog_context(n)
    colors = []
    for i in range(n - 2):
        c, e = [v for v in range(n - 2) if v != i][:2]
        entry = family_a(ctx, i, n - 2, c, n - 1, e)
        colors.append(Color(tuple(entry.edges), complete_ordering(ctx.lg, entry.witness)))
    return Cover(tuple(colors))


def _distinct_triple(n: int, t) -> set[int]:
    s = set(t)
    if len(s) != 3 or not all(0 <= v < n for v in s):
        raise ValueError(f"need three distinct vertices below {n}, got {t}")
    return s


def deltas_disjoint(n: int, triple1, triple2) -> bool:
    """Whether the stars of ``ab, ac`` and of ``a'b', a'c'`` share no edge.

    Computed by explicit set intersection in L(K_n); the first vertex of
    each triple is the shared endpoint.
    """
    _distinct_triple(n, triple1)
    _distinct_triple(n, triple2)
    ctx = catalog_context(n)
    a, b, c = triple1
    x, y, z = triple2
    left = ctx.star_set(a, b) | ctx.star_set(a, c)
    right = ctx.star_set(x, y) | ctx.star_set(x, z)
    return left & right == 0


@dataclass(frozen=True)
class Refutation:
    """Outcome of an exhaustive search for a k-cover of L(K_n)."""

    n: int
    k: int
    refuted: bool
    nodes: int
    candidates: int
    cover: Cover | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "refuted": self.refuted,
            "nodes": self.nodes,
            "candidates": self.candidates,
        }


def refute_cover(n: int, k: int, *, budget: int | None = None, threads: int | None = None, backend: str | None = None) -> Refutation:
    """Search all k-subsets of the catalog of L(K_n) for a cover.

    ``refuted`` is true when none exists.  Raises
    :class:`boxkit.kernels.SearchBudgetExceeded` when a root branch of the
    search passes ``budget`` nodes.
    """
    g = complete_graph(n)
    cands = maximal_candidates(g, threads=threads, backend=backend)
    universe = (1 << catalog_context(n).total_edges) - 1
    res = search_cover(universe, [c.mask for c in cands], k, threads=threads, budget=budget, backend=backend)
    cover = None
    if res.chosen is not None:
        cover = boxicity_le_k(g, k, threads=threads, backend=backend)
    return Refutation(n, k, res.chosen is None, res.nodes, len(cands), cover)


def counting_check(n: int) -> dict[str, bool]:
    """Exact integer checks behind the n >= 7 lower bound.

    * ``few_type_a``: with at most n - 5 family-A colours, n - 3 colours
      cover fewer than |E(L(K_n))| edges.
    * ``all_type_a``: n - 3 family-A colours total |E| + (n-1)(n-6)/2.
    * ``one_other``: n - 4 family-A colours plus one C colour total
      |E| + n - 6.
    """
    if n < 7:
        raise ValueError(f"counting argument needs n >= 7, got {n}")
    total = n * comb(n - 1, 2)
    a = family_a_size(n)
    # (n-1)(n-6) is always even; keep the halving exact
    return {
        "few_type_a": (n - 5) * a + 10 * (n - 2) < total,
        "all_type_a": 2 * (n - 3) * a == 2 * total + (n - 1) * (n - 6),
        "one_other": (n - 4) * a + 5 * (n - 2) == total + (n - 6),
    }


@dataclass(frozen=True)
class KneserResult:
    n: int
    boxicity: int
    upper_cover: Cover
    lower_bound_mode: str
    refutation: Refutation | None = None
    counting: dict[str, bool] | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "boxicity": self.boxicity,
            "lower_bound_mode": self.lower_bound_mode,
            "upper_cover": self.upper_cover.to_json(),
        }
        if self.refutation is not None:
            out["refutation"] = self.refutation.to_json()
        if self.counting is not None:
            out["counting"] = self.counting
        return out


def kneser_boxicity(n: int, *, full_refute: bool = False, budget: int | None = None, threads: int | None = None) -> KneserResult:
    """boxicity(KG(n, 2)) = n - 2 with its certificates.

    Raises ``RuntimeError`` if any certificate fails; that would mean the
    value n - 2 is wrong or the code is.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    cover = upper_bound_cover(n)
    report = verify_cover(catalog_context(n).lg, cover)
    if not report:
        raise RuntimeError(f"upper-bound cover failed: {report.message}")
    refutation = counting = None
    if n <= EXHAUSTIVE_MAX_N or full_refute:
        refutation = refute_cover(n, n - 3, budget=budget, threads=threads)
        if not refutation.refuted:
            raise RuntimeError(f"found a {n - 3}-cover of L(K_{n})")
        mode = "exhaustive"
    if n > EXHAUSTIVE_MAX_N:
        counting = counting_check(n)
        if not all(counting.values()):
            raise RuntimeError(f"counting identities fail at n={n}: {counting}")
        if not full_refute:
            mode = "counting"
    return KneserResult(n, n - 2, cover, mode, refutation, counting)
