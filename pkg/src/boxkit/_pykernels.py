"""Pure-Python search kernels.

Reference implementation of the two hot loops; ``_ckernels.pyx`` mirrors it
exactly and is preferred when compiled.  Sets are Python ints used as
bitmasks throughout.
"""

from __future__ import annotations

from typing import Sequence


class SearchBudgetExceeded(RuntimeError):
    """Raised when a cover search explores more nodes than its budget."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


def _edges_to(v: int, targets: int, eidx: Sequence[Sequence[int]]) -> int:
    row = eidx[v]
    m = 0
    while targets:
        low = targets & -targets
        m |= 1 << row[low.bit_length() - 1]
        targets ^= low
    return m


def prefix_terminals(
    n: int,
    adj: Sequence[int],
    eidx: Sequence[Sequence[int]],
    first: Sequence[int],
) -> list[tuple[int, tuple[int, ...]]]:
    """Edge sets E^sigma of every terminal prefix reachable from ``first``.

    Depth-first over prefixes.  After each choice the vertices whose
    neighbourhood contains the whole frontier are appended at once in
    ascending order; a branch ends when no remaining vertex meets the
    frontier.  Returns ``(edge_mask, prefix)`` pairs in DFS order, one per
    distinct edge mask (first occurrence wins).
    """
    full = (1 << n) - 1
    seen: dict[int, tuple[int, ...]] = {}
    prefix: list[int] = []

    def dfs(used: int, frontier: int, edges: int) -> None:
        depth = len(prefix)
        rest = full & ~used
        r = rest
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            if adj[v] & frontier == frontier:
                edges |= _edges_to(v, frontier, eidx)
                used |= low
                prefix.append(v)
        rest = full & ~used
        branched = False
        r = rest
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            nf = adj[v] & frontier
            if nf:
                branched = True
                prefix.append(v)
                dfs(used | low, nf, edges | _edges_to(v, nf, eidx))
                prefix.pop()
        if not branched and edges not in seen:
            seen[edges] = tuple(prefix)
        del prefix[depth:]

    for v in first:
        prefix.append(v)
        f = adj[v]
        if f:
            dfs(1 << v, f, _edges_to(v, f, eidx))
        elif 0 not in seen:
            seen[0] = (v,)
        prefix.pop()
    if n == 0:
        seen[0] = ()
    return list(seen.items())


class CoverProblem:
    """Candidate sets indexed by element, reusable across searches.

    :meth:`search` branches on the lowest uncovered element, trying only
    candidates that contain it, in the given candidate order.  A node is cut
    when the remaining picks times the largest candidate size cannot reach
    the uncovered count.  ``top`` restricts the first branching level to
    those candidate positions (used to split work); ``None`` means all.
    """

    def __init__(self, universe: int, cands: Sequence[int]):
        self.universe = universe
        self.cands = [c & universe for c in cands]
        self.maxsize = max((c.bit_count() for c in self.cands), default=0)
        self.by_elem: dict[int, list[int]] = {}
        for i, c in enumerate(self.cands):
            while c:
                low = c & -c
                self.by_elem.setdefault(low.bit_length() - 1, []).append(i)
                c ^= low

    def search(self, k: int, top: Sequence[int] | None = None, budget: int | None = None) -> tuple[list[int] | None, int]:
        """``(chosen indices or None, nodes explored)`` for a k-cover."""
        cands, by_elem, maxsize = self.cands, self.by_elem, self.maxsize
        allowed = None if top is None else set(top)
        chosen: list[int] = []
        nodes = 0

        def rec(uncovered: int, depth: int) -> bool:
            nonlocal nodes
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(nodes)
            if not uncovered:
                return True
            if depth == k or (k - depth) * maxsize < uncovered.bit_count():
                return False
            e = (uncovered & -uncovered).bit_length() - 1
            options = by_elem.get(e, ())
            if depth == 0 and allowed is not None:
                options = [i for i in options if i in allowed]
            for i in options:
                chosen.append(i)
                if rec(uncovered & ~cands[i], depth + 1):
                    return True
                chosen.pop()
            return False

        if rec(self.universe, 0):
            return chosen, nodes
        return None, nodes


def cover_search(
    universe: int,
    cands: Sequence[int],
    k: int,
    top: Sequence[int] | None = None,
    budget: int | None = None,
) -> tuple[list[int] | None, int]:
    """Exact search for ``k`` candidates whose union contains ``universe``.

    One-shot form of :class:`CoverProblem`.
    """
    return CoverProblem(universe, cands).search(k, top, budget)


def first_branch_options(universe: int, cands: Sequence[int]) -> list[int]:
    """Candidate positions tried at the root of :func:`cover_search`."""
    if not universe:
        return []
    e = (universe & -universe).bit_length() - 1
    return [i for i, c in enumerate(cands) if c >> e & 1]
