import random

import pytest

from boxkit.catalog import catalog_context, enumerate_catalog, family_a
from boxkit.completion import (
    CertificateError,
    Color,
    Cover,
    boxicity_bruteforce,
    boxicity_co_line,
    boxicity_le_k,
    maximal_candidates,
    min_completion,
    minimal_interval_completions,
    restrict_entry,
    search_cover,
    verify_cover,
)
from boxkit.graph import Graph, complement, complete_graph, cycle_graph, kneser_n2, line_graph
from boxkit.interval_order import (
    check_chain_property,
    is_interval_order_bruteforce,
    maximal_interval_order_subgraphs_bruteforce,
)
from boxkit.kernels import SearchBudgetExceeded
from boxkit.kneser import upper_bound_cover
from conftest import random_graph
from oracles import chain_ok, min_cover_naive

LK5 = line_graph(complete_graph(5)).lg


def random_base(r, n, max_edges):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, r.sample(pairs, r.randint(1, max_edges)))


def test_restrict_to_complete_graph_is_identity():
    entry = enumerate_catalog(5)[0]
    cand = restrict_entry(entry, complete_graph(5))
    assert cand.mask == entry.mask and cand.witness == entry.witness


def test_restrict_to_single_edge_is_empty():
    cand = restrict_entry(enumerate_catalog(5)[0], Graph.from_edges(5, [(0, 1)]))
    assert cand.mask == 0 and len(cand.witness) <= 1


def test_restrict_rejects_size_mismatch():
    with pytest.raises(ValueError):
        restrict_entry(enumerate_catalog(5)[0], complete_graph(6))


@pytest.mark.parametrize("seed", range(10))
def test_restrict_matches_direct_translation(seed):
    r = random.Random(seed)
    ctx = catalog_context(6)
    g = random_base(r, 6, 15)
    entry = family_a(ctx, *r.sample(range(6), 5))
    lgm = line_graph(g)
    expect = set()
    for p, q in entry.edges:
        e, f = ctx.lgm.from_lg[p], ctx.lgm.from_lg[q]
        if e in lgm.to_lg and f in lgm.to_lg:
            expect.add(tuple(sorted((lgm.to_lg[e], lgm.to_lg[f]))))
    cand = restrict_entry(entry, g)
    assert set(lgm.lg.edges_of_mask(cand.mask)) == expect
    assert chain_ok(lgm.lg.spanning(expect), [v for v in cand.witness] + [v for v in range(lgm.lg.n) if v not in cand.witness])


@pytest.mark.parametrize("seed", range(20))
def test_catalog_candidates_match_bruteforce(seed):
    r = random.Random(100 + seed)
    g = random_base(r, r.choice([5, 6, 7]), 10)
    lg = line_graph(g).lg
    got = {c.mask for c in maximal_candidates(g)}
    want = {s.mask for s in maximal_interval_order_subgraphs_bruteforce(lg)}
    assert got == want


def test_k5_completion_sizes_and_minimum():
    comps = minimal_interval_completions(complete_graph(5))
    assert {len(c.added_edges) for c in comps} == {14, 15, 16}
    best = min_completion(complete_graph(5))
    assert best.weight == len(best.added_edges) == 14


def test_k6_completions_all_add_forty():
    comps = minimal_interval_completions(complete_graph(6))
    assert {len(c.added_edges) for c in comps} == {40}
    assert min_completion(complete_graph(6)).weight == 40


def test_completions_are_interval_and_minimal():
    g = complete_graph(5)
    co = complement(LK5)
    r = random.Random(3)
    comps = minimal_interval_completions(g)
    for c in r.sample(comps, 40):
        assert not set(c.added_edges) & set(co.edges)
        kept = LK5.spanning(LK5.edges_of_mask(c.kept_mask))
        assert set(kept.edges) | set(c.added_edges) == set(LK5.edges)
        assert check_chain_property(kept, c.witness)
        # dropping any added edge breaks the interval property
        for e in c.added_edges:
            assert is_interval_order_bruteforce(LK5.spanning(list(kept.edges) + [e])) is None


def test_completion_count_bound():
    for n in (5, 6):
        assert len(minimal_interval_completions(complete_graph(n))) <= 4 * n ** 5


def test_zero_weights():
    w = {e: 0 for e in LK5.edges}
    assert min_completion(complete_graph(5), w).weight == 0


def test_weights_pick_the_cheap_completion():
    g = complete_graph(5)
    comps = minimal_interval_completions(g)
    target = max(comps, key=lambda c: len(c.added_edges))
    w = {e: 0 for e in target.added_edges}
    best = min_completion(g, w)
    assert best.weight == 0
    assert all(e in w for e in best.added_edges)


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        min_completion(complete_graph(5), {(0, 1): -1})


def test_verify_cover_petersen_upper_bound():
    cover = upper_bound_cover(5)
    rep = verify_cover(LK5, cover)
    assert rep and rep.edge is None and cover.k == 3


def test_verify_reports_missing_edge():
    cover = upper_bound_cover(5)
    union = set().union(*(c.edges for c in cover.colors))
    assert union == set(LK5.edges)
    e = LK5.edges[7]
    stripped = Cover(tuple(Color(tuple(x for x in c.edges if x != e), c.witness) for c in cover.colors))
    rep = verify_cover(LK5, stripped)
    assert not rep and rep.edge == e


def test_verify_rejects_whole_line_graph_as_one_colour():
    assert is_interval_order_bruteforce(LK5) is None
    r = random.Random(5)
    for _ in range(20):
        w = list(range(10))
        r.shuffle(w)
        assert not verify_cover(LK5, Cover((Color(LK5.edges, tuple(w)),)))


def test_verify_structural_errors():
    with pytest.raises(CertificateError):
        verify_cover(LK5, Cover((Color(LK5.edges[:1], (0, 1, 2)),)))
    with pytest.raises(CertificateError):
        verify_cover(LK5, Cover((Color(((3, 3),), tuple(range(10))),)))
    rep = verify_cover(LK5, Cover((Color(((0, 9),), tuple(range(10))),)))
    assert not LK5.has_edge(0, 9) and not rep


def test_cover_json_round_trip():
    cover = upper_bound_cover(6)
    assert Cover.from_json(cover.to_json()) == cover
    with pytest.raises(CertificateError):
        Cover.from_json({"edges": []})
    with pytest.raises(CertificateError):
        Cover.from_json([{"edges": [[0, 1]]}])


@pytest.mark.parametrize("seed", range(40))
def test_search_cover_matches_naive(seed):
    r = random.Random(seed)
    m = r.randint(4, 12)
    sets = [{i for i in range(m) if r.random() < 0.35} for _ in range(r.randint(3, 9))]
    masks = [sum(1 << i for i in s) for s in sets]
    universe = (1 << m) - 1
    best = min_cover_naive(set(range(m)), sets, len(sets))
    for k in range(len(sets) + 1):
        res = search_cover(universe, masks, k)
        assert (res.chosen is not None) == (best is not None and k >= best)
        if res.chosen is not None:
            assert len(res.chosen) <= k
            covered = 0
            for i in res.chosen:
                covered |= masks[i]
            assert covered == universe
        threaded = search_cover(universe, masks, k, threads=3)
        assert threaded.chosen == res.chosen


def test_search_cover_rejects_negative_k():
    with pytest.raises(ValueError):
        search_cover(1, [1], -1)


def test_search_budget():
    cands = maximal_candidates(complete_graph(6))
    with pytest.raises(SearchBudgetExceeded):
        search_cover((1 << 60) - 1, [c.mask for c in cands], 3, budget=50)


def test_boxicity_le_k_petersen():
    assert boxicity_le_k(complete_graph(5), 2) is None
    cover = boxicity_le_k(complete_graph(5), 3)
    assert cover is not None and verify_cover(LK5, cover) and cover.k <= 3


def test_boxicity_le_k_matching():
    g = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    cover = boxicity_le_k(g, 0)
    assert cover is not None and cover.k == 0
    assert boxicity_co_line(g).boxicity == 0


@pytest.mark.parametrize("seed", range(8))
def test_boxicity_le_k_monotone(seed):
    r = random.Random(seed)
    g = random_base(r, 6, 12)
    res = boxicity_co_line(g)
    b = res.boxicity
    for k in range(b + 3):
        assert (boxicity_le_k(g, k) is not None) == (k >= b)


def test_boxicity_co_line_small_base_graphs():
    tri = complete_graph(3)
    assert boxicity_co_line(tri).boxicity == 1
    assert boxicity_co_line(tri).method == "bruteforce"
    k4 = complete_graph(4)
    assert boxicity_co_line(k4).boxicity == boxicity_bruteforce(complement(line_graph(k4).lg)).boxicity == 1


def test_boxicity_co_line_max_k():
    res = boxicity_co_line(complete_graph(5), max_k=2)
    assert res.boxicity is None and res.to_json()["boxicity"] == "exceeds 2"


def test_boxicity_bruteforce_examples():
    assert boxicity_bruteforce(kneser_n2(5)).boxicity == 3
    assert boxicity_bruteforce(complete_graph(5)).boxicity == 0
    # 2K_2 is not an interval-order graph and C_4 is not chordal
    c4 = boxicity_bruteforce(cycle_graph(4))
    assert c4.boxicity == 2
    assert verify_cover(complement(cycle_graph(4)), c4.cover)


def test_threads_do_not_change_certificates():
    one = boxicity_le_k(complete_graph(6), 4, threads=1)
    four = boxicity_le_k(complete_graph(6), 4, threads=4)
    assert one == four


@pytest.mark.parametrize("seed", range(6))
def test_random_bruteforce_covers_verify(seed):
    r = random.Random(seed)
    h = random_graph(r, 7, 0.5)
    res = boxicity_bruteforce(h)
    assert verify_cover(complement(h), res.cover)
    if res.boxicity > 0:
        assert boxicity_bruteforce(h, max_k=res.boxicity - 1).boxicity is None


def test_search_nodes_match_unsplit_kernel():
    from boxkit import kernels
    masks = [c.mask for c in maximal_candidates(complete_graph(6))]
    universe = (1 << 60) - 1
    chosen, nodes = kernels.cover_search(universe, masks, 3)
    assert chosen is None
    for t in (1, 2, 5):
        assert search_cover(universe, masks, 3, threads=t) == search_cover(universe, masks, 3, threads=1)
        assert search_cover(universe, masks, 3, threads=t).nodes == nodes
