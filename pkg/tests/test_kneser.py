import itertools
import random
from math import comb

import pytest

from boxkit.completion import boxicity_bruteforce, verify_cover
from boxkit.graph import complete_graph, kneser_n2, line_graph
from boxkit.kneser import counting_check, deltas_disjoint, kneser_boxicity, refute_cover, upper_bound_cover


def star_pairs(n, a, b, c):
    """Edges of L(K_n) incident to the line vertices ab or ac, as frozensets
    of base-edge pairs."""
    centres = {frozenset((a, b)), frozenset((a, c))}
    out = set()
    for x in centres:
        for y in map(frozenset, itertools.combinations(range(n), 2)):
            if len(x & y) == 1:
                out.add(frozenset((x, y)))
    return out


@pytest.mark.parametrize("n", range(5, 12))
def test_upper_bound_cover(n):
    cover = upper_bound_cover(n)
    lg = line_graph(complete_graph(n)).lg
    assert cover.k == n - 2
    assert all(len(c.edges) == (n + 2) * (n - 1) // 2 for c in cover.colors)
    assert verify_cover(lg, cover)
    assert len(set().union(*(c.edges for c in cover.colors))) == n * comb(n - 1, 2)


def test_upper_bound_cover_needs_five():
    with pytest.raises(ValueError):
        upper_bound_cover(4)


def test_deltas_disjoint_examples():
    assert deltas_disjoint(6, (0, 1, 2), (3, 4, 5))
    assert not deltas_disjoint(6, (0, 1, 2), (2, 3, 4))
    assert not deltas_disjoint(6, (0, 1, 2), (0, 1, 2))
    with pytest.raises(ValueError):
        deltas_disjoint(6, (0, 0, 1), (2, 3, 4))


@pytest.mark.parametrize("seed", range(4))
def test_deltas_disjoint_matches_direct_sets(seed):
    r = random.Random(seed)
    n = 7
    for _ in range(60):
        t1, t2 = r.sample(range(n), 3), r.sample(range(n), 3)
        want = not (star_pairs(n, *t1) & star_pairs(n, *t2))
        assert deltas_disjoint(n, t1, t2) == want == (not set(t1) & set(t2))


def test_refutations():
    r = refute_cover(5, 2)
    assert r.refuted and r.cover is None and r.candidates == 360
    r = refute_cover(6, 3)
    assert r.refuted and r.candidates == 1260
    r = refute_cover(5, 3)
    assert not r.refuted and r.cover is not None
    assert verify_cover(line_graph(complete_graph(5)).lg, r.cover)


def test_counting_arithmetic_at_seven():
    # few_type_a: 2 * 27 + 50 = 104 < 105
    assert 2 * 27 + 10 * 5 == 104 < 7 * comb(6, 2)
    assert counting_check(7) == {"few_type_a": True, "all_type_a": True, "one_other": True}
    assert all(counting_check(100).values())


def test_counting_boundary():
    with pytest.raises(ValueError):
        counting_check(6)
    n = 6
    # the first inequality would fail at n = 6
    assert not (n - 5) * (n + 2) * (n - 1) // 2 + 10 * (n - 2) < n * comb(n - 1, 2)


@pytest.mark.parametrize("n, mode", [(5, "exhaustive"), (6, "exhaustive"), (7, "counting"), (9, "counting")])
def test_kneser_boxicity(n, mode):
    res = kneser_boxicity(n)
    assert res.boxicity == n - 2
    assert res.lower_bound_mode == mode
    assert res.upper_cover.k == n - 2
    if mode == "counting":
        assert res.refutation is None and all(res.counting.values())
    else:
        assert res.refutation.refuted and res.refutation.k == n - 3


def test_kneser_petersen_oracle_agreement():
    assert boxicity_bruteforce(kneser_n2(5)).boxicity == 3 == kneser_boxicity(5).boxicity


def test_kneser_json():
    doc = kneser_boxicity(5).to_json()
    assert doc["boxicity"] == 3 and doc["refutation"]["refuted"]
    assert len(doc["upper_cover"]) == 3


def test_kneser_rejects_small_n():
    with pytest.raises(ValueError):
        kneser_boxicity(4)


@pytest.mark.slow
def test_full_refutation_at_seven():
    r = refute_cover(7, 4)
    assert r.refuted and r.candidates == 3360
    assert kneser_boxicity(7, full_refute=True).lower_bound_mode == "exhaustive"
