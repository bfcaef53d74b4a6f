import random
from fractions import Fraction

import pytest

from lipmap import (BudgetExceededError, LipschitzParams, PreconditionError,
                    is_valid, range_of)
from lipmap.oracle import (brute_extendable, count_monotonicity_check,
                           enumerate_extensions, enumerate_mappings, stats)
from graphgen import (complete, connected_graphs, cycle, path, random_tree,
                      single_edge, star)


def test_single_edge_listing():
    got = [f.values for f in enumerate_mappings(single_edge(), 0, 1)]
    assert got == [(0, -1), (0, 0), (0, 1)]


def test_single_edge_strong_listing():
    got = [f.values for f in enumerate_mappings(single_edge(), 0, 1, strong=True)]
    assert got == [(0, -1), (0, 1)]


def test_single_edge_stats():
    st = stats(single_edge(), 0, 1)
    assert (st.count, st.avg_range, st.max_range_distinct, st.max_span) == \
        (3, Fraction(5, 3), 2, 2)


def test_single_edge_strong_stats():
    st = stats(single_edge(), 0, 2, strong=True)
    assert (st.count, st.avg_range) == (2, Fraction(2, 1))
    assert st.max_span == 3  # values 0 and +-2


def test_path3_count():
    assert stats(path(3), 0, 1).count == 9


def test_triangle_max_distinct_matches_formula():
    from lipmap import max_range
    assert stats(complete(3), 0, 1).max_range_distinct == max_range(complete(3), 1) == 2


def test_count_is_root_invariant():
    # translating every value by -f(r') maps the set rooted at r onto the
    # set rooted at r', bijectively
    g = cycle(5).with_edge(0, 2)
    counts = {stats(g, r, 2).count for r in range(g.n)}
    assert len(counts) == 1


def test_tree_counts_closed_form():
    # on a tree each edge picks its step independently
    rng = random.Random(1)
    for _ in range(10):
        g = random_tree(rng.randint(1, 7), rng)
        assert stats(g, rng.randrange(g.n), 1).count == 3 ** (g.n - 1)
        assert stats(g, rng.randrange(g.n), 4, strong=True).count == 2 ** (g.n - 1)


def test_enumeration_is_sorted_and_unique():
    for g in (path(4), cycle(5), complete(4), star(3)):
        for m, strong in ((1, False), (2, False), (1, True), (2, True)):
            seen = [f.values for f in enumerate_mappings(g, 0, m, strong=strong)]
            assert seen == sorted(set(seen))


def test_stats_agree_with_listing():
    g = cycle(4)
    fs = list(enumerate_mappings(g, 0, 2))
    st = stats(g, 0, 2)
    assert st.count == len(fs)
    assert st.max_range_distinct == max(range_of(f) for f in fs)
    assert st.avg_range == Fraction(sum(range_of(f) for f in fs), len(fs))


def test_every_emitted_mapping_is_valid():
    g = cycle(5)
    for strong in (False, True):
        for f in enumerate_mappings(g, 0, 1, strong=strong):
            assert f.values[0] == 0
            assert is_valid(g, f, LipschitzParams(1, strong))[0]


def test_brute_extendable_examples():
    f = brute_extendable(path(3), {0: 0, 2: 2}, 1)
    assert f.values == (0, 1, 2) and f.root == 0
    assert brute_extendable(path(3), {0: 0, 2: 3}, 1) is None
    f = brute_extendable(path(3), {0: 1, 2: 1}, 1)
    assert f.values == (1, 0, 1) and f.root == 1


def test_brute_extendable_respects_prescription():
    rng = random.Random(9)
    for _ in range(50):
        g = random_tree(rng.randint(1, 6), rng)
        pins = {v: rng.randint(-2, 2) for v in rng.sample(range(g.n), rng.randint(0, g.n))}
        f = brute_extendable(g, pins, 1)
        if f is not None:
            assert f.agrees_with(pins)
            assert is_valid(g, f, LipschitzParams(1))[0]


def test_enumerate_extensions_deduplicates():
    seen = [f.values for f in enumerate_extensions(cycle(4), {0: 0, 2: 0}, 1)]
    assert len(seen) == len(set(seen))
    assert max(len(set(v)) for v in seen) == 3
    assert all(v[0] == 0 and v[2] == 0 for v in seen)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        list(enumerate_mappings(cycle(6), 0, 2, budget=10))
    with pytest.raises(BudgetExceededError):
        stats(cycle(6), 0, 3, budget=100)


def test_bad_root_rejected():
    with pytest.raises(PreconditionError):
        stats(path(2), 2, 1)


def test_monotonicity_examples():
    assert stats(path(3), 0, 1).count == 9 >= stats(complete(3), 0, 1).count == 7
    assert count_monotonicity_check(star(3), 1)
    assert count_monotonicity_check(complete(3), 1)  # vacuous


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monotonicity_exhaustive_small(n):
    for g in connected_graphs(n):
        assert count_monotonicity_check(g, 1)
