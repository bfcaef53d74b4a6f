import random

import pytest

from lipmap import InputError, extend_general, extend_strong
from lipmap.lhom import LHomInstance, build_instance, parse_instance, propagate, solve
from graphgen import (complete, connected_graphs, path, random_connected,
                      random_prescription, single_edge)


def test_build_instance_lists():
    inst = build_instance(path(3), {0: 0}, 1)
    assert inst.target_bound == 3
    assert sorted(inst.lists[0]) == [0]
    assert sorted(inst.lists[1]) == list(range(-3, 4))
    assert sorted(inst.lists[2]) == list(range(-3, 4))


def test_target_rule():
    inst = build_instance(single_edge(), {}, 2, strong=True)
    assert inst.target_adjacent(0, 2) and inst.target_adjacent(2, 0)
    assert not inst.target_adjacent(0, 1) and not inst.target_adjacent(0, 0)
    weak = build_instance(single_edge(), {}, 2)
    assert weak.target_adjacent(0, 0) and weak.target_adjacent(0, 2)
    assert not weak.target_adjacent(0, 3)


def test_out_of_target_prescription_rejected():
    with pytest.raises(InputError):
        build_instance(path(3), {0: 7}, 1)


def test_serialize_layout():
    inst = build_instance(path(3), {0: 0}, 1)
    lines = inst.serialize().splitlines()
    assert lines[0] == "3 1 0"
    assert lines[1] == "0 0..0"
    assert lines[2] == "1 -3..3"


def test_serialize_non_contiguous_lists():
    inst = LHomInstance(single_edge(), 2, 1, True,
                        (frozenset({-2, 0, 2}), frozenset()))
    text = inst.serialize()
    assert "{-2,0,2}" in text and "{}" in text
    back = parse_instance(text, single_edge())
    assert back == inst


def test_serialize_round_trip_random():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randint(1, 6)
        g = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), rng)
        pins = random_prescription(g, rng, lo=-g.n, hi=g.n)
        inst = build_instance(g, pins, rng.randint(1, 3), strong=rng.random() < 0.5)
        assert parse_instance(inst.serialize(), g) == inst


def test_parse_rejects_malformed():
    g = path(2)
    with pytest.raises(InputError):
        parse_instance("", g)
    with pytest.raises(InputError):
        parse_instance("2 1\n0 0..0\n1 0..0", g)  # short header
    with pytest.raises(InputError):
        parse_instance("2 1 0\n0 0..0", g)  # missing list
    with pytest.raises(InputError):
        parse_instance("2 1 0\n0 0..0\n0 0..0", g)  # repeated vertex


def test_solve_forced_chain():
    sol = solve(build_instance(path(3), {0: 0, 2: 2}, 1), require_zero=True)
    assert sol.values == (0, 1, 2) and sol.root == 0


def test_solve_adjacent_conflict():
    assert solve(build_instance(complete(3), {0: 0, 1: 3}, 1), require_zero=True) is None


def test_strong_triangle_unsolvable_either_way():
    inst = build_instance(complete(3), {}, 1, strong=True)
    assert solve(inst, require_zero=True) is None
    assert solve(inst) is None


def test_strong_triangle_needs_search_beyond_propagation():
    # arc consistency alone leaves full domains on the odd cycle; only the
    # backtracking layer discovers that no assignment exists
    inst = build_instance(complete(3), {}, 1, strong=True)
    doms = propagate(inst)
    assert all(doms[v] for v in range(3))
    assert solve(inst) is None


def test_propagation_monotone_and_interval_shaped():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(1, 6)
        g = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), rng)
        pins = random_prescription(g, rng, lo=-n, hi=n)
        inst = build_instance(g, pins, rng.randint(1, 3))
        doms = propagate(inst)
        for v in range(n):
            assert set(doms[v]) <= inst.lists[v]
            if doms[v]:  # weak rule keeps domains contiguous
                assert doms[v] == list(range(doms[v][0], doms[v][-1] + 1))


def test_strong_domains_are_parity_striped_once_pinned():
    rng = random.Random(15)
    for _ in range(40):
        n = rng.randint(2, 6)
        g = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), rng)
        m = rng.randint(1, 3)
        v = rng.randrange(n)
        inst = build_instance(g, {v: m * rng.randint(-1, 1)}, m, strong=True,
                              bound=m * n)
        doms = propagate(inst)
        if any(not d for d in doms):
            continue  # doomed instance; propagation stops at the first empty
        for d in doms:
            assert d == list(range(d[0], d[-1] + 1, 2 * m))


def test_solve_agrees_with_extend_general():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randint(1, 6)
        g = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), rng)
        m = rng.randint(1, 2)
        pins = random_prescription(g, rng, lo=-n, hi=n)
        sol = solve(build_instance(g, pins, m), require_zero=True)
        res = extend_general(g, pins, m)
        assert (sol is not None) == res.extended, (g.adj, pins, m)
        if sol is not None:
            assert sol.agrees_with(pins) and sol.values[sol.root] == 0


def test_solve_without_root_rule_is_weaker():
    # {u: 1} on a lone vertex: a homomorphism exists, a rooted mapping cannot
    from lipmap import Graph
    g = Graph(1)
    inst = build_instance(g, {0: 1}, 1)
    assert solve(inst) == (1,)
    assert solve(inst, require_zero=True) is None
    assert not extend_general(g, {0: 1}, 1).extended


def test_strong_solve_used_by_extend_strong():
    g = path(4)
    res = extend_strong(g, {0: 0, 3: 3}, 1)
    assert res.extended and res.mapping.values == (0, 1, 2, 3)
