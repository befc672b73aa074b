import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bowtie, graph_from_mask, petersen, random_graph
from fanfree import (
    CapacityError,
    FanWitness,
    GraphInputError,
    complete_graph,
    contains_fan,
    contains_star,
    cycle_graph,
    empty_graph,
    fan_center_order,
    fan_update_safe,
    from_edges,
    is_fan_free,
    join,
    lift,
    matching_number,
    matching_number_bruteforce,
    max_matching,
    tutte_berge_check,
    tutte_berge_value,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


# -- matching number ----------------------------------------------------


def test_known_matching_numbers():
    assert matching_number(cycle_graph(5)) == 2
    assert matching_number(complete_graph(8)) == 4
    assert matching_number(petersen()) == 5
    assert matching_number(empty_graph(6)) == 0


@given(graphs())
def test_blossom_agrees_with_bruteforce(g):
    assert matching_number(g) == matching_number_bruteforce(g)


def test_bruteforce_capacity():
    with pytest.raises(CapacityError):
        matching_number_bruteforce(empty_graph(15))


def test_max_matching_pairs_are_a_matching():
    rng = random.Random(7)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 16), 0.4)
        res = max_matching(g)
        used = [v for pair in res.pairs for v in pair]
        assert len(used) == len(set(used)) == 2 * res.size
        assert all(g.has_edge(u, v) for u, v in res.pairs)
        assert res.size == matching_number(g)


# -- Tutte-Berge --------------------------------------------------------


def test_tutte_berge_examples():
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert tutte_berge_check(star, (0,)) == (1, True)
    assert tutte_berge_check(star, ()) == (2, False)
    assert tutte_berge_check(cycle_graph(5), ()) == (2, True)
    assert tutte_berge_value(complete_graph(4), (0, 1)) == 3
    with pytest.raises(GraphInputError):
        tutte_berge_value(cycle_graph(5), (9,))


def test_certificate_is_a_minimizer():
    rng = random.Random(99)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 12), 0.35)
        res = max_matching(g, with_certificate=True)
        assert res.certificate is not None
        val, attains = tutte_berge_check(g, res.certificate)
        assert attains and val == res.size


def test_certificate_capacity_gate():
    with pytest.raises(CapacityError):
        max_matching(cycle_graph(21), with_certificate=True)
    # isolated vertices do not count against the gate
    big = from_edges(40, [(0, 1)])
    assert max_matching(big, with_certificate=True).certificate == ()


@given(graphs())
def test_tutte_berge_never_undershoots(g):
    # the expression is an upper bound for every X, tight somewhere
    nu = matching_number(g)
    assert tutte_berge_value(g, ()) >= nu
    if g.n:
        assert tutte_berge_value(g, (0,)) >= nu


# -- fans ---------------------------------------------------------------


def test_fan_center_order():
    wheel = join(empty_graph(1), cycle_graph(5))
    assert fan_center_order(wheel, 0) == 2
    assert fan_center_order(wheel, 1) == 1
    assert fan_center_order(complete_graph(6), 0) == 2  # K_{2k}: k-1
    assert fan_center_order(complete_graph(7), 0) == 3  # K_{2k+1}: k


def test_contains_fan_witness():
    w = contains_fan(bowtie(), 2)
    assert w == FanWitness(0, ((1, 2), (3, 4)))
    assert contains_fan(bowtie(), 3) is None
    assert is_fan_free(bowtie(), 3)
    assert not is_fan_free(bowtie(), 1)
    with pytest.raises(GraphInputError):
        contains_fan(bowtie(), 0)


def test_fan_witness_is_genuine():
    rng = random.Random(1234)
    found = 0
    for _ in range(60):
        g = random_graph(rng, rng.randint(6, 13), 0.55)
        for k in (1, 2, 3):
            w = contains_fan(g, k)
            if w is None:
                continue
            found += 1
            assert len(w.pairs) == k
            touched = [v for p in w.pairs for v in p]
            assert len(set(touched)) == 2 * k and w.center not in touched
            for a, b in w.pairs:
                assert g.has_edge(a, b)
                assert g.has_edge(w.center, a) and g.has_edge(w.center, b)
    assert found > 50


# -- stars in triple systems --------------------------------------------


def test_contains_star_examples():
    k4 = lift(complete_graph(4))
    assert contains_star(k4, 2) is None
    w = contains_star(k4, 1)
    assert w is not None and len(w.pairs) == 1
    assert contains_star(lift(complete_graph(5)), 2) is not None
    with pytest.raises(GraphInputError):
        contains_star(k4, 0)


def test_star_witness_triples_exist():
    w = contains_star(lift(complete_graph(6)), 2)
    assert w is not None
    triples = set(lift(complete_graph(6)).triples)
    for a, b in w.pairs:
        assert tuple(sorted((w.center, a, b))) in triples


@settings(max_examples=40)
@given(graphs(), st.integers(min_value=1, max_value=3))
def test_fan_free_lifts_to_star_free(g, k):
    if is_fan_free(g, k):
        assert contains_star(lift(g), k) is None


# -- incremental update check -------------------------------------------


def test_fan_update_safe_matches_recheck():
    rng = random.Random(31337)
    checked = 0
    while checked < 40:
        n = rng.randint(5, 11)
        g = random_graph(rng, n, 0.3)
        k = rng.choice((2, 3))
        if not is_fan_free(g, k):
            continue
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        ]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        g2 = from_edges(n, list(g.edges()) + [(u, v)])
        assert fan_update_safe(g2, k, u, v) == is_fan_free(g2, k)
        checked += 1


def test_fan_update_safe_requires_the_edge():
    with pytest.raises(GraphInputError):
        fan_update_safe(cycle_graph(5), 2, 0, 2)
