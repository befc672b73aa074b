import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graph_from_mask, random_graph
from fanfree import (
    GraphInputError,
    TripleSystem,
    cherry_count,
    cherry_identity_check,
    codegree,
    complete_graph,
    count_triangles,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    goodman_check,
    join,
    lift,
    triangle_count,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


def _brute_triangles(g):
    return sum(
        1
        for u in range(g.n)
        for v in range(u + 1, g.n)
        for w in range(v + 1, g.n)
        if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)
    )


# -- counting -----------------------------------------------------------


def test_counts_on_named_graphs():
    assert triangle_count(complete_graph(5)) == 10
    assert triangle_count(cycle_graph(6)) == 0
    two_k3 = disjoint_union(complete_graph(3), complete_graph(3))
    assert triangle_count(join(empty_graph(4), two_k3)) == 26


def test_table_is_lexicographic_and_consistent():
    g = join(empty_graph(2), complete_graph(3))
    table = count_triangles(g)
    assert table.triangles == tuple(sorted(table.triangles))
    assert all(u < v < w for u, v, w in table.triangles)
    assert table.count == len(table.triangles)
    assert sum(table.codegree.values()) == 3 * table.count


@given(graphs(max_n=12))
def test_count_matches_brute_force(g):
    table = count_triangles(g)
    assert table.count == _brute_triangles(g)
    assert sum(table.codegree.values()) == 3 * table.count


def test_codegree():
    assert codegree(complete_graph(6), 1, 4) == 4
    assert codegree(cycle_graph(5), 0, 1) == 0
    assert codegree(cycle_graph(5), 0, 2) == 1  # non-edges are allowed
    with pytest.raises(GraphInputError):
        codegree(cycle_graph(5), 2, 2)


# -- triple systems -----------------------------------------------------


def test_lift_examples():
    assert len(lift(complete_graph(4)).triples) == 4
    assert lift(cycle_graph(7)).triples == ()
    wheel = lift(join(empty_graph(1), cycle_graph(4)))
    assert len(wheel.triples) == 4
    assert all(0 in t for t in wheel.triples)


def test_triple_system_validation():
    with pytest.raises(GraphInputError):
        TripleSystem(4, ((0, 1, 1),))
    with pytest.raises(GraphInputError):
        TripleSystem(3, ((0, 1, 3),))
    with pytest.raises(GraphInputError):
        TripleSystem(4, ((0, 2, 1),))  # not sorted


def test_triple_text_roundtrip():
    ts = lift(complete_graph(4))
    text = ts.to_text()
    assert text.splitlines()[0] == "0 1 2"
    back = TripleSystem.from_text(text, n=4)
    assert back == ts
    assert TripleSystem.from_text("\n# comment\n 1 2 0\n").triples == ((0, 1, 2),)
    with pytest.raises(GraphInputError):
        TripleSystem.from_text("0 1")


def test_link_graph():
    ts = lift(complete_graph(4))
    link = ts.link(0)
    assert link.num_edges == 3  # triangle on {1,2,3}


# -- identities ---------------------------------------------------------


def test_goodman_named_cases():
    rep = goodman_check(cycle_graph(5))
    assert (rep.lhs, rep.rhs, rep.holds) == (10, 10, True)
    rep = goodman_check(complete_graph(7))
    assert rep.holds and rep.triangles == 35 and rep.complement_triangles == 0


def test_cherry_named_cases():
    assert cherry_count(from_edges(3, [(0, 1), (1, 2)])) == 1
    assert cherry_count(complete_graph(3)) == 0
    star = from_edges(6, [(0, i) for i in range(1, 6)])
    assert cherry_count(star) == 10


@given(graphs(max_n=12))
def test_identities_always_hold(g):
    assert goodman_check(g).holds
    lhs, rhs, holds = cherry_identity_check(g)
    assert holds and lhs == rhs


def test_identities_on_larger_random_graphs():
    rng = random.Random(404)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 40), rng.choice((0.2, 0.5, 0.8)))
        assert goodman_check(g).holds
        assert cherry_identity_check(g)[2]
