import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_from_mask, random_graph
from fanfree import (
    CapacityError,
    Graph,
    Graph6ParseError,
    GraphInputError,
    check_graphical,
    complement,
    complete_graph,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced,
    is_graphical,
    join,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


# -- construction -------------------------------------------------------


def test_from_edges_triangle():
    g = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert degree_sequence(g) == (2, 2, 2)
    assert g.num_edges == 3


def test_from_edges_empty_and_dedup():
    assert from_edges(4, []).num_edges == 0
    assert from_edges(5, [(0, 1), (0, 1), (1, 2)]).num_edges == 2
    assert from_edges(5, [(1, 0), (0, 1)]).num_edges == 1


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphInputError):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphInputError):
        from_edges(3, [(1, 1)])
    with pytest.raises(GraphInputError):
        Graph(2, [0b10, 0b10])  # asymmetric adjacency / self-loop mix


def test_vertex_capacity():
    with pytest.raises(CapacityError):
        empty_graph(513)


@given(graphs())
def test_adjacency_symmetric_and_loop_free(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        for u in g.neighbors(v):
            assert g.has_edge(u, v) and g.has_edge(v, u)
        assert g.adj[v] >> g.n == 0


# -- complement / join / union / induced --------------------------------


def test_complement_k4_is_empty():
    assert complement(complete_graph(4)).num_edges == 0


def test_c5_self_complementary():
    from fanfree import are_isomorphic

    assert are_isomorphic(cycle_graph(5), complement(cycle_graph(5)))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=9))
def test_complement_degree_identity(g):
    n = g.n
    lhs = sorted(n - 1 - d for d in degree_sequence(g))
    assert lhs == sorted(degree_sequence(complement(g)))


def test_join_small_cases():
    c4 = join(empty_graph(2), empty_graph(2))
    assert c4.num_edges == 4 and degree_sequence(c4) == (2, 2, 2, 2)
    wheel = join(empty_graph(1), cycle_graph(4))
    assert wheel.num_edges == 8
    g = join(empty_graph(3), disjoint_union(complete_graph(2), complete_graph(2)))
    assert g.num_edges == 14


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g1, g2):
    assert join(g1, g2).num_edges == g1.num_edges + g2.num_edges + g1.n * g2.n


def test_join_capacity():
    with pytest.raises(CapacityError):
        join(empty_graph(300), empty_graph(300))


def test_disjoint_union():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    assert g.n == 6 and g.num_edges == 6
    assert disjoint_union(cycle_graph(5), empty_graph(0)) == cycle_graph(5)
    assert disjoint_union(complete_graph(4), complete_graph(4)).num_edges == 12


def test_induced():
    assert induced(complete_graph(5), [0, 2, 4]) == complete_graph(3)
    assert induced(cycle_graph(6), []).n == 0
    p3 = induced(cycle_graph(6), [0, 1, 2])
    assert p3.num_edges == 2 and degree_sequence(p3) == (2, 1, 1)
    with pytest.raises(GraphInputError):
        induced(cycle_graph(6), [0, 6])


def test_degree_sequence_examples():
    assert degree_sequence(complete_graph(5)) == (4, 4, 4, 4, 4)
    star = from_edges(5, [(0, i) for i in range(1, 5)])
    assert degree_sequence(star) == (4, 1, 1, 1, 1)


# -- graphical sequences ------------------------------------------------


def test_graphical_check():
    assert check_graphical((3, 3, 3, 3)) == (3, 3, 3, 3)
    assert is_graphical((1, 1, 1)) is False
    with pytest.raises(GraphInputError, match="odd"):
        check_graphical((1, 1, 1))
    with pytest.raises(GraphInputError, match="r=2"):
        check_graphical((4, 4, 4, 1, 1))
    with pytest.raises(GraphInputError):
        check_graphical((5, 0, 0))


@given(graphs())
def test_degree_sequences_are_graphical(g):
    assert is_graphical(degree_sequence(g))


# -- graph6 -------------------------------------------------------------


def test_graph6_known_strings():
    assert graph6_encode(complete_graph(3)) == "Bw"
    assert graph6_encode(complete_graph(4)) == "C~"
    assert graph6_encode(empty_graph(0)) == "?"
    assert graph6_decode("Bw") == complete_graph(3)
    assert graph6_decode("C~") == complete_graph(4)


@given(graphs(max_n=12))
def test_graph6_roundtrip(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_roundtrip_long_form():
    rng = random.Random(6363)
    for n in range(60, 71):
        g = random_graph(rng, n, 0.3)
        s = graph6_encode(g)
        if n >= 63:
            assert s.startswith("~")
        assert graph6_decode(s) == g


def test_graph6_parse_errors_carry_offsets():
    with pytest.raises(Graph6ParseError) as exc:
        graph6_decode("")
    assert exc.value.offset == 0
    with pytest.raises(Graph6ParseError) as exc:
        graph6_decode("Bw\x05")
    assert exc.value.offset == 2
    with pytest.raises(Graph6ParseError):
        graph6_decode("C")  # truncated payload
    with pytest.raises(Graph6ParseError):
        graph6_decode("A?x")  # trailing garbage
    with pytest.raises(Graph6ParseError):
        graph6_decode("A@")  # nonzero padding bits
    assert graph6_decode("A_") == complete_graph(2)
