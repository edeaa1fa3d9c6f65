import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbc import Color, Coloring, Graph, is_nbc, parity_lower_bound, penalty
from nbc.graph import batch_penalties

from brute import all_penalties, balance_penalty

C4 = Graph.cycle(4)
K3 = Graph.complete(3)
K4 = Graph.complete(4)
P3 = Graph.path(3)


@st.composite
def graph_and_coloring(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    bits = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    return Graph(n, edges), Coloring(tuple(bits))


def test_graph_normalizes_edges():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.neighbors(1) == (0, 2)
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph(3, edges)


def test_coloring_code_is_lsb_first():
    c = Coloring.from_code(0b0110, 4)
    assert c.to_string() == "BRRB"
    assert c[1] is Color.RED
    assert c.code == 6
    assert Coloring.from_string("0110") == c
    assert c.complement().to_string() == "RBBR"


def test_coloring_rejects_garbage():
    with pytest.raises(ValueError):
        Coloring.from_string("BRX")
    with pytest.raises(ValueError):
        Coloring.from_code(16, 4)


def test_c4_balanced_pattern():
    assert penalty(C4, Coloring.from_string("BBRR")).total == 0
    # exactly the four "two adjacent of each color" colorings are optimal
    zeros = [c for c, p in all_penalties(4, C4.sorted_edges()).items() if p == 0]
    assert sorted(zeros) == [(0, 0, 1, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 0, 0)]


def test_c4_alternating_is_worst():
    rep = penalty(C4, Coloring.from_string("BRBR"))
    assert rep.total == 8
    assert rep.per_vertex == (2, 2, 2, 2)


def test_triangle():
    rep = penalty(K3, Coloring.from_string("RBB"))
    assert rep.total == 2
    assert rep.per_vertex == (2, 0, 0)
    assert min(all_penalties(3, K3.sorted_edges()).values()) == 2


def test_all_blue_is_twice_edge_count():
    for g in (C4, K3, K4, P3, Graph.complete(7)):
        assert penalty(g, Coloring.uniform(g.n)).total == 2 * g.m


def test_isolated_vertices_contribute_nothing():
    g = Graph(4, [(0, 1)])
    rep = penalty(g, Coloring.from_string("BRRR"))
    assert rep.per_vertex[2:] == (0, 0)


def test_is_nbc_small_cases():
    assert is_nbc(Graph(1), Coloring.from_string("B"))
    assert is_nbc(Graph(1), Coloring.from_string("R"))
    for s in ("BB", "BR", "RB", "RR"):
        assert not is_nbc(Graph.path(2), Coloring.from_string(s))


def test_length_mismatch():
    with pytest.raises(ValueError):
        penalty(C4, Coloring.from_string("BRB"))
    with pytest.raises(ValueError):
        is_nbc(C4, Coloring.from_string("BRBRB"))


@pytest.mark.parametrize("g, expected", [(K4, 4), (C4, 0), (P3, 2), (Graph(5), 0)])
def test_parity_lower_bound(g, expected):
    assert parity_lower_bound(g) == expected


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring())
def test_penalty_properties(gc):
    g, c = gc
    rep = penalty(g, c)
    assert rep.total == sum(rep.per_vertex)
    assert rep.total % 2 == 0
    assert rep.total >= parity_lower_bound(g)
    assert rep.total == balance_penalty(g.n, g.sorted_edges(), c.bits)
    for v, pv in enumerate(rep.per_vertex):
        assert pv <= g.degree(v)
        assert (pv - g.degree(v)) % 2 == 0
        assert rep.red[v] + rep.blue[v] == g.degree(v)
    assert penalty(g, c.complement()) == PenaltyFlip(rep)
    assert is_nbc(g, c) == (rep.total == 0) == all(p == 0 for p in rep.per_vertex)


def PenaltyFlip(rep):
    # complement swaps red and blue counts and leaves |r - b| alone
    return type(rep)(rep.total, rep.per_vertex, rep.blue, rep.red)


@settings(max_examples=50, deadline=None)
@given(graph_and_coloring())
def test_batch_matches_scalar(gc):
    g, c = gc
    rows = [c.bits, c.complement().bits, (0,) * g.n]
    got = batch_penalties(g, rows)
    assert list(got) == [penalty(g, Coloring(r)).total for r in rows]


@given(st.integers(1, 8))
def test_edgeless_always_balanced(n):
    g = Graph(n)
    for code in range(2**n):
        assert is_nbc(g, Coloring.from_code(code, n))
