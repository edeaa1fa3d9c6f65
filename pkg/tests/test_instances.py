import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbc import GenSpec, Graph, generate, parity_lower_bound, random_even_graph, random_graph


def test_p_zero_is_edgeless():
    for n in (1, 5, 30):
        assert random_graph(n, 0.0, 7).m == 0


def test_p_one_is_complete():
    assert random_graph(5, 1.0, 3) == Graph.complete(5)
    assert random_graph(5, 1.0, 3).m == 10


def test_uniform_deterministic_per_seed():
    assert random_graph(40, 0.3, 11) == random_graph(40, 0.3, 11)
    assert random_graph(40, 0.3, 11) != random_graph(40, 0.3, 12)


def test_uniform_density_roughly_p():
    g = random_graph(200, 0.25, 5)
    assert abs(g.m / (200 * 199 / 2) - 0.25) < 0.02


@pytest.mark.parametrize("bad", [dict(n=0), dict(n=4, p=1.5), dict(n=4, p=-0.1), dict(n=4, mode="grid")])
def test_genspec_validation(bad):
    with pytest.raises(ValueError):
        GenSpec(**bad)


def test_even_triangle():
    assert random_even_graph(3, 1.0, 0) == Graph.complete(3)


def test_even_needs_three_vertices():
    with pytest.raises(ValueError):
        random_even_graph(2, 0.5, 0)


def test_even_deterministic():
    assert random_even_graph(25, 0.4, 8) == random_even_graph(25, 0.4, 8)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.floats(0, 1), st.integers(0, 2**32))
def test_even_degrees(n, p, seed):
    g = random_even_graph(n, p, seed)
    assert parity_lower_bound(g) == 0
    assert all(g.degree(v) % 2 == 0 for v in range(n))


def test_even_density_tracks_p():
    n = 60
    for p in (0.1, 0.3, 0.5):
        frac = random_even_graph(n, p, 1).m / (n * (n - 1) / 2)
        assert abs(frac - p) < 0.1


def test_generate_dispatch():
    assert generate(GenSpec(10, 0.5, 2)) == random_graph(10, 0.5, 2)
    assert generate(GenSpec(10, 0.5, 2, "even-degree")) == random_even_graph(10, 0.5, 2)
