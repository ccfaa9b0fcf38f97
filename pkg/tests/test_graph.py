import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph
from lambda3.canon import are_isomorphic
from lambda3.families import gen_b1, gen_b3
from lambda3.graph import (GraphError, complement, complete, complete_bipartite, connected_components,
                           cycle, disjoint_union, empty, induced_subgraph, is_bipartite, is_connected,
                           make_graph, path, standard)
from lambda3.linegraphs import line_graph


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [e for e, keep in zip(pairs, mask) if keep])


def test_make_graph_basic_shapes():
    assert make_graph(3, []).num_edges() == 0
    k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete(3)
    cs1 = make_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])
    assert sorted(cs1.degree(v) for v in range(6)) == [1, 1, 1, 1, 3, 3]


def test_make_graph_collapses_duplicates():
    assert make_graph(2, [(0, 1), (1, 0), (0, 1)]).num_edges() == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_make_graph_rejects_bad_pairs(edges):
    with pytest.raises(GraphError):
        make_graph(3, edges)


def test_vertex_limit():
    make_graph(62)
    with pytest.raises(GraphError):
        make_graph(63)


def test_standard_graphs():
    assert standard("complete", 4).num_edges() == 6
    c5 = standard("cycle", 5)
    assert c5.num_edges() == 5 and all(c5.degree(v) == 2 for v in range(5))
    assert standard("complete_bipartite", 3, 4).num_edges() == 12
    assert standard("path", 4).num_edges() == 3
    assert standard("empty", 3) == empty(3)
    with pytest.raises(GraphError):
        standard("cycle", 2)
    with pytest.raises(GraphError):
        standard("wheel", 5)


def test_complement_examples():
    for n in range(6):
        assert complement(complete(n)) == empty(n)
    assert are_isomorphic(complement(cycle(5)), cycle(5))
    three_k2 = make_graph(6, [(0, 1), (2, 3), (4, 5)])
    assert are_isomorphic(complement(three_k2), line_graph(complete(4)))


def test_complement_involution_exhaustive():
    for n in range(6):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            g = make_graph(n, [e for k, e in enumerate(pairs) if bits >> k & 1])
            assert complement(complement(g)) == g


@given(graphs())
def test_complement_involution_random(g):
    co = complement(g)
    assert complement(co) == g
    assert co.num_edges() + g.num_edges() == g.n * (g.n - 1) // 2


def test_induced_subgraph():
    assert induced_subgraph(complete(5), [1, 3, 4]) == complete(3)
    assert induced_subgraph(cycle(5), [0, 1, 2]) == path(3)
    # order of vs decides the relabeling
    assert induced_subgraph(path(3), [1, 0, 2]) == make_graph(3, [(0, 1), (0, 2)])
    with pytest.raises(GraphError):
        induced_subgraph(path(3), [0, 5])


def _odd_closed_walk(g) -> bool:
    # a graph has an odd cycle iff tr(A^k) > 0 for some odd k <= n
    a = g.adjacency_matrix().astype(object)
    p = a.copy()
    for k in range(1, g.n + 1):
        if k % 2 and np.trace(p) > 0:
            return True
        p = p @ a
    return False


def test_is_bipartite_examples():
    ok, colour = is_bipartite(empty(0))
    assert ok and colour == []
    assert is_bipartite(complete_bipartite(3, 4))[0]
    assert not is_bipartite(complete(3))[0]
    assert not is_bipartite(cycle(7))[0]


def test_is_bipartite_against_odd_walks():
    rng = random.Random(11)
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.15, 0.25, 0.4]))
        ok, colour = is_bipartite(g)
        assert ok == (not _odd_closed_walk(g))
        if ok:
            assert all(colour[u] != colour[v] for u, v in g.edges())


def test_components():
    assert len(connected_components(empty(3))) == 3
    assert is_connected(gen_b1())
    g = disjoint_union(gen_b3(2), empty(2))
    assert g.n == 10 and len(connected_components(g)) == 3
    assert not is_connected(empty(0))
    assert is_connected(empty(1))


@given(graphs(max_n=14))
def test_components_partition_vertices(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    label = {v: i for i, c in enumerate(comps) for v in c}
    assert all(label[u] == label[v] for u, v in g.edges())


def test_disjoint_union():
    assert disjoint_union(make_graph(1), make_graph(1)) == empty(2)
    assert disjoint_union(empty(0), cycle(5)) == cycle(5)
    with pytest.raises(GraphError):
        disjoint_union(empty(40), empty(30))
