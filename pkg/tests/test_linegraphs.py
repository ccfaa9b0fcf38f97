import itertools
import random

import networkx as nx

from conftest import random_graph, to_nx
from lambda3.canon import are_isomorphic, canonical_form
from lambda3.graph import (complete, cycle, empty, induced_subgraph, is_connected,
                           make_graph, path, star)
from lambda3.linegraphs import (KrauszPartition, check_partition, is_line_graph, krausz_partitions,
                                line_graph, root_from_partition, root_graphs)
from lambda3.theorems import random_connected_roots


def test_line_graph_examples():
    assert are_isomorphic(line_graph(complete(4)), make_graph(6, [
        (u, v) for u, v in itertools.combinations(range(6), 2) if {u, v} not in ({0, 1}, {2, 3}, {4, 5})]))
    assert line_graph(path(4)) == path(3)
    assert are_isomorphic(line_graph(star(3)), complete(3))
    assert are_isomorphic(line_graph(cycle(5)), cycle(5))


def test_line_graph_matches_networkx():
    rng = random.Random(1)
    for _ in range(50):
        h = random_graph(rng, rng.randint(2, 8))
        assert nx.is_isomorphic(to_nx(line_graph(h)), nx.line_graph(to_nx(h)))


def test_triangle_has_two_partitions():
    parts = krausz_partitions(complete(3))
    assert len(parts) == 2
    assert {len(p.cliques) for p in parts} == {1, 3}
    roots = root_graphs(complete(3))
    assert len(roots) == 2
    assert {canonical_form(r) for r in roots} == {canonical_form(complete(3)), canonical_form(star(3))}


def test_claw_is_not_a_line_graph():
    assert krausz_partitions(star(3)) == []
    assert not is_line_graph(star(3))


def test_large_clique_single_partition():
    parts = krausz_partitions(complete(10))
    assert len(parts) == 1 and parts[0].cliques == (tuple(range(10)),)


def test_isolated_vertices_become_separate_edges():
    roots = root_graphs(empty(3))
    assert len(roots) == 1 and are_isomorphic(roots[0], make_graph(6, [(0, 1), (2, 3), (4, 5)]))
    assert root_graphs(empty(0)) == [empty(0)]


def test_partition_limit():
    assert len(krausz_partitions(complete(3), limit=1)) == 1


def test_check_partition_catches_problems():
    k3 = complete(3)
    assert check_partition(k3, KrauszPartition(((0, 1, 2),))) == []
    assert check_partition(k3, KrauszPartition(((0, 1),)))  # uncovered edges
    assert check_partition(path(3), KrauszPartition(((0, 1, 2),)))  # not a clique
    s = star(3)
    assert any("3 cliques" in msg for msg in check_partition(s, KrauszPartition(((0, 1), (0, 2), (0, 3)))))


def test_every_partition_is_valid_and_reconstructs():
    rng = random.Random(7)
    for _ in range(120):
        h = random_graph(rng, rng.randint(1, 7))
        g = line_graph(h)
        parts = krausz_partitions(g)
        assert parts, "line graphs always have a partition"
        for part in parts:
            assert check_partition(g, part) == []
            root, edge_of = root_from_partition(g, part)
            assert are_isomorphic(line_graph(root), g)
            assert len(edge_of) == g.n


def test_recognition_against_networkx():
    rng = random.Random(12)
    seen = 0
    while seen < 200:
        g = random_graph(rng, rng.randint(4, 9), rng.choice([0.3, 0.5, 0.7]))
        if not is_connected(g):
            continue
        seen += 1
        try:
            nx.inverse_line_graph(to_nx(g))
            expected = True
        except nx.NetworkXError:
            expected = False
        assert is_line_graph(g) == expected


def test_recognition_is_hereditary_on_small_graphs():
    # every induced subgraph of a line graph is a line graph
    rng = random.Random(2)
    for _ in range(30):
        g = line_graph(random_graph(rng, 6, 0.6))
        for r in range(1, min(g.n, 6) + 1):
            vs = rng.sample(range(g.n), r)
            assert is_line_graph(induced_subgraph(g, vs))


def test_whitney_unique_roots():
    for h in random_connected_roots(200, seed=3):
        roots = root_graphs(line_graph(h))
        assert len(roots) == 1 and are_isomorphic(roots[0], h)
