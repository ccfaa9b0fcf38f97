import itertools
import random

import pytest

from lambda3.graph import Graph, make_graph

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def report12():
    from lambda3.growth import enumerate_to
    return enumerate_to(12)


@pytest.fixture(scope="session")
def census():
    from lambda3.growth import complement_subgraph_census
    return complement_subgraph_census()


def random_graph(rng: random.Random, n: int, q: float | None = None) -> Graph:
    q = rng.random() if q is None else q
    return make_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < q])


def relabel(g: Graph, perm) -> Graph:
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def to_nx(g: Graph):
    import networkx as nx
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G
