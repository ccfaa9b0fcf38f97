"""Simple undirected graphs on at most 62 vertices.

Adjacency is stored as one bitmask per vertex, so neighbourhood
intersections and independence tests are single integer operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for invalid graph construction or parameters."""


@dataclass(frozen=True)
class Graph:
    """Immutable labeled graph. Equality is labeled equality."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _from_rows(n: int, rows: Sequence[int]) -> Graph:
    # trusted constructor for internal callers that already maintain symmetry
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _from_rows(n, rows)


def complete(n: int) -> Graph:
    _check(n)
    full = (1 << n) - 1
    return _from_rows(n, [full ^ (1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    _check(n)
    return _from_rows(n, [0] * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check(n)
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    return make_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return complete_bipartite(1, k)


def _check(n: int):
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")


def standard(kind: str, *params: int) -> Graph:
    builders = {
        "complete": complete,
        "empty": empty,
        "cycle": cycle,
        "path": path,
        "complete_bipartite": complete_bipartite,
    }
    if kind not in builders:
        raise GraphError(f"unknown standard graph kind {kind!r}")
    if any(p < 0 for p in params):
        raise GraphError("parameters must be non-negative")
    return builders[kind](*params)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _from_rows(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vs: Sequence[int]) -> Graph:
    """Subgraph induced on ``vs``; vertex ``vs[i]`` becomes vertex ``i``."""
    vs = list(vs)
    if len(set(vs)) != len(vs):
        raise GraphError("duplicate vertex in subset")
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in vs:
        row = g.adj[v]
        rows.append(sum(1 << i for i, u in enumerate(vs) if row >> u & 1))
    return _from_rows(len(vs), rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise GraphError(f"union would have {a.n + b.n} > {MAX_VERTICES} vertices")
    return _from_rows(a.n + b.n, list(a.adj) + [row << a.n for row in b.adj])


def add_vertex(g: Graph, nbrs: int) -> Graph:
    """Append a vertex adjacent to the bitmask ``nbrs``."""
    if g.n + 1 > MAX_VERTICES:
        raise GraphError("vertex limit reached")
    w = g.n
    rows = [row | (1 << w) if nbrs >> v & 1 else row for v, row in enumerate(g.adj)]
    rows.append(nbrs)
    return _from_rows(g.n + 1, rows)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return _from_rows(g.n, rows)


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, colouring)`` or ``(False, None)``."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in iter_bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if not g.adj[v]]


def independent_mask(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in iter_bits(mask))


def independence_at_least(g: Graph, k: int, allowed: int | None = None) -> bool:
    """True if some independent set of size ``k`` exists inside ``allowed``."""
    if allowed is None:
        allowed = (1 << g.n) - 1

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        for v in iter_bits(cand):
            cand &= ~(1 << v)
            if grow(cand & ~g.adj[v], need - 1):
                return True
        return False

    return grow(allowed, k)
