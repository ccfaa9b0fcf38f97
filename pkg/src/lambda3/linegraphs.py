"""Line graphs, Krausz clique partitions and root graph reconstruction."""
from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form
from .graph import MAX_VERTICES, Graph, GraphError, _from_rows, iter_bits, make_graph


@dataclass(frozen=True)
class KrauszPartition:
    """Edge partition into cliques (each of size >= 2), every vertex in at most two."""

    cliques: tuple[tuple[int, ...], ...]

    def clique_degree(self, n: int) -> list[int]:
        deg = [0] * n
        for c in self.cliques:
            for v in c:
                deg[v] += 1
        return deg


def line_graph(h: Graph) -> Graph:
    edges = h.edges()
    if len(edges) > MAX_VERTICES:
        raise GraphError(f"line graph would have {len(edges)} > {MAX_VERTICES} vertices")
    m = len(edges)
    at = [0] * h.n
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    rows = []
    for i, (u, v) in enumerate(edges):
        rows.append((at[u] | at[v]) & ~(1 << i))
    return _from_rows(m, rows)


def _cliques_through(unc: list[int], free: int, u: int, v: int):
    """All vertex sets S with {u, v} <= S, pairwise joined by uncovered edges, S - {u,v} <= free."""
    base = (1 << u) | (1 << v)
    out = []

    def grow(current: int, cand: int):
        out.append(current)
        for w in iter_bits(cand):
            cand &= ~(1 << w)
            grow(current | (1 << w), cand & unc[w])

    grow(base, unc[u] & unc[v] & free)
    return out


def krausz_partitions(g: Graph, limit: int | None = None) -> list[KrauszPartition]:
    """All Krausz partitions of ``g`` (up to ``limit``), in a deterministic order."""
    n = g.n
    unc = list(g.adj)
    deg = [0] * n
    chosen: list[int] = []
    results: list[KrauszPartition] = []

    def forced(w: int) -> int:
        return unc[w] | (1 << w)

    def feasible(s: int) -> bool:
        for a in iter_bits(s):
            if deg[a] >= 2:
                return False
            if (s & ~(1 << a)) & ~unc[a]:
                return False
        return True

    def rec():
        if limit is not None and len(results) >= limit:
            return
        u = next((w for w in range(n) if unc[w]), None)
        if u is None:
            results.append(KrauszPartition(tuple(
                tuple(iter_bits(s)) for s in sorted(chosen, key=lambda s: tuple(iter_bits(s)))
            )))
            return
        v = (unc[u] & -unc[u]).bit_length() - 1
        if deg[u] == 1 or deg[v] == 1:
            # a vertex already in one clique must put all its remaining edges in the second
            need = {forced(w) for w in (u, v) if deg[w] == 1}
            options = [s for s in need if feasible(s)] if len(need) == 1 else []
        else:
            free = sum(1 << w for w in range(n) if deg[w] < 2)
            options = _cliques_through(unc, free, u, v)
        for s in options:
            members = list(iter_bits(s))
            saved = [(w, unc[w]) for w in members]
            ok = True
            for w in members:
                deg[w] += 1
                unc[w] &= ~s
                if deg[w] == 2 and unc[w]:
                    ok = False
            if ok:
                chosen.append(s)
                rec()
                chosen.pop()
            for w, row in saved:
                unc[w] = row
                deg[w] -= 1
            if limit is not None and len(results) >= limit:
                return

    rec()
    return results


def is_line_graph(g: Graph) -> bool:
    return bool(krausz_partitions(g, 1))


def check_partition(g: Graph, part: KrauszPartition) -> list[str]:
    """Independent validation; returns a list of violated conditions."""
    problems = []
    covered: dict[tuple[int, int], int] = {}
    count = [0] * g.n
    for c in part.cliques:
        if len(c) < 2:
            problems.append(f"clique {c} has fewer than 2 vertices")
        for i, a in enumerate(c):
            count[a] += 1
            for b in c[i + 1:]:
                if not g.has_edge(a, b):
                    problems.append(f"clique {c} misses edge {a}-{b}")
                key = (min(a, b), max(a, b))
                covered[key] = covered.get(key, 0) + 1
    for e in g.edges():
        if covered.get(e, 0) != 1:
            problems.append(f"edge {e} covered {covered.get(e, 0)} times")
    for v, k in enumerate(count):
        if k > 2:
            problems.append(f"vertex {v} lies in {k} cliques")
    return problems


def root_from_partition(g: Graph, part: KrauszPartition) -> tuple[Graph, list[tuple[int, int]]]:
    """Root graph for one partition, and the root edge standing for each vertex of g.

    Cliques become root vertices; a vertex in one clique gets a private
    endpoint; an isolated vertex becomes a separate K2.
    """
    member: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(part.cliques):
        for v in c:
            member[v].append(i)
    nxt = len(part.cliques)
    edge_of = []
    for v in range(g.n):
        ends = list(member[v])
        while len(ends) < 2:
            ends.append(nxt)
            nxt += 1
        edge_of.append((ends[0], ends[1]))
    return make_graph(nxt, edge_of), edge_of


def root_graphs(g: Graph) -> list[Graph]:
    """All root graphs up to isomorphism, sorted by canonical form."""
    roots: dict[bytes, Graph] = {}
    for part in krausz_partitions(g):
        h, _ = root_from_partition(g, part)
        roots.setdefault(canonical_form(h), h)
    return [roots[k] for k in sorted(roots)]
