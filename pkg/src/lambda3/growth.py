"""Growing line graphs with lambda_3 <= 0 from three independent root vertices.

A state is a graph, three pairwise non-adjacent root vertices and a Krausz
partition. A vertex move adds one vertex w whose neighbourhood is one or two
disjoint "attachment sites" of the partition:

* a clique of the partition (w enlarges it), or
* a singleton {u} for a vertex u lying in fewer than two cliques (w forms
  the new clique {u, w}).

With one site this covers expanding a clique and attaching a pendent K2;
with two sites it covers letting two cliques share the new vertex. An edge
move joins two vertices that each lie in at most one clique (never two
roots) and records the edge as a new 2-clique.

Growth never creates isolated vertices and never grows a second separate
component: the non-isolated vertices always induce one connected graph.
Every kept state has lambda_3 <= 0, decided exactly.

States are deduplicated by the canonical form of the graph with its roots
marked, and every Krausz partition is regenerated when a state is expanded,
so the stored partition never limits what can be grown.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .canon import canonical_form
from .families import gen_b1, gen_b2, gen_b3, gen_b4, member_theorem2, mnp_triples
from .graph import (
    Graph,
    _from_rows,
    add_edge,
    add_vertex,
    complement,
    connected_components,
    empty,
    independence_at_least,
    induced_subgraph,
    is_bipartite,
    is_connected,
    isolated_vertices,
    iter_bits,
)
from .linegraphs import KrauszPartition, check_partition, is_line_graph, krausz_partitions
from .spectra import lambda3_nonpositive

log = logging.getLogger(__name__)

MAX_TARGET = 13
ORACLE_MAX = 7


@dataclass(frozen=True)
class GrownState:
    graph: Graph
    roots: tuple[int, int, int]
    partition: KrauszPartition

    def key(self) -> bytes:
        return state_key(self.graph, self.roots)


def state_key(g: Graph, roots) -> bytes:
    colors = [1 if v in roots else 0 for v in range(g.n)]
    return canonical_form(g, colors)


def initial_state() -> GrownState:
    return GrownState(empty(3), (0, 1, 2), KrauszPartition(()))


def _core_connected(g: Graph) -> bool:
    core = [v for v in range(g.n) if g.adj[v]]
    return not core or is_connected(induced_subgraph(g, core))


def _sites(g: Graph, part: KrauszPartition):
    deg = part.clique_degree(g.n)
    sites = [sum(1 << v for v in c) for c in part.cliques]
    sites += [1 << v for v in range(g.n) if deg[v] < 2]
    return sites, deg


def _literal_sites(g: Graph, part: KrauszPartition):
    """Sites usable in the two-clique move when read literally: cliques and
    vertices in no clique, paired only when no edge joins them."""
    deg = part.clique_degree(g.n)
    return [sum(1 << v for v in c) for c in part.cliques] + [1 << v for v in range(g.n) if deg[v] == 0]


def _grow(g: Graph, part: KrauszPartition, site_a: int, site_b: int = 0):
    w = g.n
    g2 = add_vertex(g, site_a | site_b)
    cliques = []
    used = set()
    for c in part.cliques:
        mask = sum(1 << v for v in c)
        if mask in (site_a, site_b):
            cliques.append(c + (w,))
            used.add(mask)
        else:
            cliques.append(c)
    for s in (site_a, site_b):
        if s and s not in used:
            cliques.append(tuple(iter_bits(s)) + (w,))
    return g2, KrauszPartition(tuple(sorted(cliques)))


def vertex_moves(s: GrownState, literal: bool = False) -> list[GrownState]:
    """All valid one-vertex extensions of ``s`` using its stored partition."""
    g, part = s.graph, s.partition
    sites, _ = _sites(g, part)
    candidates = [_grow(g, part, a) for a in sites]
    if literal:
        pair_sites = _literal_sites(g, part)
        pairs = [(a, b) for a, b in itertools.combinations(pair_sites, 2)
                 if not a & b and not any(g.adj[v] & b for v in iter_bits(a))]
    else:
        pairs = [(a, b) for a, b in itertools.combinations(sites, 2) if not a & b]
    candidates += [_grow(g, part, a, b) for a, b in pairs]
    out = []
    for g2, p2 in candidates:
        if _core_connected(g2) and lambda3_nonpositive(g2):
            out.append(GrownState(g2, s.roots, p2))
    return out


def edge_moves(s: GrownState) -> list[GrownState]:
    g, part = s.graph, s.partition
    deg = part.clique_degree(g.n)
    roots = set(s.roots)
    out = []
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.has_edge(u, w) or deg[u] > 1 or deg[w] > 1 or (u in roots and w in roots):
                continue
            g2 = add_edge(g, u, w)
            if not _core_connected(g2) or not lambda3_nonpositive(g2):
                continue
            p2 = KrauszPartition(tuple(sorted(part.cliques + ((u, w),))))
            out.append(GrownState(g2, s.roots, p2))
    return out


def _expansions(s: GrownState, moves) -> list[GrownState]:
    out = []
    for part in krausz_partitions(s.graph):
        out.extend(moves(GrownState(s.graph, s.roots, part)))
    return out


@dataclass
class EnumerationReport:
    """Per-level results; each level maps graph canonical forms to one witness state."""

    levels: dict[int, dict[bytes, GrownState]] = field(default_factory=dict)
    state_counts: dict[int, int] = field(default_factory=dict)

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.levels.items())}

    def catalog(self, n: int) -> list[tuple[bytes, Graph]]:
        return [(key, st.graph) for key, st in sorted(self.levels.get(n, {}).items())]

    def all_graphs(self):
        for n in sorted(self.levels):
            for key, st in sorted(self.levels[n].items()):
                yield key, st


def enumerate_to(target_n: int, literal: bool = False) -> EnumerationReport:
    """Breadth-first growth up to ``target_n`` vertices."""
    if not 3 <= target_n <= MAX_TARGET:
        raise ValueError(f"target_n must be in 3..{MAX_TARGET}")
    report = EnumerationReport()
    start = initial_state()
    frontier = {start.key(): start}
    vmoves = (lambda st: vertex_moves(st, literal=True)) if literal else vertex_moves
    for n in range(3, target_n + 1):
        if n > 3:
            level: dict[bytes, GrownState] = {}
            for key in sorted(frontier):
                for nxt in _expansions(frontier[key], vmoves):
                    level.setdefault(nxt.key(), nxt)
            frontier = level
        # close the level under edge moves
        queue = sorted(frontier)
        while queue:
            fresh = []
            for key in queue:
                for nxt in _expansions(frontier[key], edge_moves):
                    k2 = nxt.key()
                    if k2 not in frontier:
                        frontier[k2] = nxt
                        fresh.append(k2)
            queue = sorted(fresh)
        graphs: dict[bytes, GrownState] = {}
        for key in sorted(frontier):
            st = frontier[key]
            graphs.setdefault(canonical_form(st.graph), st)
        report.levels[n] = graphs
        report.state_counts[n] = len(frontier)
        log.info("level %d: %d rooted states, %d graphs", n, len(frontier), len(graphs))
    return report


def validate_state(s: GrownState) -> list[str]:
    """Re-check the state invariants from scratch."""
    g = s.graph
    problems = []
    r = s.roots
    if len(set(r)) != 3 or any(g.has_edge(a, b) for a, b in itertools.combinations(r, 2)):
        problems.append("roots are not three pairwise non-adjacent vertices")
    problems += check_partition(g, s.partition)
    if not lambda3_nonpositive(g):
        problems.append("lambda_3 > 0")
    if not is_line_graph(g):
        problems.append("not a line graph")
    if any(v not in r for v in isolated_vertices(g)):
        problems.append("isolated non-root vertex")
    if not _core_connected(g):
        problems.append("non-isolated part is disconnected")
    return problems


# --- brute-force oracle ------------------------------------------------------


def growable(g: Graph) -> bool:
    """Could ``g`` be a grown graph? Isolated vertices must all be roots and the
    rest must be one connected piece holding the remaining roots independently."""
    iso = isolated_vertices(g)
    core = [v for v in range(g.n) if g.adj[v]]
    if not core:
        return g.n == 3
    if len(iso) > 2:
        return False
    sub = induced_subgraph(g, core)
    return is_connected(sub) and independence_at_least(sub, 3 - len(iso))


def _batch_positive_counts(patterns: np.ndarray, k: int, pairs) -> np.ndarray:
    """Exact number of positive eigenvalues for a batch of adjacency bit patterns.

    Characteristic polynomials come from a batched Faddeev-LeVerrier recurrence in
    int64 (exact at k <= 7); a real-rooted polynomial has exactly as many
    positive roots as sign changes in its coefficients.
    """
    e = len(pairs)
    a = np.zeros((len(patterns), k, k), dtype=np.int64)
    for idx, (i, j) in enumerate(pairs):
        bit = ((patterns >> (e - 1 - idx)) & 1).astype(np.int64)
        a[:, i, j] = bit
        a[:, j, i] = bit
    coeffs = np.zeros((len(patterns), k + 1), dtype=np.int64)
    coeffs[:, k] = 1
    m = np.zeros_like(a)
    eye = np.eye(k, dtype=np.int64)
    for step in range(1, k + 1):
        m = a @ m + coeffs[:, k - step + 1, None, None] * eye
        coeffs[:, k - step] = -np.trace(a @ m, axis1=1, axis2=2) // step
    signs = np.sign(coeffs)
    changes = np.zeros(len(patterns), dtype=np.int64)
    last = np.zeros(len(patterns), dtype=np.int64)
    for col in range(k + 1):
        s = signs[:, col]
        changes += (s != 0) & (last != 0) & (s != last)
        last = np.where(s != 0, s, last)
    return changes


def oracle_enumerate(max_n: int) -> list[bytes]:
    """Canonical forms of every graph on exactly ``max_n`` vertices that is a line
    graph with lambda_3 <= 0 and an induced 3K1, by exhaustive search over all
    upper-triangle bit patterns.

    Sound vectorised prefilters (independent triple present, no induced claw,
    at most two positive eigenvalues by sign counting) shrink the batch before
    the authoritative per-graph checks: Krausz search and Sturm counting.
    """
    k = max_n
    if k > ORACLE_MAX:
        raise ValueError(f"oracle refused for max_n={k} > {ORACLE_MAX}")
    if k < 3:
        return []
    pairs = [(i, j) for j in range(1, k) for i in range(j)]
    e = len(pairs)
    pos = {p: idx for idx, p in enumerate(pairs)}

    def bit(i, j):
        return np.uint32(1 << (e - 1 - pos[(min(i, j), max(i, j))]))

    found: set[bytes] = set()
    chunk = 1 << 16
    for lo in range(0, 1 << e, chunk):
        pat = np.arange(lo, min(lo + chunk, 1 << e), dtype=np.uint32)
        keep = np.zeros(len(pat), dtype=bool)
        for a, b, c in itertools.combinations(range(k), 3):
            mask = bit(a, b) | bit(a, c) | bit(b, c)
            keep |= (pat & mask) == 0
        for v in range(k):
            for a, b, c in itertools.combinations([u for u in range(k) if u != v], 3):
                spokes = bit(v, a) | bit(v, b) | bit(v, c)
                rim = bit(a, b) | bit(a, c) | bit(b, c)
                keep &= ~(((pat & spokes) == spokes) & ((pat & rim) == 0))
        pat = pat[keep]
        if len(pat):
            pat = pat[_batch_positive_counts(pat, k, pairs) <= 2]
        for code in pat.tolist():
            rows = [0] * k
            for idx, (i, j) in enumerate(pairs):
                if code >> (e - 1 - idx) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            found.add(canonical_form(_from_rows(k, rows)))
    from .graph6 import parse_graph6

    out = []
    for key in sorted(found):
        g = parse_graph6(key.decode("ascii"))
        if is_line_graph(g) and lambda3_nonpositive(g) and independence_at_least(g, 3):
            out.append(key)
    return out


def oracle_grown_subset(max_n: int) -> list[bytes]:
    """The part of the oracle output that growth is expected to reach."""
    from .graph6 import parse_graph6

    return [key for key in oracle_enumerate(max_n) if growable(parse_graph6(key.decode("ascii")))]


# --- terminal catalog and census -------------------------------------------


@dataclass
class CatalogEntry:
    graph6: str
    family: str | None
    params: dict
    isolated: int
    # for unmatched entries: smallest family member containing the core
    host: dict | None = None

    @property
    def matched(self) -> bool:
        return self.family is not None


def _family_index(max_vertices: int) -> dict[bytes, tuple[str, dict]]:
    index: dict[bytes, tuple[str, dict]] = {}
    for n in range(0, max_vertices - 5):
        index.setdefault(canonical_form(gen_b3(n)), ("B3", {"n": n}))
    for size in range(1, max_vertices + 1):
        for m, n, p in mnp_triples(size):
            index.setdefault(canonical_form(gen_b4(m, n, p)), ("B4", {"m": m, "n": n, "p": p}))
    index.setdefault(canonical_form(gen_b1()), ("B1", {}))
    index.setdefault(canonical_form(gen_b2()), ("B2", {}))
    return index


def classify_terminal_catalog(report: EnumerationReport, n: int | None = None) -> list[CatalogEntry]:
    """Split each catalog graph into its non-trivial part plus isolated vertices
    and name the non-trivial part by isomorphism with a B-family member."""
    from .graph6 import write_graph6

    n = max(report.levels) if n is None else n
    index = _family_index(n)
    out = []
    for key, g in report.catalog(n):
        iso = isolated_vertices(g)
        core = induced_subgraph(g, [v for v in range(g.n) if g.adj[v]])
        hit = index.get(canonical_form(core)) if core.n and is_connected(core) else None
        family, params = hit if hit else (None, {})
        host = None
        if hit is None and core.n:
            found = member_theorem2(core)
            host = {"verdict": found.verdict, "family": found.family, "params": found.params}
        out.append(CatalogEntry(write_graph6(g), family, params, len(iso), host))
    return out


def connected_nonbipartite_survivors(report: EnumerationReport) -> list[bytes]:
    """Connected grown graphs (any level) whose complement is not bipartite."""
    out = []
    for key, st in report.all_graphs():
        g = st.graph
        if is_connected(g) and not is_bipartite(complement(g))[0]:
            out.append(key)
    return sorted(set(out))


def count_connected_nonbipartite_survivors(report: EnumerationReport | None = None):
    report = report if report is not None else enumerate_to(12)
    catalog = connected_nonbipartite_survivors(report)
    return len(catalog), catalog


def complement_subgraph_census():
    """Non-isomorphic non-bipartite induced subgraphs of the complements of B1 and B2.

    Returns (non-bipartite count, count with disconnected complement, forms of
    the complements of the rest, which are connected).
    """
    seen: dict[bytes, Graph] = {}
    for host in (complement(gen_b1()), complement(gen_b2())):
        for r in range(host.n + 1):
            for vs in itertools.combinations(range(host.n), r):
                sub = induced_subgraph(host, vs)
                if is_bipartite(sub)[0]:
                    continue
                seen.setdefault(canonical_form(sub), sub)
    disconnected = 0
    connected_complements = []
    for key, sub in seen.items():
        co = complement(sub)
        if len(connected_components(co)) != 1:
            disconnected += 1
        else:
            connected_complements.append(canonical_form(co))
    return len(seen), disconnected, sorted(connected_complements)
