"""Canonical labeling, isomorphism and induced-subgraph search.

Canonical forms come from colour refinement plus individualization, taking
the smallest relabeled upper-triangle bit string over the search leaves.
Automorphisms (twin transpositions up front, then any found at the leaves)
prune children lying in an already explored orbit.
"""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, _from_rows, iter_bits
from .graph6 import write_graph6

CanonicalForm = bytes


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def _code(adj: Sequence[int], lab: list[int]) -> int:
    # relabeled upper triangle in graph6 bit order, most significant first
    code = 0
    for j in range(1, len(lab)):
        row = adj[lab[j]]
        for i in range(j):
            code = code << 1 | (row >> lab[i] & 1)
    return code


def _twin_generators(adj: Sequence[int], color: Sequence[int]) -> list[list[int]]:
    n = len(adj)
    gens = []
    for closed in (False, True):
        classes: dict[tuple[int, int], list[int]] = {}
        for v in range(n):
            key = adj[v] | (1 << v) if closed else adj[v]
            classes.setdefault((color[v], key), []).append(v)
        for members in classes.values():
            for a, b in zip(members, members[1:]):
                perm = list(range(n))
                perm[a], perm[b] = b, a
                gens.append(perm)
    return gens


def _orbit_roots(n: int, gens: list[list[int]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Return ``lab`` with ``lab[i]`` the vertex placed at canonical position ``i``.

    ``colors`` is an optional vertex colouring that isomorphisms must preserve;
    colour classes appear in increasing colour order in the canonical labeling.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    color = list(colors) if colors is not None else [0] * n
    cells = [[v for v in range(n) if color[v] == c] for c in sorted(set(color))]
    gens = _twin_generators(adj, color)
    state = {"first": None, "first_code": None, "best": None, "best_code": None}

    def record_aut(lab_a, lab_b):
        perm = [0] * n
        for a, b in zip(lab_a, lab_b):
            perm[a] = b
        gens.append(perm)

    def search(cells, prefix):
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            lab = [c[0] for c in cells]
            code = _code(adj, lab)
            if state["first"] is None:
                state.update(first=lab, first_code=code, best=lab, best_code=code)
                return
            if code == state["first_code"]:
                record_aut(state["first"], lab)
            elif code == state["best_code"]:
                record_aut(state["best"], lab)
            elif code < state["best_code"]:
                state.update(best=lab, best_code=code)
            return
        explored = []
        for v in cells[target]:
            if explored:
                roots = _orbit_roots(n, gens, prefix)
                if any(roots[v] == roots[u] for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], prefix + [v])

    search(cells, [])
    return state["best"]


def canonical_graph(g: Graph, colors: Sequence[int] | None = None) -> Graph:
    lab = canonical_labeling(g, colors)
    pos = {v: i for i, v in enumerate(lab)}
    rows = [0] * g.n
    for i, v in enumerate(lab):
        for u in iter_bits(g.adj[v]):
            rows[i] |= 1 << pos[u]
    return _from_rows(g.n, rows)


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Isomorphism-invariant byte key: equal keys iff isomorphic graphs."""
    key = write_graph6(canonical_graph(g, colors)).encode("ascii")
    if colors is not None:
        sizes = [sum(1 for c in colors if c == k) for k in sorted(set(colors))]
        key += b"|" + ",".join(map(str, sizes)).encode("ascii")
    return key


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges() != b.num_edges():
        return False
    if sorted(map(int.bit_count, a.adj)) != sorted(map(int.bit_count, b.adj)):
        return False
    return canonical_form(a) == canonical_form(b)


def find_induced(host: Graph, pattern: Graph) -> list[int] | None:
    """Embedding ``phi`` (pattern vertex ``i`` -> host vertex ``phi[i]``) or None."""
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return []
    # connected-first order: each vertex after the first prefers a mapped neighbour
    order = []
    remaining = set(range(k))
    while remaining:
        placed = sum(1 << v for v in order)
        best = max(remaining, key=lambda v: ((pattern.adj[v] & placed).bit_count(), pattern.degree(v), -v))
        order.append(best)
        remaining.remove(best)
    hdeg = [host.degree(v) for v in range(host.n)]
    pdeg = [pattern.degree(v) for v in range(k)]
    # swapping two unused twins fixes the partial map, so only the lowest unused twin is tried
    lower_twins = [0] * host.n
    for a in range(host.n):
        for b in range(a):
            if host.adj[a] & ~(1 << b) == host.adj[b] & ~(1 << a):
                lower_twins[a] |= 1 << b
    full = (1 << host.n) - 1
    image = [0] * k

    def extend(depth: int, used: int) -> bool:
        if depth == k:
            return True
        p = order[depth]
        cand = full & ~used
        for q in order[:depth]:
            h = image[q]
            if pattern.adj[p] >> q & 1:
                cand &= host.adj[h]
            else:
                cand &= ~host.adj[h]
        for h in iter_bits(cand):
            if hdeg[h] < pdeg[p] or lower_twins[h] & ~used:
                continue
            image[p] = h
            if extend(depth + 1, used | (1 << h)):
                return True
        return False

    return list(image) if extend(0, 0) else None


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None
