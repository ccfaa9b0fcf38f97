"""The named graphs CS1-CS3 and B1-B4, and induced-subgraph membership tests.

Vertex layouts (fixed, so embeddings are reproducible):

* CS1: centres 0 and 3, leaves 1, 2 on 0 and 4, 5 on 3.
* CS2(n): x_i = i and d_i = 3 + i for i < 3, then t_1..t_n from 6.
* CS3(m, n, p): a_1..a_p, b_1..b_{m-p-1}, c_1..c_p, e_1..e_{n-p-1}, then the
  edgeless vertex u last.
* B3(n): a, b, d = 0, 1, 2; g, h, i = 3, 4, 5; the rest of the clique from 6.
* B4(m, n, p): shared vertex 0, the K_m side 1..m-1, the K_n side m..m+n-2;
  the first p vertices on each side are matched in order.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .canon import find_induced
from .graph import MAX_VERTICES, Graph, GraphError, is_bipartite, make_graph

FAMILIES = ("CS1", "CS2", "CS3", "B1", "B2", "B3", "B4")

SEARCH_LIMIT = 20


def _check_mnp(m: int, n: int, p: int) -> None:
    if not (0 <= p < n <= m and n >= 1):
        raise GraphError(f"requires p < n <= m with p >= 0 and m, n >= 1; got m={m}, n={n}, p={p}")
    if m + n - 1 > MAX_VERTICES:
        raise GraphError(f"m + n - 1 = {m + n - 1} exceeds {MAX_VERTICES} vertices")


def _check_n(n: int) -> None:
    if n < 0:
        raise GraphError(f"requires n >= 0; got n={n}")
    if n + 6 > MAX_VERTICES:
        raise GraphError(f"n + 6 = {n + 6} exceeds {MAX_VERTICES} vertices")


def gen_cs1() -> Graph:
    return make_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])


def gen_cs2(n: int) -> Graph:
    _check_n(n)
    edges = [(i, 3 + i) for i in range(3)]
    edges += [(i, 6 + j) for i in range(3) for j in range(n)]
    return make_graph(n + 6, edges)


def gen_cs3(m: int, n: int, p: int) -> Graph:
    _check_mnp(m, n, p)
    t1 = list(range(p))
    t2 = list(range(p, m - 1))
    d1 = list(range(m - 1, m - 1 + p))
    d2 = list(range(m - 1 + p, m + n - 2))
    bottom = d1 + d2
    edges = [(a, c) for i, a in enumerate(t1) for c in bottom if c != d1[i]]
    edges += [(b, c) for b in t2 for c in bottom]
    return make_graph(m + n - 1, edges)


def gen_b1() -> Graph:
    a, b, c, d, e, f, g = range(7)
    return make_graph(7, [(a, b), (a, c), (a, d), (a, e), (b, c), (b, e), (b, f),
                          (c, d), (c, g), (d, e), (d, g), (e, f)])


def gen_b2() -> Graph:
    a, b, c, d, e, f, g, h, i = range(9)
    k5 = [(x, y) for x in range(5) for y in range(x + 1, 5)]
    return make_graph(9, k5 + [(a, f), (e, f), (g, h), (g, i), (h, i),
                               (b, g), (c, g), (b, h), (d, h), (c, i), (d, i)])


def gen_b3(n: int) -> Graph:
    _check_n(n)
    clique = [0, 1, 2] + list(range(6, n + 6))
    edges = [(x, y) for k, x in enumerate(clique) for y in clique[k + 1:]]
    a, b, d, g, h, i = range(6)
    edges += [(g, h), (g, i), (h, i), (g, a), (g, b), (h, b), (h, d), (i, a), (i, d)]
    return make_graph(n + 6, edges)


def gen_b4(m: int, n: int, p: int) -> Graph:
    _check_mnp(m, n, p)
    left = [0] + list(range(1, m))
    right = [0] + list(range(m, m + n - 1))
    edges = {(x, y) for side in (left, right) for k, x in enumerate(side) for y in side[k + 1:]}
    edges |= {(1 + i, m + i) for i in range(p)}
    return make_graph(m + n - 1, sorted(edges))


def generate(family: str, m: int | None = None, n: int | None = None, p: int | None = None) -> Graph:
    family = family.upper()
    if family in ("CS1", "B1", "B2"):
        return {"CS1": gen_cs1, "B1": gen_b1, "B2": gen_b2}[family]()
    if family in ("CS2", "B3"):
        if n is None:
            raise GraphError(f"{family} requires -n")
        return (gen_cs2 if family == "CS2" else gen_b3)(n)
    if family in ("CS3", "B4"):
        if None in (m, n, p):
            raise GraphError(f"{family} requires -m, -n and -p")
        return (gen_cs3 if family == "CS3" else gen_b4)(m, n, p)
    raise GraphError(f"unknown family {family!r}")


def mnp_triples(size: int):
    """Valid (m, n, p) with m + n - 1 == size, in lexicographic order."""
    for m in range(1, size + 1):
        n = size + 1 - m
        if 1 <= n <= m:
            for p in range(n):
                yield m, n, p


@dataclass
class Classification:
    verdict: str  # "yes", "no" or "undecided"
    family: str | None = None
    params: dict = field(default_factory=dict)
    embedding: list[int] | None = None

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "family": self.family,
                "params": self.params, "embedding": self.embedding}


def _smallest(g: Graph, gen, family: str, params_for, sizes) -> Classification | None:
    for size in sizes:
        for params in params_for(size):
            phi = find_induced(gen(*params), g)
            if phi is not None:
                names = ("m", "n", "p") if len(params) == 3 else ("n",)
                return Classification("yes", family, dict(zip(names, params)), phi)
    return None


def _classify(g: Graph, fixed, param_family, triple_family) -> Classification:
    """Shared search for both theorems.

    ``fixed`` lists (name, generator) hosts; ``param_family`` is the one-parameter
    family (name, gen) and ``triple_family`` the (m, n, p) family.

    The admissible hosts are those with m + n - 1 <= 2v + 2 (v = g.n). Two facts
    let the decision look at a single layer of hosts:

    * B4(m, n, p) is induced in B4(m + 1, n, p), so embedding anywhere in range
      implies embedding in the layer m + n - 1 = 2v + 2, and conversely.
    * A v-vertex induced subgraph of B4(m, n, p) keeps a vertices on the K_m
      side and b on the K_n side; deleting the unused vertices (a matched
      partner that is dropped turns its mate unmatched) leaves it inside
      B4(a + 1, b + 1, p') up to swapping sides, so inside the layer v + 1.

    Both statements hold verbatim for CS3 (complement everything). The layer
    v + 1 is therefore searched; tests cross-check it against 2v + 2.
    A smallest witness is then located by scanning upward.
    """
    v = g.n
    if v > SEARCH_LIMIT:
        return Classification("undecided")
    for name, gen in fixed:
        phi = find_induced(gen(), g)
        if phi is not None:
            return Classification("yes", name, {}, phi)
    pname, pgen = param_family
    tname, tgen = triple_family
    top = max(v + 1, 1)
    if find_induced(pgen(v), g) is not None:
        hit = _smallest(g, pgen, pname, lambda k: [(k,)], range(0, v + 1))
        if hit:
            return hit
    if any(find_induced(tgen(*t), g) is not None for t in mnp_triples(top)):
        hit = _smallest(g, tgen, tname, mnp_triples, range(max(v, 1), top + 1))
        if hit:
            return hit
    return Classification("no")


def member_theorem1(g: Graph) -> Classification:
    """Is g an induced subgraph of CS1, some CS2(n) or some CS3(m, n, p)?"""
    if g.n <= SEARCH_LIMIT and not is_bipartite(g)[0]:
        return Classification("no")
    return _classify(g, [("CS1", gen_cs1)], ("CS2", gen_cs2), ("CS3", gen_cs3))


def member_theorem2(g: Graph) -> Classification:
    """Is g an induced subgraph of B1, B2, some B3(n) or some B4(m, n, p)?"""
    return _classify(g, [("B1", gen_b1), ("B2", gen_b2)], ("B3", gen_b3), ("B4", gen_b4))
