"""Executable checks for the spectral inequalities and identities used about
line graphs and their complements.

Every checker returns a CheckReport. Conditional statements record how many
instances actually met the hypothesis, so "not applicable" is never confused
with a pass.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import poly
from .canon import are_isomorphic, canonical_form, find_induced
from .families import gen_b2, gen_b3, gen_b4, gen_cs1, gen_cs2, gen_cs3, mnp_triples
from .graph import (Graph, GraphError, complement, cycle, delete_vertex, is_bipartite,
                    is_connected, make_graph, path)
from .linegraphs import is_line_graph, line_graph, root_graphs
from .spectra import (char_poly, count_roots_greater, inertia, lambda2_at_most_one,
                      lambda3_nonpositive, min_eigenvalue_at_least,
                      spectrum_symmetric_about_zero, symmetric_eigenvalues)

TOL = 1e-8
SIGN_DEADBAND = 1e-9


@dataclass
class CheckReport:
    name: str
    instances: int = 0
    applicable: int = 0
    failures: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "pass" if self.applicable else "not-applicable"

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, instance: str, relation: str, values) -> None:
        self.failures.append({"instance": instance, "relation": relation, "values": values})

    def absorb(self, other: "CheckReport") -> "CheckReport":
        self.instances += other.instances
        self.applicable += other.applicable
        self.failures.extend(other.failures)
        return self

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "instances": self.instances,
                "applicable": self.applicable, "failures": self.failures}


def _matrix(x) -> np.ndarray:
    if isinstance(x, Graph):
        return x.adjacency_matrix()
    a = np.asarray(x)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.array_equal(a, a.T):
        raise ValueError("expected a square symmetric matrix")
    return a


def _describe(x) -> str:
    if isinstance(x, Graph):
        from .graph6 import write_graph6
        return write_graph6(x)
    return repr(np.asarray(x).astype(int).tolist())


def check_courant_weyl(a, b, i: int, j: int, tol: float = TOL) -> CheckReport:
    """Weyl bounds for eigenvalues of A + B, indices 1-based and descending.

    i >= j: lam_i(A+B) <= lam_{i-j+1}(A) + lam_j(B)
    i <= j: lam_i(A+B) >= lam_{i-j+n}(A) + lam_j(B)
    """
    ma, mb = _matrix(a), _matrix(b)
    if ma.shape != mb.shape:
        raise ValueError(f"shape mismatch {ma.shape} vs {mb.shape}")
    n = ma.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must lie in 1..{n}; got i={i}, j={j}")
    la = symmetric_eigenvalues(ma)
    lb = symmetric_eigenvalues(mb)
    ls = symmetric_eigenvalues(ma + mb)
    rep = CheckReport("courant_weyl", instances=1, applicable=1)
    where = f"A={_describe(a)} B={_describe(b)} i={i} j={j}"
    if i >= j:
        lhs, rhs = ls[i - 1], la[i - j] + lb[j - 1]
        if lhs > rhs + tol:
            rep.fail(where, "lam_i(A+B) <= lam_{i-j+1}(A) + lam_j(B)", [float(lhs), float(rhs)])
    if i <= j:
        lhs, rhs = ls[i - 1], la[i - j + n - 1] + lb[j - 1]
        if lhs < rhs - tol:
            rep.fail(where, "lam_i(A+B) >= lam_{i-j+n}(A) + lam_j(B)", [float(lhs), float(rhs)])
    return rep


def check_interlacing(g: Graph, v: int, tol: float = TOL) -> CheckReport:
    if g.n < 2:
        raise GraphError("interlacing needs at least 2 vertices")
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    lam = symmetric_eigenvalues(g.adjacency_matrix())
    mu = symmetric_eigenvalues(delete_vertex(g, v).adjacency_matrix())
    rep = CheckReport("interlacing", instances=1, applicable=1)
    for k in range(g.n - 1):
        if not (lam[k] + tol >= mu[k] >= lam[k + 1] - tol):
            rep.fail(f"{_describe(g)} v={v} k={k + 1}", "lam_k >= mu_k >= lam_{k+1}",
                     [float(lam[k]), float(mu[k]), float(lam[k + 1])])
    return rep


def _roots_below(g: Graph, bound) -> int:
    # eigenvalues strictly below bound = roots of p(-x) strictly above -bound
    return count_roots_greater(poly.reflect(list(char_poly(g).coeffs)), -bound)


def check_prop8_chain(h: Graph) -> CheckReport:
    """If the complement G of L(h) is bipartite: G has a symmetric spectrum,
    lam_{n-1}(G) >= -1, and L(h) has at most two positive eigenvalues."""
    lg = line_graph(h)
    g = complement(lg)
    rep = CheckReport("bipartite_complement", instances=1)
    if not is_bipartite(g)[0]:
        return rep
    rep.applicable = 1
    n = lg.n
    where = f"h={_describe(h)}"
    if not spectrum_symmetric_about_zero(g):
        rep.fail(where, "spectrum of complement symmetric about 0", list(char_poly(g).coeffs))
    if n >= 2 and _roots_below(g, -1) > 1:
        rep.fail(where, "lam_{n-1}(complement) >= -1", _roots_below(g, -1))
    if not lambda3_nonpositive(lg):
        rep.fail(where, "lam_3(L(h)) <= 0", inertia(lg).n_pos)
    if n >= 3:
        # lam_2(K_n) >= lam_3(L) + lam_{n-1}(G), with A + B = J - I
        chain = check_courant_weyl(lg, g, 2, n - 1)
        for f in chain.failures:
            rep.fail(where, "0 >= lam_3(L) + lam_{n-1}(G) + 1", f["values"])
    return rep


def check_cvetkovic_lambda2(h: Graph) -> CheckReport:
    g = complement(line_graph(h))
    rep = CheckReport("lambda2", instances=1, applicable=1)
    if not lambda2_at_most_one(g):
        rep.fail(f"h={_describe(h)}", "lam_2(complement of L(h)) <= 1",
                 count_roots_greater(char_poly(g), 1))
    return rep


def check_min_eigenvalue(h: Graph) -> CheckReport:
    lg = line_graph(h)
    rep = CheckReport("min_eigenvalue", instances=1, applicable=1)
    if not min_eigenvalue_at_least(lg, -2):
        rep.fail(f"h={_describe(h)}", "lam_min(L(h)) >= -2", _roots_below(lg, -2))
    return rep


def verify_observation3(max_n: int = 8, max_mn: int = 13) -> CheckReport:
    rep = CheckReport("observation3")
    for n in range(max_n + 1):
        rep.instances += 1
        rep.applicable += 1
        if not are_isomorphic(complement(gen_cs2(n)), gen_b3(n)):
            rep.fail(f"n={n}", "complement(CS2(n)) ~ B3(n)", None)
    for size in range(1, max_mn + 1):
        for m, n, p in mnp_triples(size):
            rep.instances += 1
            rep.applicable += 1
            if not are_isomorphic(complement(gen_cs3(m, n, p)), gen_b4(m, n, p)):
                rep.fail(f"m={m} n={n} p={p}", "complement(CS3) ~ B4", None)
    rep.instances += 1
    rep.applicable += 1
    co1 = complement(gen_cs1())
    phi = find_induced(gen_b2(), co1)
    if phi is None or are_isomorphic(gen_b2(), co1):
        rep.fail("CS1", "complement(CS1) properly induced in B2", phi)
    return rep


def check_odd_cycle_facts(max_n: int = 13) -> CheckReport:
    rep = CheckReport("odd_cycles")

    def expect(cond: bool, where: str, relation: str, values=None):
        rep.instances += 1
        rep.applicable += 1
        if not cond:
            rep.fail(where, relation, values)

    p6 = path(6)
    expect(count_roots_greater(char_poly(p6), 1) >= 2, "P6", "lam_2(P6) > 1")
    for n in range(7, max_n + 1, 2):
        c = cycle(n)
        co = complement(c)
        where = f"C{n}"
        expect(find_induced(c, p6) is not None, where, "P6 induced in C_n")
        expect(count_roots_greater(char_poly(c), 1) >= 2, where, "lam_2(C_n) > 1")
        expect(not min_eigenvalue_at_least(co, -2), where, "lam_min(complement C_n) < -2")
        expect(not is_line_graph(co), where, "complement C_n not a line graph")
    c5 = cycle(5)
    expect(are_isomorphic(complement(c5), c5), "C5", "complement(C5) ~ C5")
    expect(not lambda3_nonpositive(c5), "C5", "lam_3(C5) > 0", inertia(c5).n_pos)
    return rep


def check_sign_agreement(g: Graph, deadband: float = SIGN_DEADBAND) -> CheckReport:
    """Float eigenvalue signs against exact inertia."""
    rep = CheckReport("sign_agreement", instances=1, applicable=1)
    exact = inertia(g)
    vals = symmetric_eigenvalues(g.adjacency_matrix()) if g.n else np.zeros(0)
    got = (int(np.sum(vals > deadband)), int(np.sum(np.abs(vals) <= deadband)),
           int(np.sum(vals < -deadband)))
    if got != (exact.n_pos, exact.n_zero, exact.n_neg):
        rep.fail(_describe(g), "float signs match exact inertia",
                 [list(got), [exact.n_pos, exact.n_zero, exact.n_neg]])
    return rep


def check_whitney(h: Graph) -> CheckReport:
    """A connected root on at least 5 vertices is recovered uniquely from L(h)."""
    rep = CheckReport("whitney", instances=1, applicable=1)
    roots = root_graphs(line_graph(h))
    if len(roots) != 1 or canonical_form(roots[0]) != canonical_form(h):
        rep.fail(_describe(h), "unique root isomorphic to h", len(roots))
    return rep


# seeded samplers

def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    q = rng.random() if density is None else density
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < q])


def random_roots(count: int = 500, seed: int = 0, max_edges: int = 12) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 9)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        k = rng.randint(1, min(max_edges, len(pairs)))
        out.append(make_graph(n, rng.sample(pairs, k)))
    return out


def random_connected_roots(count: int = 200, seed: int = 0, min_n: int = 5, max_n: int = 9) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        extra = rng.randint(0, n)
        for _ in range(extra):
            u, v = rng.sample(range(n), 2)
            edges.add((min(u, v), max(u, v)))
        h = make_graph(n, sorted(edges))
        if is_connected(h) and len(edges) <= 62:
            out.append(h)
    return out


def random_pm1_pair(rng: np.random.Generator, n: int = 8):
    mats = []
    for _ in range(2):
        a = rng.choice([-1, 1], size=(n, n))
        mats.append(np.triu(a) + np.triu(a, 1).T)
    return mats


def suite_roots(count: int = 500, seed: int = 0) -> list[CheckReport]:
    roots = random_roots(count, seed)
    reps = [CheckReport("bipartite_complement"), CheckReport("lambda2"), CheckReport("min_eigenvalue")]
    for h in roots:
        for rep, check in zip(reps, (check_prop8_chain, check_cvetkovic_lambda2, check_min_eigenvalue)):
            rep.absorb(check(h))
    return reps


def suite_interlacing(count: int = 500, seed: int = 0, max_n: int = 12) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("interlacing")
    for _ in range(count):
        g = random_graph(rng, rng.randint(2, max_n))
        rep.absorb(check_interlacing(g, rng.randrange(g.n)))
    return rep


def suite_courant_weyl(count: int = 200, seed: int = 0, n: int = 8) -> CheckReport:
    rng = np.random.default_rng(seed)
    rep = CheckReport("courant_weyl")
    for _ in range(count):
        a, b = random_pm1_pair(rng, n)
        i, j = (int(x) for x in rng.integers(1, n + 1, size=2))
        rep.absorb(check_courant_weyl(a, b, i, j))
        rep.absorb(check_courant_weyl(a, b, 2, 2))
    return rep


def suite_sign_agreement(count: int = 1000, seed: int = 0, max_n: int = 12) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("sign_agreement")
    for _ in range(count):
        rep.absorb(check_sign_agreement(random_graph(rng, rng.randint(1, max_n))))
    return rep


def suite_whitney(count: int = 200, seed: int = 0) -> CheckReport:
    rep = CheckReport("whitney")
    for h in random_connected_roots(count, seed):
        rep.absorb(check_whitney(h))
    return rep


CHECKERS = ("courant_weyl", "interlacing", "bipartite_complement", "lambda2", "min_eigenvalue",
            "observation3", "odd_cycles", "sign_agreement", "whitney")


def run_all(max_n: int = 8, max_mn: int = 13, odd_max: int = 13, seed: int = 0,
            only: list[str] | None = None) -> list[CheckReport]:
    wanted = set(CHECKERS if not only else only)
    unknown = wanted - set(CHECKERS)
    if unknown:
        raise ValueError(f"unknown checker(s): {', '.join(sorted(unknown))}")
    out: list[CheckReport] = []
    if wanted & {"bipartite_complement", "lambda2", "min_eigenvalue"}:
        out += [r for r in suite_roots(500, seed) if r.name in wanted]
    if "interlacing" in wanted:
        out.append(suite_interlacing(500, seed))
    if "courant_weyl" in wanted:
        out.append(suite_courant_weyl(200, seed))
    if "observation3" in wanted:
        out.append(verify_observation3(max_n, max_mn))
    if "odd_cycles" in wanted:
        out.append(check_odd_cycle_facts(odd_max))
    if "sign_agreement" in wanted:
        out.append(suite_sign_agreement(1000, seed))
    if "whitney" in wanted:
        out.append(suite_whitney(200, seed))
    return sorted(out, key=lambda r: CHECKERS.index(r.name))
