import math
import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import random_graph
from lambda3.families import gen_b3, gen_b4
from lambda3.graph import complete, complete_bipartite, cycle, empty, make_graph, path
from lambda3.linegraphs import line_graph
from lambda3.spectra import (char_poly, count_roots_greater, eigenvalues_float, inertia, jacobi_eigh,
                             lambda2_at_most_one, lambda3_nonpositive, min_eigenvalue_at_least,
                             spectrum_symmetric_about_zero, symmetric_eigenvalues)


def sympy_charpoly(g):
    x = sympy.Symbol("x")
    m = sympy.Matrix(g.adjacency_matrix().tolist())
    return [int(c) for c in reversed(m.charpoly(x).all_coeffs())]


def test_char_poly_examples():
    assert char_poly(complete(3)).coeffs == (-2, -3, 0, 1)
    assert char_poly(empty(0)).coeffs == (1,)
    assert char_poly(empty(3)).coeffs == (0, 0, 0, 1)
    assert char_poly(path(2)).coeffs == (-1, 0, 1)


def test_char_poly_against_sympy():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 9))
        assert list(char_poly(g).coeffs) == sympy_charpoly(g)


def test_char_poly_large_complete_graph():
    # (x - (n-1)) (x + 1)^(n-1), exercising the arbitrary precision path
    n = 24
    x = sympy.Symbol("x")
    expected = sympy.Poly((x - (n - 1)) * (x + 1) ** (n - 1), x)
    assert list(char_poly(complete(n)).coeffs) == [int(c) for c in reversed(expected.all_coeffs())]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_char_poly_invariants(n, seed):
    g = random_graph(random.Random(seed), n)
    cp = char_poly(g)
    assert cp.degree == n and cp.coeffs[-1] == 1
    if n >= 2:
        assert cp.coeffs[n - 1] == 0
        assert cp.coeffs[n - 2] == -g.num_edges()


@pytest.mark.parametrize("g,expected", [
    (cycle(5), (3, 0, 2)),
    (line_graph(complete(4)), (1, 3, 2)),
    (complete(4), (1, 0, 3)),
    (empty(4), (0, 4, 0)),
    (complete_bipartite(2, 3), (1, 3, 1)),
])
def test_inertia_examples(g, expected):
    ine = inertia(g)
    assert (ine.n_pos, ine.n_zero, ine.n_neg) == expected


def test_threshold_decisions():
    assert not lambda3_nonpositive(cycle(5))
    assert lambda3_nonpositive(line_graph(complete(4)))  # lambda_3 = 0 exactly
    assert lambda3_nonpositive(gen_b3(3)) and lambda3_nonpositive(gen_b4(6, 5, 2))
    assert count_roots_greater(char_poly(path(6)), 1) == 2
    assert lambda2_at_most_one(complete(6))
    assert not lambda2_at_most_one(path(6))
    assert min_eigenvalue_at_least(line_graph(complete(5)), -2)  # attains -2
    assert not min_eigenvalue_at_least(complete_bipartite(3, 3), -2)  # -3
    assert spectrum_symmetric_about_zero(cycle(6))
    assert not spectrum_symmetric_about_zero(cycle(5))


def test_exact_inertia_matches_numpy():
    rng = random.Random(17)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 12))
        vals = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))
        ine = inertia(g)
        assert ine.n_pos == int(np.sum(vals > 1e-9))
        assert ine.n_neg == int(np.sum(vals < -1e-9))
        assert ine.n_zero == char_poly(g).zero_multiplicity()


def test_jacobi_matches_numpy_and_closed_forms():
    rng = np.random.default_rng(2)
    for n in (1, 2, 5, 9):
        a = rng.normal(size=(n, n))
        a = a + a.T
        vals, vecs = jacobi_eigh(a)
        assert np.allclose(np.sort(vals), np.linalg.eigvalsh(a), atol=1e-10)
        assert np.allclose(a @ vecs, vecs * vals, atol=1e-9)
    n = 9
    expected = sorted((2 * math.cos(2 * math.pi * k / n) for k in range(n)), reverse=True)
    assert np.allclose(symmetric_eigenvalues(cycle(n).adjacency_matrix()), expected, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_spectrum_invariants(n, seed):
    g = random_graph(random.Random(seed), n)
    spec = eigenvalues_float(g)
    vals = np.array(spec.values)
    assert list(vals) == sorted(vals, reverse=True)
    assert abs(vals.sum()) <= 1e-9 * n
    assert abs((vals ** 2).sum() - 2 * g.num_edges()) <= 1e-9 * n * n
    assert spec.residual_bound < 1e-8


def test_line_graph_min_eigenvalue_property():
    rng = random.Random(4)
    for _ in range(100):
        h = random_graph(rng, rng.randint(2, 8))
        if h.num_edges():
            assert min_eigenvalue_at_least(line_graph(h), -2)
