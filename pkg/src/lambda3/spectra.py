"""Exact spectral decisions for adjacency matrices, plus a Jacobi eigensolver.

Sign and threshold questions (how many eigenvalues exceed 0, 1, ...) are
answered from the integer characteristic polynomial with Sturm sequences,
never from floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import poly
from .graph import Graph


class NumericError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CharPoly:
    """Coefficients c_0..c_n of det(xI - A), lowest degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def zero_multiplicity(self) -> int:
        k = 0
        while k < self.degree and self.coeffs[k] == 0:
            k += 1
        return k

    def __call__(self, x):
        return sum(c * x ** i for i, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class Inertia:
    n_pos: int
    n_zero: int
    n_neg: int


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    residual_bound: float


# int64 is safe for Faddeev-LeVerrier intermediates up to here; beyond, Python ints
_INT64_MAX_N = 16


def char_poly(g: Graph) -> CharPoly:
    """Exact characteristic polynomial by the Faddeev-LeVerrier recurrence.

    M_k = A M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(A M_k) / k; every M_k is an
    integer matrix, so the division by k is exact.
    """
    n = g.n
    if n == 0:
        return CharPoly((1,))
    a = g.adjacency_matrix()
    if n > _INT64_MAX_N:
        a = a.astype(object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    eye = np.eye(n, dtype=a.dtype)
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coeffs[n - k + 1] * eye
        tr = int(np.trace(a @ m))
        if tr % k:
            raise NumericError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -tr // k
    return CharPoly(tuple(int(c) for c in coeffs))


def count_roots_greater(p: CharPoly | list[int], a) -> int:
    """Real roots of p strictly greater than rational ``a``, with multiplicity."""
    coeffs = list(p.coeffs) if isinstance(p, CharPoly) else list(p)
    return poly.roots_above(poly.trim(coeffs), Fraction(a))


def inertia(g: Graph) -> Inertia:
    cp = char_poly(g)
    zero = cp.zero_multiplicity()
    pos = count_roots_greater(cp, 0)
    return Inertia(pos, zero, g.n - pos - zero)


def lambda3_nonpositive(g: Graph) -> bool:
    """True iff at most two eigenvalues are strictly positive."""
    return count_roots_greater(char_poly(g), 0) <= 2


def min_eigenvalue_at_least(g: Graph, bound) -> bool:
    if g.n == 0:
        return True
    reflected = poly.reflect(list(char_poly(g).coeffs))
    return count_roots_greater(reflected, -Fraction(bound)) == 0


def lambda2_at_most_one(g: Graph) -> bool:
    return count_roots_greater(char_poly(g), 1) <= 1


def spectrum_symmetric_about_zero(g: Graph) -> bool:
    cp = char_poly(g)
    n = cp.degree
    return all(c == 0 for i, c in enumerate(cp.coeffs) if (n - i) % 2)


def jacobi_eigh(a, tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi for a real symmetric matrix; returns (values, vectors)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp_, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp_ - s * cq
                a[:, q] = s * cp_ + c * cq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps")


def symmetric_eigenvalues(a) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, descending."""
    vals, _ = jacobi_eigh(a)
    return np.sort(vals)[::-1]


def eigenvalues_float(g: Graph) -> Spectrum:
    if g.n == 0:
        return Spectrum((), 0.0)
    a = g.adjacency_matrix().astype(float)
    vals, vecs = jacobi_eigh(a)
    residual = float(np.max(np.linalg.norm(a @ vecs - vecs * vals, axis=0)))
    return Spectrum(tuple(float(x) for x in np.sort(vals)[::-1]), residual)
