"""Complete short-vector enumeration for positive-definite integer lattices.

The enumeration is exact end to end: the Gram matrix is size-reduced with a
rational-arithmetic LLL pass (the unimodular change of basis is undone on
output), bounds at every search level come from the rational LDL pivots via
integer square roots, and results are canonicalized (one representative per
+/- pair, first nonzero coordinate positive) and sorted so output order is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .errors import QflatError
from .exact import ldl_decompose
from .lattices import Lattice, as_lattice


@dataclass(frozen=True)
class LatticeVector:
    """An integer vector together with its value under the owning form."""

    coords: tuple[int, ...]
    norm: int

    def __post_init__(self):
        for c in self.coords:
            if c != 0:
                if c < 0:
                    raise QflatError("lattice vector is not sign-canonical")
                break


def _coord_range(c: Fraction, u: Fraction) -> range:
    """All integers t with (t + c)^2 <= u, via exact integer square roots."""
    if u < 0:
        return range(0)
    p, q = u.numerator, u.denominator
    a, b = c.numerator, c.denominator
    r = isqrt(p * q * b * b)
    d = q * b
    hi = (r - a * q) // d
    lo = -((r + a * q) // d)
    return range(lo, hi + 1)


def _gso(g: list[list[int]]):
    """Gram-Schmidt data (mu, squared star norms) from a Gram matrix."""
    n = len(g)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            mu[i][j] = (Fraction(g[i][j]) - sum(mu[i][k] * mu[j][k] * bstar[k] for k in range(j))) / bstar[j]
        bstar[i] = Fraction(g[i][i]) - sum(mu[i][k] * mu[i][k] * bstar[k] for k in range(i))
    return mu, bstar


def _lll_reduce_gram(gram) -> tuple[list[list[int]], list[list[int]]]:
    """LLL-reduce a PD Gram matrix in exact arithmetic.

    Returns (g, u) with g = u^T * gram * u and u unimodular; columns of u are
    the reduced basis written in the original coordinates.
    """
    n = gram.n
    g = [list(row) for row in gram.entries]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    delta = Fraction(3, 4)
    mu, bstar = _gso(g)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            m = (mu[k][j] + Fraction(1, 2)).__floor__()
            if m != 0:
                # column op: b_k <- b_k - m * b_j
                g[k][k] = g[k][k] - 2 * m * g[k][j] + m * m * g[j][j]
                for i in range(n):
                    if i != k:
                        g[i][k] -= m * g[i][j]
                        g[k][i] = g[i][k]
                for i in range(n):
                    u[i][k] -= m * u[i][j]
                mu, bstar = _gso(g)
        if bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]:
            k += 1
        else:
            for i in range(n):
                g[i][k], g[i][k - 1] = g[i][k - 1], g[i][k]
            g[k], g[k - 1] = g[k - 1], g[k]
            for i in range(n):
                u[i][k], u[i][k - 1] = u[i][k - 1], u[i][k]
            mu, bstar = _gso(g)
            k = max(k - 1, 1)
    return g, u


@lru_cache(maxsize=None)
def _prepared(lat: Lattice):
    """Reduced-basis LDL data for a lattice: (pivots, multipliers, basis map)."""
    g, u = _lll_reduce_gram(lat.gram)
    ldl = ldl_decompose(g)
    return ldl.d, ldl.lower, tuple(tuple(row) for row in u)


def _dfs_solutions(d, lower, k: int):
    """Yield every integer vector x (both signs) with sum d_i*(x_i + c_i)^2 = k.

    Depth-first over coordinates with the last (LDL) coordinate outermost;
    candidate values ascend within each level, so traversal is deterministic.
    """
    n = len(d)
    coords = [0] * n
    centers = [Fraction(0)] * n
    out = []

    def rec(i: int, remaining: Fraction):
        ci = centers[i]
        if i == 0:
            for t in _coord_range(ci, remaining / d[0]):
                if d[0] * (t + ci) * (t + ci) == remaining:
                    coords[0] = t
                    out.append(tuple(coords))
            return
        for t in _coord_range(ci, remaining / d[i]):
            coords[i] = t
            if t != 0:
                for j in range(i):
                    centers[j] += lower[i][j] * t
            rec(i - 1, remaining - d[i] * (t + ci) * (t + ci))
            if t != 0:
                for j in range(i):
                    centers[j] -= lower[i][j] * t
        coords[i] = 0

    rec(n - 1, Fraction(k))
    return out


def _dfs_exists(d, lower, k: int) -> bool:
    """Early-exit variant of _dfs_solutions: is any vector of norm k present?"""
    n = len(d)
    centers = [Fraction(0)] * n

    def rec(i: int, remaining: Fraction) -> bool:
        ci = centers[i]
        if i == 0:
            return any(
                d[0] * (t + ci) * (t + ci) == remaining for t in _coord_range(ci, remaining / d[0])
            )
        for t in _coord_range(ci, remaining / d[i]):
            if t != 0:
                for j in range(i):
                    centers[j] += lower[i][j] * t
            hit = rec(i - 1, remaining - d[i] * (t + ci) * (t + ci))
            if t != 0:
                for j in range(i):
                    centers[j] -= lower[i][j] * t
            if hit:
                return True
        return False

    return rec(n - 1, Fraction(k))


def _canonical(x: tuple[int, ...]) -> tuple[int, ...]:
    for c in x:
        if c != 0:
            return x if c > 0 else tuple(-v for v in x)
    return x


@lru_cache(maxsize=None)
def _vectors_of_norm(lat: Lattice, k: int) -> tuple[LatticeVector, ...]:
    d, lower, u = _prepared(lat)
    n = lat.rank
    seen = set()
    for x in _dfs_solutions(d, lower, k):
        orig = tuple(sum(u[r][c] * x[c] for c in range(n)) for r in range(n))
        if any(orig):
            seen.add(_canonical(orig))
    return tuple(LatticeVector(coords=c, norm=k) for c in sorted(seen))


def vectors_of_norm(lat, k: int) -> tuple[LatticeVector, ...]:
    """All x with x^T G x = k, one representative per +/- pair, lex-sorted.

    k = 0 yields the empty tuple: a positive-definite form has no nonzero
    null vectors and the zero vector is excluded by convention.
    """
    if k < 0:
        raise ValueError(f"norm must be non-negative, got {k}")
    if k == 0:
        return ()
    return _vectors_of_norm(as_lattice(lat), k)


def has_vector_of_norm(lat, k: int) -> bool:
    """Whether the form attains the value k, without enumerating all of them."""
    if k < 0:
        raise ValueError(f"norm must be non-negative, got {k}")
    if k == 0:
        return False
    lat = as_lattice(lat)
    d, lower, _ = _prepared(lat)
    return _dfs_exists(d, lower, k)


def minimum(lat) -> int:
    """Smallest nonzero value of the form; at most the least diagonal entry."""
    lat = as_lattice(lat)
    bound = min(lat.gram[i][i] for i in range(lat.rank))
    for k in range(1, bound + 1):
        if has_vector_of_norm(lat, k):
            return k
    return bound


def count_signed_representations(lat, k: int) -> int:
    """Number of integer vectors of norm k counting both signs."""
    if k < 1:
        raise ValueError(f"norm must be positive, got {k}")
    return 2 * len(vectors_of_norm(lat, k))
