"""Shared independent oracles and instance generators for the test suite.

The oracles here deliberately re-derive quantities with methods different
from the library's (dense eigensolver vs power iteration, exhaustive
recursion vs branch-and-bound / blossom, rational-tableau simplex vs the
integer-pivoting one), so agreement between the two routes is meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from linkspec.graphs import Graph2, Hypergraph3


# ---------------------------------------------------------------------------
# Spectral oracle: dense symmetric eigensolver, independent of power iteration.


def eig_rho(G: Graph2) -> float:
    """Largest adjacency eigenvalue via numpy's dense symmetric eigensolver."""
    if G.n == 0:
        return 0.0
    A = np.zeros((G.n, G.n))
    for a, b in G.edges:
        A[a - 1, b - 1] = A[b - 1, a - 1] = 1.0
    return max(0.0, float(np.linalg.eigvalsh(A)[-1]))


# ---------------------------------------------------------------------------
# Matching oracles: plain exhaustive recursion over edge subsets.


def brute_nu_graph(G: Graph2) -> int:
    """Exact maximum matching of a 2-graph by exhaustive recursion."""
    edges = G.edges

    def rec(i: int, used: frozenset[int]) -> int:
        best = 0
        for j in range(i, len(edges)):
            e = edges[j]
            if used.isdisjoint(e):
                best = max(best, 1 + rec(j + 1, used | frozenset(e)))
        return best

    return rec(0, frozenset())


def brute_nu_3graph(H: Hypergraph3) -> int:
    """Exact maximum matching of a 3-graph by exhaustive recursion."""
    edges = H.edges

    def rec(i: int, used: frozenset[int]) -> int:
        best = 0
        for j in range(i, len(edges)):
            e = edges[j]
            if used.isdisjoint(e):
                best = max(best, 1 + rec(j + 1, used | frozenset(e)))
        return best

    return rec(0, frozenset())


# ---------------------------------------------------------------------------
# LP oracle: rational-tableau simplex with Fraction arithmetic throughout.
# Same pivot rules as the library solver but a completely separate
# implementation and number representation.

ZERO = Fraction(0)
ONE = Fraction(1)


def ref_simplex_max(c, rows, b):
    """Maximize c.x s.t. rows.x <= b, x >= 0 on a Fraction tableau."""
    m, nv = len(rows), len(c)
    tab = [
        list(rows[i]) + [ONE if j == i else ZERO for j in range(m)] + [b[i]]
        for i in range(m)
    ]
    obj = [-ci for ci in c] + [ZERO] * m + [ZERO]
    basis = list(range(nv, nv + m))
    rhs = nv + m
    while True:
        enter = next((j for j in range(nv + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                r = tab[i][rhs] / a
                if best is None or r < best or (r == best and basis[i] < basis[leave]):
                    best, leave = r, i
        if leave is None:
            raise ArithmeticError("unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        prow = tab[leave]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * p for x, p in zip(tab[i], prow)]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * p for x, p in zip(obj, prow)]
        basis[leave] = enter
    x = [ZERO] * nv
    for i, bv in enumerate(basis):
        if bv < nv:
            x[bv] = tab[i][rhs]
    return obj[rhs], x, obj[nv : nv + m]


def ref_nu_frac(H: Hypergraph3) -> Fraction:
    """nu*(H) via the reference simplex."""
    if H.m == 0:
        return ZERO
    touched = [v for v in range(1, H.n + 1) if H.incidence[v - 1]]
    rows = [[ONE if v in e else ZERO for e in H.edges] for v in touched]
    value, _, _ = ref_simplex_max([ONE] * H.m, rows, [ONE] * len(touched))
    return value


# ---------------------------------------------------------------------------
# Random instance helpers.


def rand_graph(n: int, p: float, rng: random.Random) -> Graph2:
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph2(n, tuple(edges))


def rand_3graph(n: int, p: float, rng: random.Random) -> Hypergraph3:
    edges = [e for e in combinations(range(1, n + 1), 3) if rng.random() < p]
    return Hypergraph3(n, tuple(edges))


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


@pytest.fixture(scope="session")
def fano() -> Hypergraph3:
    return Hypergraph3.from_edges(7, FANO_LINES)
