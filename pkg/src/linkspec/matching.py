"""Exact matching numbers for 2-graphs and 3-graphs.

2-graph maximum matching is delegated to networkx's blossom implementation
(exact on general graphs).  3-graph maximum matching is a deterministic
branch-and-bound over edge inclusion, pruned by the floor(remaining/3)
bound, a greedy hitting-set bound, and an optional exact-LP root bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

import networkx as nx

from .graphs import Graph2, Hypergraph3, Pair, Triple
from .lp import DEFAULT_TRIPLE_LIMIT, LpSizeError, fractional_matching

DEFAULT_BUDGET = 10**7


class NotAHittingSetError(ValueError):
    """C misses an edge; `witness` is one edge disjoint from C."""

    def __init__(self, witness: Triple):
        super().__init__(f"edge {witness} is disjoint from the candidate hitting set")
        self.witness = witness


class GreedyExtendError(RuntimeError):
    """No admissible edge through `vertex` during greedy extension."""

    def __init__(self, vertex: int):
        super().__init__(f"no available edge through vertex {vertex}")
        self.vertex = vertex


@dataclass(frozen=True)
class Matching3:
    """A set of pairwise vertex-disjoint triples."""

    edges: tuple[Triple, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for e in self.edges:
            if len(e) != 3 or not (e[0] < e[1] < e[2]):
                raise ValueError(f"{e} is not an increasing triple")
            if seen & set(e):
                raise ValueError(f"edge {e} overlaps an earlier edge")
            seen.update(e)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def validate_in(self, H: Hypergraph3) -> None:
        for e in self.edges:
            if not H.has_edge(e):
                raise ValueError(f"{e} is not an edge of the host hypergraph")


@dataclass(frozen=True)
class Matching3Result:
    size: int
    matching: Matching3
    exact: bool
    nodes: int


def max_matching_graph(G: Graph2) -> tuple[int, list[Pair]]:
    """Exact maximum matching of a general (non-bipartite) graph."""
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(G.edges)
    mate = nx.max_weight_matching(g, maxcardinality=True)
    pairs = sorted((min(a, b), max(a, b)) for a, b in mate)
    return len(pairs), pairs


def hitting_set_bound(H: Hypergraph3, C: Iterable[int]) -> int:
    """Certify nu(H) <= |C| by checking that C meets every edge."""
    fs = frozenset(C)
    for v in fs:
        if not 1 <= v <= H.n:
            raise ValueError(f"vertex {v} out of range 1..{H.n}")
    for e in H.edges:
        if not fs & set(e):
            raise NotAHittingSetError(e)
    return len(fs)


def _greedy_hitting_bound(edge_masks: list[int], n: int) -> int:
    """Size of a greedy hitting set of the given edges: an upper bound on nu."""
    remaining = list(edge_masks)
    size = 0
    while remaining:
        counts = [0] * n
        for m in remaining:
            mm = m
            while mm:
                low = mm & -mm
                counts[low.bit_length() - 1] += 1
                mm ^= low
        v = max(range(n), key=lambda i: counts[i])
        bit = 1 << v
        remaining = [m for m in remaining if not m & bit]
        size += 1
    return size


def _greedy_matching(edges: tuple[Triple, ...]) -> list[Triple]:
    used: set[int] = set()
    out = []
    for e in edges:
        if not used & set(e):
            out.append(e)
            used.update(e)
    return out


def max_matching_3graph(
    H: Hypergraph3,
    budget: int = DEFAULT_BUDGET,
    target: int | None = None,
    lp_root_bound: bool = True,
) -> Matching3Result:
    """Exact nu(H) with a witness, via deterministic branch-and-bound.

    Branching picks the lowest-labelled vertex that is still coverable and
    tries its incident edges in lexicographic order, then the leave-uncovered
    option, so witnesses are reproducible.  `budget` caps search-tree nodes;
    on exhaustion the best matching found is returned with exact=False.
    `target`, when set, stops the search once a matching of that size is
    found (the result is then a lower-bound witness, exact=False, unless the
    search had already completed).
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    edge_masks = [sum(1 << (v - 1) for v in e) for e in H.edges]
    full = (1 << H.n) - 1

    greedy = _greedy_matching(H.edges)
    best_size = len(greedy)
    best_edges = list(greedy)
    if target is not None and best_size >= target:
        return Matching3Result(best_size, Matching3(tuple(best_edges)), False, 0)

    root_ub = min(H.n // 3, _greedy_hitting_bound(edge_masks, H.n) if H.m else 0)
    if lp_root_bound and H.m and comb(H.n, 3) <= DEFAULT_TRIPLE_LIMIT:
        try:
            nu_frac = fractional_matching(H).value
            root_ub = min(root_ub, int(nu_frac))  # nu <= floor(nu*)
        except LpSizeError:  # pragma: no cover - guarded above
            pass
    if best_size >= root_ub:
        return Matching3Result(best_size, Matching3(tuple(best_edges)), True, 0)

    nodes = 0
    exhausted = False
    reached_target = False
    cur: list[Triple] = []

    def recurse(excluded: int) -> None:
        nonlocal nodes, best_size, best_edges, exhausted, reached_target
        if exhausted or reached_target or best_size >= root_ub:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        avail = [(m, i) for i, m in enumerate(edge_masks) if not m & excluded]
        if len(cur) > best_size:
            best_size = len(cur)
            best_edges = list(cur)
            if target is not None and best_size >= target:
                reached_target = True
                return
        if not avail:
            return
        free = bin(full & ~excluded).count("1")
        ub = free // 3
        if len(avail) <= 2000:
            ub = min(ub, _greedy_hitting_bound([m for m, _ in avail], H.n))
        if len(cur) + ub <= best_size:
            return
        # lowest-labelled vertex lying in some available edge
        union = 0
        for m, _ in avail:
            union |= m
        v_bit = union & -union
        for m, i in avail:
            if m & v_bit:
                cur.append(H.edges[i])
                recurse(excluded | m)
                cur.pop()
                if exhausted or reached_target:
                    return
        recurse(excluded | v_bit)  # leave v uncovered

    recurse(0)
    exact = not exhausted and not reached_target
    if reached_target and best_size >= root_ub:
        exact = True
    return Matching3Result(best_size, Matching3(tuple(best_edges)), exact, nodes)


def find_matching_of_size(
    H: Hypergraph3, k: int, budget: int = DEFAULT_BUDGET
) -> tuple[Matching3 | None, bool]:
    """Search for a matching of size >= k.

    Returns (witness or None, decided).  decided=False means the budget ran
    out before the question was settled either way.
    """
    # the LP root bound only helps prove optimality, not decide reachability
    res = max_matching_3graph(H, budget=budget, target=k, lp_root_bound=False)
    if res.size >= k:
        return res.matching, True
    return None, res.exact


def high_degree_set(H: Hypergraph3, s: int) -> frozenset[int]:
    """Vertices of degree greater than 3s(n-2)."""
    cut = 3 * s * (H.n - 2)
    return frozenset(v for v in range(1, H.n + 1) if H.degree_of(v) > cut)


def greedy_extend(
    H: Hypergraph3,
    M0: Matching3,
    R: Iterable[int],
    s: int,
) -> Matching3:
    """Extend a matching of H-R by one edge through each vertex of R.

    R is processed in decreasing degree order (ties by label); each step
    takes the lexicographically smallest edge through the current vertex
    that avoids every previously used vertex and every other vertex of R.
    Raises GreedyExtendError naming the first stuck vertex.
    """
    rset = frozenset(R)
    for v in rset:
        if not 1 <= v <= H.n:
            raise ValueError(f"vertex {v} out of range 1..{H.n}")
    if M0.vertices & rset:
        raise ValueError("M0 must be a matching of H - R")
    M0.validate_in(H)
    used = set(M0.vertices)
    order = sorted(rset, key=lambda v: (-H.degree_of(v), v))
    chosen = list(M0.edges)
    for v in order:
        forbidden = used | (rset - {v})
        pick = None
        for i in H.incidence[v - 1]:
            e = H.edges[i]
            if not forbidden & set(e):
                pick = e
                break
        if pick is None:
            raise GreedyExtendError(v)
        chosen.append(pick)
        used.update(pick)
    return Matching3(tuple(sorted(chosen)))
