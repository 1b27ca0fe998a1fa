"""Immutable 2-graph and 3-uniform hypergraph types with basic operations.

Vertices are 1-based contiguous integers.  Edge sets are kept in canonical
sorted order so that equality, hashing and serialized output are
deterministic.  Operations that drop vertices relabel the survivors
order-preservingly and return the old->new label map alongside the result.
All types are immutable after construction; adjacency and incidence are
derived caches, the edge set is the single source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

Pair = tuple[int, int]
Triple = tuple[int, int, int]


@dataclass(frozen=True)
class Graph2:
    """A simple graph on vertices 1..n with a canonical sorted edge tuple."""

    n: int
    edges: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        seen: set[Pair] = set()
        for e in self.edges:
            if len(e) != 2 or e[0] >= e[1]:
                raise ValueError(f"edge {e} is not an increasing pair")
            if not (1 <= e[0] and e[1] <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if self.edges != tuple(sorted(self.edges)):
            raise ValueError("edges must be sorted lexicographically")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph2":
        canon = sorted({(min(e), max(e)) for e in (tuple(e) for e in edges)})
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitmasks; bit (u-1) of adjacency[v-1] is set iff uv is an edge."""
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return tuple(adj)

    def degree_of(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self.adjacency[v - 1]).count("1")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        mask = self.adjacency[v - 1]
        return tuple(u + 1 for u in range(self.n) if mask >> u & 1)

    def has_edge(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return (a, b) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")


@dataclass(frozen=True)
class Hypergraph3:
    """A 3-uniform hypergraph on vertices 1..n with sorted triple edges."""

    n: int
    edges: tuple[Triple, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        seen: set[Triple] = set()
        for e in self.edges:
            if len(e) != 3 or not (e[0] < e[1] < e[2]):
                raise ValueError(f"edge {e} is not an increasing triple")
            if not (1 <= e[0] and e[2] <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if self.edges != tuple(sorted(self.edges)):
            raise ValueError("edges must be sorted lexicographically")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph3":
        canon = sorted({tuple(sorted(e)) for e in edges})
        return cls(n, tuple(canon))  # type: ignore[arg-type]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuples of indices into `edges`."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v - 1].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _edge_set(self) -> frozenset[Triple]:
        return frozenset(self.edges)

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self._edge_set

    def degree_of(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.incidence[v - 1])

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")


def _removal_map(n: int, removed: frozenset[int]) -> dict[int, int]:
    """Order-preserving old->new label map after removing `removed` from 1..n."""
    out: dict[int, int] = {}
    nxt = 1
    for v in range(1, n + 1):
        if v not in removed:
            out[v] = nxt
            nxt += 1
    return out


def _check_subset(n: int, s: Iterable[int]) -> frozenset[int]:
    fs = frozenset(s)
    for v in fs:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
    return fs


def link_graph(H: Hypergraph3, v: int) -> tuple[Graph2, dict[int, int]]:
    """Link graph of v: the pairs completing an edge of H with v.

    The result lives on vertices 1..n-1 via the order-preserving relabelling
    of V(H)\\{v}; the old->new map is returned alongside.
    """
    H._check_vertex(v)
    # removing the single vertex v shifts every label above v down by one
    edges = []
    for i in H.incidence[v - 1]:
        a, b, c = H.edges[i]
        if a == v:
            p, q = b, c
        elif b == v:
            p, q = a, c
        else:
            p, q = a, b
        edges.append((p if p < v else p - 1, q if q < v else q - 1))
    lab = {x: (x if x < v else x - 1) for x in range(1, H.n + 1) if x != v}
    return Graph2(H.n - 1, tuple(sorted(edges))), lab


def degree(H: Hypergraph3, T: Iterable[int]) -> int:
    """Number of edges of H containing T, for |T| <= 3 (|T|=0 gives e(H))."""
    fs = _check_subset(H.n, T)
    if len(fs) > 3:
        raise ValueError(f"degree is defined for |T| <= 3, got |T|={len(fs)}")
    if not fs:
        return H.m
    v = min(fs)
    rest = fs - {v}
    return sum(1 for i in H.incidence[v - 1] if rest <= set(H.edges[i]))


def min_l_degree(H: Hypergraph3, l: int) -> int:
    """Minimum of d_H(T) over all l-subsets T, for l in {0, 1, 2}."""
    if not 0 <= l <= 2:
        raise ValueError(f"l must be 0, 1 or 2, got {l}")
    if H.n < l:
        raise ValueError(f"need n >= l, got n={H.n}, l={l}")
    if l == 0:
        return H.m
    if l == 1:
        return min(len(inc) for inc in H.incidence)
    # l == 2: count pair degrees in one pass rather than calling degree() per pair
    counts = {p: 0 for p in combinations(range(1, H.n + 1), 2)}
    for a, b, c in H.edges:
        counts[(a, b)] += 1
        counts[(a, c)] += 1
        counts[(b, c)] += 1
    return min(counts.values())


def max_codegree(H: Hypergraph3) -> int:
    """Maximum of d_H(D) over all pairs D of vertices."""
    if H.n < 2:
        raise ValueError(f"need n >= 2, got n={H.n}")
    best = 0
    counts: dict[Pair, int] = {}
    for a, b, c in H.edges:
        for p in ((a, b), (a, c), (b, c)):
            counts[p] = counts.get(p, 0) + 1
            best = max(best, counts[p])
    return best


def complement(G: Graph2) -> Graph2:
    present = G._edge_set
    edges = [p for p in combinations(range(1, G.n + 1), 2) if p not in present]
    return Graph2(G.n, tuple(edges))


def induced(H: Hypergraph3, S: Iterable[int]) -> tuple[Hypergraph3, dict[int, int]]:
    """Subhypergraph induced by S, relabelled to 1..|S| order-preservingly."""
    fs = _check_subset(H.n, S)
    removed = frozenset(range(1, H.n + 1)) - fs
    lab = _removal_map(H.n, removed)
    edges = [tuple(lab[x] for x in e) for e in H.edges if all(x in fs for x in e)]
    return Hypergraph3.from_edges(len(fs), edges), lab


def remove_vertices(H: Hypergraph3, R: Iterable[int]) -> tuple[Hypergraph3, dict[int, int]]:
    """H minus the vertices of R, relabelled order-preservingly."""
    fs = _check_subset(H.n, R)
    keep = frozenset(range(1, H.n + 1)) - fs
    return induced(H, keep)


def graph_remove_vertices(G: Graph2, R: Iterable[int]) -> tuple[Graph2, dict[int, int]]:
    """G minus the vertices of R, relabelled order-preservingly."""
    fs = _check_subset(G.n, R)
    lab = _removal_map(G.n, fs)
    edges = [(lab[a], lab[b]) for a, b in G.edges if a not in fs and b not in fs]
    return Graph2.from_edges(G.n - len(fs), edges), lab


def join(G1: Graph2, G2: Graph2) -> Graph2:
    """Join of two graphs: disjoint union plus all cross edges.

    G2's vertices are shifted up by G1.n.
    """
    edges: list[Pair] = list(G1.edges)
    edges.extend((a + G1.n, b + G1.n) for a, b in G2.edges)
    edges.extend((a, b + G1.n) for a in range(1, G1.n + 1) for b in range(1, G2.n + 1))
    return Graph2.from_edges(G1.n + G2.n, edges)
