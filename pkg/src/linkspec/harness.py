"""Theorem/conjecture condition checking and counterexample search.

Condition checks compare the minimum link spectral radius against the
matching threshold with a comparison slack: values within the slack of the
threshold are classified indeterminate, never silently put on either side,
because the hypotheses are strict inequalities and the extremal families
sit exactly on the boundary.

Verdict semantics: violations of proven statements are tagged
``bug_suspect`` (an implementation bug, by definition), violations of the
conjecture are tagged ``counterexample`` (a reportable finding).
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .constructions import (
    MAX_ENUMERABLE_TRIPLES,
    hypergraph_from_bitmask,
    lex_triples,
    random_3graph,
)
from .graphs import Graph2, Hypergraph3, Triple, induced, link_graph
from .lp import (
    DEFAULT_TRIPLE_LIMIT,
    DualityCertificate,
    FractionalAssignment,
    LpSizeError,
    fractional_matching,
)
from .matching import (
    DEFAULT_BUDGET,
    Matching3,
    find_matching_of_size,
    max_matching_graph,
)
from .spectral import (
    DEFAULT_COMPARISON_SLACK,
    DEFAULT_TOLERANCE,
    spectral_radius,
    threshold_match,
)

MODES = ("thm12", "thm13", "conj_matching", "conj_pm")


class LiftFailure(RuntimeError):
    """The last link of the shifted hypergraph has no matching of size s+1."""

    def __init__(self, link_nu: int):
        super().__init__(f"link matching number is only {link_nu}")
        self.link_nu = link_nu


@dataclass(frozen=True)
class CheckReport:
    """One instance's spectral condition check, with optional conclusion."""

    instance_id: str
    n: int
    s: int
    mode: str | None
    per_vertex_rho: tuple[tuple[int, float], ...]
    min_rho: float
    threshold: float
    condition: str  # "holds" | "fails" | "indeterminate"
    nu: int | None = None
    nu_frac: Fraction | None = None
    perfect_matching: bool | None = None
    verdict: str = "skipped"  # "consistent" | "counterexample" | "bug_suspect" | "skipped"
    witness: Matching3 | DualityCertificate | None = None
    notes: tuple[str, ...] = ()
    instance: Hypergraph3 | None = None


def check_condition(
    H: Hypergraph3,
    s: int,
    tolerance: float = DEFAULT_TOLERANCE,
    eps: float = DEFAULT_COMPARISON_SLACK,
    link_rho: Sequence[float] | None = None,
    instance_id: str = "",
) -> CheckReport:
    """Spectral part only: per-vertex link radii, the minimum, and the verdict.

    `link_rho` may supply precomputed per-vertex link spectral radii
    (index v-1) to skip the eigensolver.
    """
    if H.n == 0:
        return CheckReport(instance_id, 0, s, None, (), 0.0, 0.0, "fails")
    if link_rho is None:
        rhos = [spectral_radius(link_graph(H, v)[0], tolerance).value for v in range(1, H.n + 1)]
    else:
        if len(link_rho) != H.n:
            raise ValueError("link_rho must have one entry per vertex")
        rhos = [float(x) for x in link_rho]
    min_rho = min(rhos)
    threshold = threshold_match(s, H.n)
    if min_rho > threshold + eps:
        condition = "holds"
    elif min_rho < threshold - eps:
        condition = "fails"
    else:
        condition = "indeterminate"
    return CheckReport(
        instance_id=instance_id,
        n=H.n,
        s=s,
        mode=None,
        per_vertex_rho=tuple((v, rhos[v - 1]) for v in range(1, H.n + 1)),
        min_rho=min_rho,
        threshold=threshold,
        condition=condition,
    )


def check_thm11(
    H: Hypergraph3,
    gamma: float,
    tolerance: float = DEFAULT_TOLERANCE,
    eps: float = DEFAULT_COMPARISON_SLACK,
) -> tuple[str, float, float]:
    """Three-way verdict for min link rho > (2/3 + gamma) n.

    The underlying statement is asymptotic; this only reports the condition.
    """
    if not 0 < gamma < 1:
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}")
    rhos = [spectral_radius(link_graph(H, v)[0], tolerance).value for v in range(1, H.n + 1)]
    min_rho = min(rhos) if rhos else 0.0
    threshold = (2.0 / 3.0 + gamma) * H.n
    if min_rho > threshold + eps:
        return "holds", min_rho, threshold
    if min_rho < threshold - eps:
        return "fails", min_rho, threshold
    return "indeterminate", min_rho, threshold


def _hypothesis_notes(n: int, s: int, mode: str) -> list[str]:
    notes = []
    if mode == "thm12" and n < 100 * s:
        notes.append(f"n={n} < 100s: outside the proven range, conjecture territory")
    if mode in ("thm13", "conj_matching", "conj_pm") and n < 3 * s + 3:
        notes.append(f"n={n} < 3s+3={3 * s + 3}: hypothesis of the statement violated")
    if mode == "conj_pm" and n != 3 * s + 3:
        notes.append(f"perfect-matching mode needs n = 3s+3, got n={n}")
    return notes


def verify_theorem(
    H: Hypergraph3,
    s: int,
    mode: str,
    budget: int = DEFAULT_BUDGET,
    tolerance: float = DEFAULT_TOLERANCE,
    eps: float = DEFAULT_COMPARISON_SLACK,
    lp_limit: int | None = DEFAULT_TRIPLE_LIMIT,
    link_rho: Sequence[float] | None = None,
    instance_id: str = "",
) -> CheckReport:
    """Check the spectral hypothesis and, when it holds, the exact conclusion."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    rep = check_condition(H, s, tolerance, eps, link_rho, instance_id)
    notes = _hypothesis_notes(H.n, s, mode)
    rep = replace(rep, mode=mode, notes=tuple(notes))
    if rep.condition != "holds":
        return rep
    if mode == "conj_pm" and H.n != 3 * s + 3:
        return replace(rep, notes=rep.notes + ("skipped: conclusion undefined at this n",))

    try:
        if mode in ("thm12", "conj_matching"):
            witness, decided = find_matching_of_size(H, s + 1, budget)
            if witness is not None:
                return replace(rep, verdict="consistent", witness=witness)
            if not decided:
                return replace(rep, notes=rep.notes + ("skipped: search budget exhausted",))
            ok = False
            extra: dict = {"nu": None}
        elif mode == "thm13":
            witness, decided = find_matching_of_size(H, s + 1, budget)
            if witness is not None:
                return replace(rep, verdict="consistent", witness=witness)
            cert = fractional_matching(H, lp_limit)
            ok = cert.value >= s + 1
            pfm = cert.value == Fraction(H.n, 3) if H.n == 3 * s + 3 else None
            rep = replace(rep, nu_frac=cert.value, perfect_matching=pfm, witness=cert)
            extra = {}
        else:  # conj_pm
            witness, decided = find_matching_of_size(H, H.n // 3, budget)
            if witness is not None:
                return replace(rep, verdict="consistent", perfect_matching=True, witness=witness)
            if not decided:
                return replace(rep, notes=rep.notes + ("skipped: search budget exhausted",))
            ok = False
            extra = {"perfect_matching": False}
    except LpSizeError as exc:
        return replace(rep, notes=rep.notes + (f"skipped: {exc}",))

    if ok:
        return replace(rep, verdict="consistent", **extra)
    verdict = "counterexample" if mode.startswith("conj") else "bug_suspect"
    return replace(rep, verdict=verdict, instance=H, **extra)


# ---------------------------------------------------------------------------
# Fractional cover shifting and the link-matching lift


@dataclass(frozen=True)
class ShiftedPair:
    """A hypergraph, its minimum fractional cover, and the shifted closure.

    `order` lists original vertex labels by descending cover weight (ties by
    label), so new label i corresponds to original vertex order[i-1].  The
    shifted hypergraph contains every triple whose cover weight sum is at
    least 1; it is shift-closed and preserves nu* exactly.
    """

    original: Hypergraph3
    cover: FractionalAssignment
    order: tuple[int, ...]
    shifted: Hypergraph3
    nu_frac: Fraction


def shift(H: Hypergraph3, lp_limit: int | None = DEFAULT_TRIPLE_LIMIT) -> ShiftedPair:
    """Build the weight-closure of H under a minimum fractional vertex cover.

    Verifies exactly that the shifted hypergraph contains the relabelled
    original and has the same fractional matching number.
    """
    cert = fractional_matching(H, lp_limit)
    w = {v: cert.dual.weights.get(v, Fraction(0)) for v in range(1, H.n + 1)}
    order = tuple(sorted(range(1, H.n + 1), key=lambda v: (-w[v], v)))
    new_w = {i + 1: w[order[i]] for i in range(H.n)}
    old_to_new = {order[i]: i + 1 for i in range(H.n)}
    edges = [
        t for t in combinations(range(1, H.n + 1), 3)
        if new_w[t[0]] + new_w[t[1]] + new_w[t[2]] >= 1
    ]
    shifted = Hypergraph3(H.n, tuple(edges))
    for e in H.edges:
        relabelled = tuple(sorted(old_to_new[v] for v in e))
        if not shifted.has_edge(relabelled):
            raise AssertionError(f"shifted hypergraph misses relabelled edge {e}")
    # nu* preservation is certified by exact weak duality rather than a
    # second LP solve: the relabelled optimal matching of H is feasible in
    # the shifted hypergraph (edge inclusion, verified above), and the
    # relabelled cover is feasible for it with the same value (every
    # shifted edge has cover weight >= 1, verified below), so
    # nu*(H) <= nu*(shifted) <= tau* witness = nu*(H).
    relabelled_cover = FractionalAssignment(
        "cover",
        {v: new_w[v] for v in range(1, H.n + 1) if new_w[v] != 0},
        cert.value,
    )
    relabelled_cover.validate(shifted)
    return ShiftedPair(H, cert.dual, order, shifted, cert.value)


def shift_closure_holds(shifted: Hypergraph3) -> bool:
    """Exhaustive dominance scan: coordinatewise-smaller triples stay edges.

    Every (edge, triple) pair is examined; the scan is vectorized but not
    pruned.
    """
    if shifted.m == 0:
        return True
    triples = np.array(lex_triples(shifted.n))
    index = {t: i for i, t in enumerate(lex_triples(shifted.n))}
    present = np.zeros(len(triples), dtype=bool)
    present[[index[e] for e in shifted.edges]] = True
    E = np.array(shifted.edges)
    dominated = (
        (triples[None, :, 0] <= E[:, None, 0])
        & (triples[None, :, 1] <= E[:, None, 1])
        & (triples[None, :, 2] <= E[:, None, 2])
    )
    return bool(np.all(present[None, :] | ~dominated))


def lift_link_matching(P: ShiftedPair, s: int) -> Matching3:
    """Lift a link matching of the last shifted vertex to a 3-graph matching.

    Finds a matching of size s+1 in the link of vertex n of the shifted
    hypergraph, pairs each link edge with a distinct unused vertex, and
    returns the resulting matching of the shifted hypergraph.  Validity of
    each lifted edge follows from shift-closure and is asserted.
    """
    n = P.shifted.n
    if n < 3 * s + 3:
        raise ValueError(f"need n >= 3s+3, got n={n}, s={s}")
    link, _ = link_graph(P.shifted, n)  # removing the top label keeps labels 1..n-1
    nu_link, pairs = max_matching_graph(link)
    if nu_link < s + 1:
        raise LiftFailure(nu_link)
    chosen = sorted(pairs)[: s + 1]
    used = {v for e in chosen for v in e}
    free = [v for v in range(1, n + 1) if v not in used]
    if len(free) < s + 1:  # impossible when n >= 3s+3
        raise AssertionError("not enough unused vertices for the lift")
    lifted = []
    for (a, b), u in zip(chosen, free[: s + 1]):
        t = tuple(sorted((a, b, u)))
        if not P.shifted.has_edge(t):
            raise AssertionError(f"lifted triple {t} missing; shift-closure violated")
        lifted.append(t)
    return Matching3(tuple(sorted(lifted)))


# ---------------------------------------------------------------------------
# Absorbing sets and the removal edge-count lemma


def _has_disjoint_edges(edges: Sequence[Triple], k: int) -> bool:
    """Whether some k of the given triples are pairwise disjoint (exhaustive)."""
    if k <= 0:
        return True
    masks = [sum(1 << v for v in e) for e in edges]

    def rec(i: int, used: int, left: int) -> bool:
        if left == 0:
            return True
        if len(masks) - i < left:
            return False
        for j in range(i, len(masks)):
            if not masks[j] & used and rec(j + 1, used | masks[j], left - 1):
                return True
        return False

    return rec(0, 0, k)


def absorbing_sets(H: Hypergraph3, T: Iterable[int]) -> list[tuple[int, ...]]:
    """All 6-sets A disjoint from T with nu(H[A]) >= 2 and nu(H[A+T]) >= 3."""
    ts = tuple(sorted(set(T)))
    if len(ts) != 3:
        raise ValueError(f"T must have exactly 3 vertices, got {ts}")
    for v in ts:
        if not 1 <= v <= H.n:
            raise ValueError(f"vertex {v} out of range 1..{H.n}")
    rest = [v for v in range(1, H.n + 1) if v not in ts]
    out = []
    for A in combinations(rest, 6):
        inner, _ = induced(H, A)
        if not _has_disjoint_edges(inner.edges, 2):
            continue
        both, _ = induced(H, A + ts)
        if _has_disjoint_edges(both.edges, 3):
            out.append(A)
    return out


@dataclass(frozen=True)
class RemovalEdgeCountVerdict:
    """Outcome of the spectral-to-removed-edge-count implication check."""

    status: str  # "not_applicable" | "holds" | "violated"
    rho: float
    threshold: float
    witness_R: tuple[int, ...] | None = None
    edges_after: int | None = None
    required_double: int | None = None  # 2 e(G-R) must exceed this integer


def lemma25_check(
    G: Graph2,
    s: int,
    max_r: int,
    tolerance: float = DEFAULT_TOLERANCE,
    eps: float = DEFAULT_COMPARISON_SLACK,
) -> RemovalEdgeCountVerdict:
    """Exhaustively verify e(G-R) > (s-r)(n-s)/2 for all |R| <= min(max_r, s).

    Applicable only when rho(G) strictly exceeds the s-parameter split-graph
    value (with comparison slack); the count comparison is exact in integers.
    """
    n = G.n
    if n < s + 1:
        raise ValueError(f"need n >= s+1, got n={n}, s={s}")
    import math

    threshold = 0.5 * (s - 1 + math.sqrt((s - 1) ** 2 + 4 * s * (n - s)))
    rho = spectral_radius(G, tolerance).value
    if rho <= threshold + eps:
        return RemovalEdgeCountVerdict("not_applicable", rho, threshold)
    verts = range(1, n + 1)
    for r in range(0, min(max_r, s) + 1):
        for R in combinations(verts, r):
            rs = set(R)
            e_after = sum(1 for a, b in G.edges if a not in rs and b not in rs)
            if 2 * e_after <= (s - r) * (n - s):
                return RemovalEdgeCountVerdict(
                    "violated", rho, threshold, R, e_after, (s - r) * (n - s)
                )
    return RemovalEdgeCountVerdict("holds", rho, threshold)


# ---------------------------------------------------------------------------
# Search


_COUNT_KEYS = (
    "total",
    "condition_holds",
    "consistent",
    "counterexample",
    "bug_suspect",
    "indeterminate",
    "skipped",
)


@dataclass(frozen=True)
class SearchSummary:
    space: str
    n: int
    s: int
    mode: str
    counts: dict[str, int] = field(compare=False)
    violations: tuple[CheckReport, ...] = ()

    @property
    def found_counterexample(self) -> bool:
        return self.counts["counterexample"] > 0


def _new_counts() -> dict[str, int]:
    return {k: 0 for k in _COUNT_KEYS}


def _tally(counts: dict[str, int], rep: CheckReport) -> None:
    counts["total"] += 1
    if rep.condition == "holds":
        counts["condition_holds"] += 1
    if rep.condition == "indeterminate":
        counts["indeterminate"] += 1
    if rep.verdict == "skipped":
        counts["skipped"] += 1
    else:
        counts[rep.verdict] += 1


def _rho_table(k: int) -> np.ndarray:
    """Exact-eigensolver spectral radii of all graphs on k vertices, by pair bitmask."""
    pairs = list(combinations(range(k), 2))
    table = np.zeros(1 << len(pairs))
    A = np.zeros((k, k))
    for mask in range(1, 1 << len(pairs)):
        A[:] = 0.0
        mm = mask
        while mm:
            low = mm & -mm
            i, j = pairs[low.bit_length() - 1]
            mm ^= low
            A[i, j] = A[j, i] = 1.0
        table[mask] = max(0.0, float(np.linalg.eigvalsh(A)[-1]))
    return table


def _link_bit_maps(n: int) -> list[list[tuple[int, int]]]:
    """For each vertex v: (triple bit, link pair bit) for every triple through v."""
    triples = lex_triples(n)
    pair_index = {p: i for i, p in enumerate(combinations(range(1, n), 2))}
    maps: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for tb, t in enumerate(triples):
        for v in t:
            a, b = (x for x in t if x != v)
            lab = lambda x: x if x < v else x - 1  # noqa: E731
            maps[v - 1].append((tb, pair_index[(lab(a), lab(b))]))
    return maps


def search_exhaustive(
    n: int,
    s: int,
    mode: str,
    eps: float = DEFAULT_COMPARISON_SLACK,
    budget: int = DEFAULT_BUDGET,
    lp_limit: int | None = DEFAULT_TRIPLE_LIMIT,
    chunk: int = 1 << 16,
) -> SearchSummary:
    """Scan every 3-graph on n <= 6 vertices for violations of the mode.

    The spectral condition is evaluated for all instances at once from an
    exact-eigensolver lookup table of link graphs; only instances whose
    conclusion cannot be certified by a cheap combinatorial witness go
    through the full per-instance verifier.  The scan is deterministic and
    its aggregate is order-independent.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    m = comb(n, 3)
    if m > MAX_ENUMERABLE_TRIPLES:
        raise ValueError(f"exhaustive search requires C(n,3) <= {MAX_ENUMERABLE_TRIPLES}")
    threshold = threshold_match(s, n)
    table = _rho_table(n - 1)
    maps = _link_bit_maps(n)
    # at n=6 two triples are disjoint iff complementary: the pair witness below
    comp_pairs: list[tuple[int, int]] = []
    if n == 6:
        triples = lex_triples(n)
        t_index = {t: i for i, t in enumerate(triples)}
        allv = set(range(1, 7))
        for i, t in enumerate(triples):
            j = t_index[tuple(sorted(allv - set(t)))]
            if i < j:
                comp_pairs.append((i, j))
    fast_conclusion = n == 6 and s == 1 and mode in MODES

    counts = _new_counts()
    violations: list[CheckReport] = []
    total = 1 << m
    for lo in range(0, total, chunk):
        ids = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        rho_stack = np.empty((n, len(ids)))
        for v in range(n):
            lm = np.zeros(len(ids), dtype=np.int64)
            for tb, pb in maps[v]:
                lm |= ((ids >> tb) & 1) << pb
            rho_stack[v] = table[lm]
        min_rho = rho_stack.min(axis=0)
        holds = min_rho > threshold + eps
        fails = min_rho < threshold - eps
        indet = ~holds & ~fails
        counts["total"] += len(ids)
        counts["condition_holds"] += int(holds.sum())
        counts["indeterminate"] += int(indet.sum())
        counts["skipped"] += int(fails.sum()) + int(indet.sum())
        if not holds.any():
            continue
        if fast_conclusion:
            conc = np.zeros(len(ids), dtype=bool)
            for i, j in comp_pairs:
                conc |= ((ids >> i) & (ids >> j) & 1).astype(bool)
            counts["consistent"] += int((holds & conc).sum())
            candidate_idx = np.nonzero(holds & ~conc)[0]
        else:
            candidate_idx = np.nonzero(holds)[0]
        for ci in candidate_idx:
            mask = int(ids[ci])
            H = hypergraph_from_bitmask(n, mask)
            rep = verify_theorem(
                H,
                s,
                mode,
                budget=budget,
                eps=eps,
                lp_limit=lp_limit,
                link_rho=rho_stack[:, ci],
                instance_id=f"exhaustive(n={n})#{mask}",
            )
            # boundary reclassification by the per-instance pass (very rare)
            if rep.condition != "holds":
                counts["condition_holds"] -= 1
                if rep.condition == "indeterminate":
                    counts["indeterminate"] += 1
                counts["skipped"] += 1
                continue
            if rep.verdict == "skipped":
                counts["skipped"] += 1
            else:
                counts[rep.verdict] += 1
            if rep.verdict in ("counterexample", "bug_suspect"):
                violations.append(rep)
    return SearchSummary(f"exhaustive({n})", n, s, mode, counts, tuple(violations))


def instance_seed(base_seed: int, k: int) -> int:
    """Seed of the k-th instance in a random search stream."""
    return base_seed * 1_000_003 + k


def _random_range_worker(
    args: tuple[int, float, int, int, int, int, str, float, int, int | None],
) -> tuple[dict[str, int], list[CheckReport]]:
    n, p, base_seed, lo, hi, s, mode, eps, budget, lp_limit = args
    counts = _new_counts()
    violations: list[CheckReport] = []
    for k in range(lo, hi):
        inst = random_3graph(n, p, instance_seed(base_seed, k))
        rep = verify_theorem(
            inst.hypergraph,
            s,
            mode,
            budget=budget,
            eps=eps,
            lp_limit=lp_limit,
            instance_id=f"random(n={n},p={p},seed={base_seed})#{k}",
        )
        _tally(counts, rep)
        if rep.verdict in ("counterexample", "bug_suspect"):
            violations.append(rep)
    return counts, violations


def search_random(
    n: int,
    p: float,
    samples: int,
    seed: int,
    s: int,
    mode: str,
    eps: float = DEFAULT_COMPARISON_SLACK,
    budget: int = DEFAULT_BUDGET,
    lp_limit: int | None = DEFAULT_TRIPLE_LIMIT,
    threads: int = 1,
) -> SearchSummary:
    """Verify `samples` seeded random instances; deterministic for fixed params.

    With threads > 1 the sample range is partitioned across worker
    processes; each instance's seed depends only on (seed, k), and the
    aggregation is order-independent, so parallel and sequential runs
    produce identical summaries.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if samples < 0:
        raise ValueError(f"samples must be nonnegative, got {samples}")
    ranges = []
    if threads <= 1 or samples < 2:
        ranges = [(0, samples)]
    else:
        step = -(-samples // threads)
        ranges = [(lo, min(lo + step, samples)) for lo in range(0, samples, step)]
    payloads = [(n, p, seed, lo, hi, s, mode, eps, budget, lp_limit) for lo, hi in ranges]
    counts = _new_counts()
    violations: list[CheckReport] = []
    if len(payloads) == 1:
        results = [_random_range_worker(payloads[0])]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_random_range_worker, payloads))
    for part_counts, part_violations in results:
        for k in _COUNT_KEYS:
            counts[k] += part_counts[k]
        violations.extend(part_violations)
    return SearchSummary(
        f"random(n={n},p={p},samples={samples},seed={seed})",
        n,
        s,
        mode,
        counts,
        tuple(violations),
    )
