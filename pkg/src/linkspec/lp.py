"""Exact fractional matching / vertex cover via rational simplex.

The fractional matching LP (one variable per edge, one <=1 constraint per
vertex) is solved over the rationals with Bland's rule, so the optimum is
exact and cycling-free.  The dual optimum read off the final tableau is a
minimum fractional vertex cover; primal value == dual value is the
optimality certificate and is asserted on every solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, lcm
from typing import Mapping, Sequence

import numpy as np

from .graphs import Hypergraph3, Triple

#: refuse the exact LP above this many potential triples unless overridden
DEFAULT_TRIPLE_LIMIT = 2000

ZERO = Fraction(0)
ONE = Fraction(1)


class LpSizeError(ValueError):
    """Instance exceeds the exact-LP size guard."""


#: with int64 entries below this bound, a pivot's products cannot overflow
_INT64_SAFE = 1 << 30


def _common_denominator(fractions: Sequence[Fraction]) -> int:
    return reduce(lcm, (f.denominator for f in fractions), 1)


def simplex_max(
    c: list[Fraction],
    rows: list[list[Fraction]],
    b: list[Fraction],
) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Maximize c.x subject to rows.x <= b, x >= 0, with b >= 0.

    Exact primal simplex with Bland's rule.  Returns (optimum, x, duals)
    where duals are the optimal multipliers of the <= constraints.

    The tableau is kept in integers via fraction-free pivoting: every entry
    is the true rational times the current denominator (the previous pivot
    element), and each pivot's cross-multiplication step divides exactly.
    Entries are machine integers while they provably cannot overflow and
    arbitrary-precision integers afterwards, so the result is exact either
    way; the pivot sequence is identical to a rational-tableau simplex.
    """
    m = len(rows)
    nv = len(c)
    cf = [Fraction(x) for x in c]
    bf = [Fraction(x) for x in b]
    if any(x < 0 for x in bf):
        raise ValueError("right-hand side must be nonnegative")
    # Scale the objective and each constraint row to integers.  Row scaling
    # by a positive constant changes neither feasibility nor the optimum,
    # and is undone on the duals below.
    obj_scale = _common_denominator(cf)
    row_scale = []
    # Tableau: m constraint rows [A | I | b], then the objective row [-c | 0 | 0].
    rhs = nv + m
    data: list[list[int]] = []
    for i in range(m):
        rf = [Fraction(x) for x in rows[i]]
        s = lcm(_common_denominator(rf), bf[i].denominator)
        row_scale.append(s)
        data.append([int(f * s) for f in rf] + [0] * m + [int(bf[i] * s)])
        data[i][nv + i] = 1  # unit slack column; the initial basis is the identity
    data.append([-int(f * obj_scale) for f in cf] + [0] * (m + 1))
    big = max((abs(x) for row in data for x in row), default=0) >= _INT64_SAFE
    T = np.array(data, dtype=object if big else np.int64)
    basis = list(range(nv, nv + m))
    den = 1  # current common denominator of the tableau (always positive)
    while True:
        neg = np.flatnonzero(T[m, : nv + m] < 0)
        if len(neg) == 0:
            break
        enter = int(neg[0])  # Bland's rule: first improving column
        col = T[:m, enter]
        leave = None
        num_l = den_l = 0  # best ratio as num_l/den_l with den_l > 0
        for i in np.flatnonzero(col > 0):
            a = int(T[i, enter])
            r = int(T[i, rhs])
            cmp = r * den_l - num_l * a  # sign of ratio_i - best_ratio
            if leave is None or cmp < 0 or (cmp == 0 and basis[i] < basis[leave]):
                num_l, den_l = r, a
                leave = int(i)
        if leave is None:
            raise ArithmeticError("LP is unbounded")  # cannot happen for matching LPs
        if T.dtype != object:
            peak = int(np.abs(T).max())
            if peak >= _INT64_SAFE:
                T = T.astype(object)
        piv = T[leave, enter]
        prow = T[leave].copy()
        pcol = T[:, enter].copy()
        T = (T * piv - np.outer(pcol, prow)) // den  # exact division
        T[leave] = prow
        den = int(piv)
        basis[leave] = enter
    x = [ZERO] * nv
    for i, bv in enumerate(basis):
        if bv < nv:
            x[bv] = Fraction(int(T[i, rhs]), den)
    value = Fraction(int(T[m, rhs]), den * obj_scale)
    duals = [
        Fraction(int(T[m, nv + i]) * row_scale[i], den * obj_scale) for i in range(m)
    ]
    return value, x, duals


@dataclass(frozen=True)
class FractionalAssignment:
    """Exact rational weights on edges (matching) or vertices (cover)."""

    kind: str  # "matching" | "cover"
    weights: Mapping[Triple, Fraction] | Mapping[int, Fraction]
    value: Fraction

    def __post_init__(self) -> None:
        if self.kind not in ("matching", "cover"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if sum(self.weights.values(), ZERO) != self.value:
            raise ValueError("value does not equal the sum of the weights")
        if any(not (0 <= w <= 1) for w in self.weights.values()):
            raise ValueError("weights must lie in [0, 1]")

    def validate(self, H: Hypergraph3) -> None:
        """Check exact feasibility with respect to H; raises on violation."""
        if self.kind == "matching":
            load: dict[int, Fraction] = {}
            for e, w in self.weights.items():
                if not H.has_edge(e):
                    raise ValueError(f"{e} is not an edge of the hypergraph")
                for v in e:
                    load[v] = load.get(v, ZERO) + w
            bad = [v for v, s in load.items() if s > 1]
            if bad:
                raise ValueError(f"vertex constraint violated at {bad[0]}")
        else:
            for e in H.edges:
                if sum((self.weights.get(v, ZERO) for v in e), ZERO) < 1:
                    raise ValueError(f"edge {e} is not covered")


@dataclass(frozen=True)
class DualityCertificate:
    """An optimal fractional matching with a matching-value fractional cover."""

    primal: FractionalAssignment
    dual: FractionalAssignment

    def __post_init__(self) -> None:
        if self.primal.kind != "matching" or self.dual.kind != "cover":
            raise ValueError("certificate needs a matching primal and a cover dual")
        if self.primal.value != self.dual.value:
            raise ValueError("primal and dual values differ; not a certificate")

    @property
    def value(self) -> Fraction:
        return self.primal.value


def fractional_matching(
    H: Hypergraph3,
    limit: int | None = DEFAULT_TRIPLE_LIMIT,
) -> DualityCertificate:
    """Exact nu*(H) with both the optimal matching and the optimal cover.

    `limit` guards the exact LP by the number of potential triples C(n,3);
    pass None to override.
    """
    if limit is not None and comb(H.n, 3) > limit:
        raise LpSizeError(
            f"C({H.n},3) = {comb(H.n, 3)} exceeds the exact-LP guard {limit}; "
            "pass limit=None to override"
        )
    if H.m == 0:
        primal = FractionalAssignment("matching", {}, ZERO)
        dual = FractionalAssignment("cover", {}, ZERO)
        return DualityCertificate(primal, dual)
    touched = [v for v in range(1, H.n + 1) if H.incidence[v - 1]]
    row_of = {v: i for i, v in enumerate(touched)}
    rows = [[ZERO] * H.m for _ in touched]
    for j, e in enumerate(H.edges):
        for v in e:
            rows[row_of[v]][j] = ONE
    c = [ONE] * H.m
    b = [ONE] * len(touched)
    value, x, duals = simplex_max(c, rows, b)
    primal_w = {e: x[j] for j, e in enumerate(H.edges) if x[j] != 0}
    dual_w = {v: duals[row_of[v]] for v in touched if duals[row_of[v]] != 0}
    primal = FractionalAssignment("matching", primal_w, value)
    dual = FractionalAssignment("cover", dual_w, sum(dual_w.values(), ZERO))
    primal.validate(H)
    dual.validate(H)
    return DualityCertificate(primal, dual)


def has_perfect_fractional_matching(
    H: Hypergraph3,
    limit: int | None = DEFAULT_TRIPLE_LIMIT,
) -> tuple[bool, FractionalAssignment | None]:
    """Whether nu*(H) = n/3 exactly; a witness with all constraints tight if so.

    Any optimum of value n/3 is automatically tight at every vertex, since
    the vertex loads sum to three times the matching value.
    """
    cert = fractional_matching(H, limit)
    if cert.value == Fraction(H.n, 3):
        return True, cert.primal
    return False, None
