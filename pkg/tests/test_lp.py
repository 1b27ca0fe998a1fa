"""Exact rational LP: fractional matching, cover dual, duality certificates."""

import random
from fractions import Fraction

import pytest

from linkspec.constructions import complete_3graph, h1, h2
from linkspec.graphs import Hypergraph3
from linkspec.lp import (
    DualityCertificate,
    FractionalAssignment,
    LpSizeError,
    fractional_matching,
    has_perfect_fractional_matching,
    simplex_max,
)

from conftest import ZERO, ONE, brute_nu_3graph, rand_3graph, ref_nu_frac, ref_simplex_max


class TestSimplex:
    def test_tiny_lp(self):
        # max x + y  s.t.  x <= 1, y <= 2
        value, x, duals = simplex_max(
            [ONE, ONE], [[ONE, ZERO], [ZERO, ONE]], [ONE, Fraction(2)]
        )
        assert value == 3 and x == [ONE, Fraction(2)] and duals == [ONE, ONE]

    def test_fractional_coefficients(self):
        # max 3x  s.t.  (1/2)x <= 5/4  ->  x = 5/2, dual = 6
        value, x, duals = simplex_max([Fraction(3)], [[Fraction(1, 2)]], [Fraction(5, 4)])
        assert value == Fraction(15, 2)
        assert x == [Fraction(5, 2)]
        assert duals == [Fraction(6)]

    def test_negative_rhs_rejected(self):
        with pytest.raises(ValueError):
            simplex_max([ONE], [[ONE]], [Fraction(-1)])

    def test_unbounded_detected(self):
        with pytest.raises(ArithmeticError):
            simplex_max([ONE], [[Fraction(-1)]], [ONE])

    def test_matches_rational_reference_on_random_lps(self):
        # the library solver pivots on an integer tableau; the reference
        # keeps a Fraction tableau. Same pivot rules, so outputs must be
        # identical rationals, not merely equal optima.
        rng = random.Random(31)
        for _ in range(150):
            m, nv = rng.randint(1, 6), rng.randint(1, 8)
            c = [Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(nv)]
            rows = [
                [Fraction(rng.randint(0, 5), rng.randint(1, 3)) for _ in range(nv)]
                for _ in range(m)
            ]
            b = [Fraction(rng.randint(0, 9), rng.randint(1, 3)) for _ in range(m)]
            for j in range(nv):  # keep the LP bounded
                if all(rows[i][j] == 0 for i in range(m)):
                    rows[rng.randrange(m)][j] = ONE
            assert simplex_max(c, rows, b) == ref_simplex_max(c, rows, b)

    def test_big_integer_coefficients_stay_exact(self):
        big = Fraction(1 << 62)
        value, x, duals = simplex_max([ONE], [[ONE]], [big])
        assert value == big and x == [big] and duals == [ONE]


class TestAssignments:
    def test_kind_and_value_validation(self):
        with pytest.raises(ValueError):
            FractionalAssignment("nonsense", {}, ZERO)
        with pytest.raises(ValueError):
            FractionalAssignment("matching", {(1, 2, 3): ONE}, Fraction(2))
        with pytest.raises(ValueError):
            FractionalAssignment("matching", {(1, 2, 3): Fraction(3, 2)}, Fraction(3, 2))

    def test_matching_feasibility(self):
        H = Hypergraph3(6, ((1, 2, 3), (1, 4, 5)))
        good = FractionalAssignment(
            "matching", {(1, 2, 3): Fraction(1, 2), (1, 4, 5): Fraction(1, 2)}, ONE
        )
        good.validate(H)
        overloaded = FractionalAssignment(
            "matching", {(1, 2, 3): ONE, (1, 4, 5): ONE}, Fraction(2)
        )
        with pytest.raises(ValueError):
            overloaded.validate(H)
        foreign = FractionalAssignment("matching", {(4, 5, 6): ONE}, ONE)
        with pytest.raises(ValueError):
            foreign.validate(H)

    def test_cover_feasibility(self):
        H = Hypergraph3(6, ((1, 2, 3), (4, 5, 6)))
        FractionalAssignment("cover", {1: ONE, 4: ONE}, Fraction(2)).validate(H)
        with pytest.raises(ValueError):
            FractionalAssignment("cover", {1: ONE}, ONE).validate(H)

    def test_certificate_requires_equal_values(self):
        p = FractionalAssignment("matching", {(1, 2, 3): ONE}, ONE)
        d = FractionalAssignment("cover", {1: ONE, 4: ONE}, Fraction(2))
        with pytest.raises(ValueError):
            DualityCertificate(p, d)
        with pytest.raises(ValueError):
            DualityCertificate(p, p)


class TestFractionalMatching:
    def test_fano(self, fano):
        cert = fractional_matching(fano)
        assert cert.value == Fraction(7, 3)
        assert cert.primal.value == cert.dual.value

    def test_complete7(self):
        assert fractional_matching(complete_3graph(7).hypergraph).value == Fraction(7, 3)

    def test_extremal_families(self):
        cert = fractional_matching(h1(2, 10).hypergraph)
        assert cert.value == 2
        assert dict(cert.dual.weights) == {1: ONE, 2: ONE}
        assert fractional_matching(h2(3, 10).hypergraph).value == Fraction(5, 2)
        assert fractional_matching(h2(2, 7).hypergraph).value == Fraction(3, 2)

    def test_empty(self):
        assert fractional_matching(Hypergraph3(5, ())).value == 0

    def test_size_guard(self):
        H = Hypergraph3(24, ((1, 2, 3),))
        with pytest.raises(LpSizeError):
            fractional_matching(H)
        assert fractional_matching(H, limit=None).value == 1
        assert fractional_matching(Hypergraph3(23, ((1, 2, 3),))).value == 1

    def test_certificates_validate_and_bound_nu(self):
        rng = random.Random(32)
        for _ in range(40):
            H = rand_3graph(rng.randint(3, 9), rng.random(), rng)
            cert = fractional_matching(H)
            cert.primal.validate(H)
            cert.dual.validate(H)
            assert cert.primal.value == cert.dual.value
            assert brute_nu_3graph(H) <= cert.value <= Fraction(H.n, 3)

    def test_agrees_with_reference_simplex(self):
        rng = random.Random(33)
        for _ in range(30):
            H = rand_3graph(rng.randint(4, 10), rng.random(), rng)
            assert fractional_matching(H).value == ref_nu_frac(H)


class TestPerfectFractionalMatching:
    def test_complete6(self):
        ok, witness = has_perfect_fractional_matching(complete_3graph(6).hypergraph)
        assert ok and witness is not None
        loads: dict[int, Fraction] = {}
        for e, w in witness.weights.items():
            for v in e:
                loads[v] = loads.get(v, ZERO) + w
        assert all(loads[v] == 1 for v in range(1, 7))

    def test_h1_is_not_perfect(self):
        ok, witness = has_perfect_fractional_matching(h1(2, 9).hypergraph)
        assert not ok and witness is None

    def test_fano_is_perfect(self, fano):
        assert has_perfect_fractional_matching(fano)[0]
