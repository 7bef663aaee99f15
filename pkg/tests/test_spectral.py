import random

import pytest
from hypothesis import given, settings

from graphenergy import (
    FamilySpec,
    Graph,
    InvalidFamilyError,
    QuadratureAccuracyError,
    b_coeffs,
    char_poly,
    closed_form_charpoly,
    count_triangles,
    disjoint_union,
    eigenvalues,
    energy,
    energy_coulson,
    family_graph,
    graph6_decode,
    make_b_graph,
    make_complete,
    make_cycle,
    make_s_graph,
    poly_mul,
)
from graphenergy.census import enumerate_connected
from graphenergy.classify import is_bipartite

from test_graphs import graph_strategy


def _poly_from_roots(roots):
    # exact expansion of prod (x - r) over integer roots; spectrum oracle
    coeffs = [1]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return tuple(coeffs)


class TestCharPoly:
    def test_k4_from_spectrum_oracle(self):
        # complete-graph spectrum: n-1 once, -1 with multiplicity n-1
        assert char_poly(make_complete(4)).coeffs == _poly_from_roots([3, -1, -1, -1])

    def test_edgeless(self):
        g = Graph(6, (0,) * 6)
        assert char_poly(g).coeffs == (1, 0, 0, 0, 0, 0, 0)

    @pytest.mark.parametrize("n", range(6, 13))
    def test_unicyclic_star_family_closed_form(self, n):
        assert char_poly(make_s_graph(n, n)).coeffs == closed_form_charpoly(
            FamilySpec("s", (n, n))
        ).coeffs

    @pytest.mark.parametrize("n", range(6, 13))
    def test_tricyclic_star_family_closed_form(self, n):
        assert char_poly(make_s_graph(n, n + 2)).coeffs == closed_form_charpoly(
            FamilySpec("s", (n, n + 2))
        ).coeffs

    @given(graph_strategy(min_n=2, max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_low_coefficient_identities(self, g):
        a = char_poly(g).coeffs
        assert a[0] == 1
        assert a[1] == 0
        assert a[2] == -g.e
        if g.n >= 3:
            assert a[3] == -2 * count_triangles(g)

    def test_union_multiplicativity_exact(self):
        rng = random.Random(2024)
        for _ in range(40):
            g = _rand(rng, rng.randint(2, 6))
            h = _rand(rng, rng.randint(2, 6))
            u = disjoint_union(g, h)
            assert char_poly(u).coeffs == poly_mul(char_poly(g), char_poly(h)).coeffs


def _rand(rng, n, p=0.5):
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


class TestBCoeffs:
    def test_b2_equals_edge_count_on_census(self):
        for s in enumerate_connected(6, 8).graphs:
            g = graph6_decode(s)
            assert b_coeffs(char_poly(g)).values[2] == g.e

    def test_b3_of_k4(self):
        assert b_coeffs(char_poly(make_complete(4))).values[3] == 8

    @pytest.mark.parametrize("n", range(7, 13))
    def test_b4_of_tetracyclic_star_family(self, n):
        vals = b_coeffs(char_poly(make_s_graph(n, n + 3))).values
        assert vals[4] == 4 * n - 24
        assert vals[4] != 4 * n - 18

    def test_b0_is_one_and_length_matches(self):
        p = char_poly(make_cycle(6))
        b = b_coeffs(p)
        assert b.values[0] == 1
        assert len(b.values) == len(p.coeffs)


class TestSpectrum:
    def test_triangle(self):
        s = eigenvalues(make_cycle(3))
        assert s.eigenvalues == pytest.approx((2, -1, -1), abs=1e-9)
        assert s.energy == pytest.approx(4.0, abs=1e-9)

    def test_k2(self):
        s = eigenvalues(Graph.from_edges(2, [(0, 1)]))
        assert s.eigenvalues == pytest.approx((1, -1), abs=1e-9)
        assert s.energy == pytest.approx(2.0, abs=1e-9)

    def test_s88_reference(self):
        assert eigenvalues(make_s_graph(8, 8)).energy == pytest.approx(
            7.07326, abs=1e-5
        )

    @given(graph_strategy(min_n=2, max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_trace_identities_and_residual(self, g):
        s = eigenvalues(g)
        assert list(s.eigenvalues) == sorted(s.eigenvalues, reverse=True)
        assert abs(sum(s.eigenvalues)) <= 1e-9 * g.n
        assert abs(sum(x * x for x in s.eigenvalues) - 2 * g.e) <= 1e-8 * max(g.e, 1)
        scale = max(abs(c) for c in char_poly(g).coeffs)
        assert s.residual <= 1e-6 * scale

    def test_bipartite_symmetry_and_coefficients(self):
        for g in [make_b_graph(8, 10), make_b_graph(9, 12), make_cycle(6)]:
            assert is_bipartite(g)
            s = eigenvalues(g)
            for i in range(g.n):
                assert s.eigenvalues[i] == pytest.approx(
                    -s.eigenvalues[g.n - 1 - i], abs=1e-9
                )
            a = char_poly(g).coeffs
            assert all(a[k] == 0 for k in range(1, g.n + 1, 2))
            assert all(v >= 0 for v in b_coeffs(char_poly(g)).values)


class TestCoulson:
    def test_k4_exact_value(self):
        est = energy_coulson(char_poly(make_complete(4)))
        assert est.value == pytest.approx(6.0, abs=1e-6)
        assert est.error_bound <= 1e-7

    def test_s55_reference(self):
        est = energy_coulson(char_poly(make_s_graph(5, 5)))
        assert est.value == pytest.approx(5.62721, abs=1e-5)

    def test_edgeless_is_exactly_zero(self):
        est = energy_coulson(char_poly(Graph(7, (0,) * 7)))
        assert est.value == 0.0
        assert est.error_bound == 0.0

    def test_budget_exhaustion_carries_estimate(self):
        with pytest.raises(QuadratureAccuracyError) as err:
            energy_coulson(char_poly(make_complete(4)), tol=1e-13, max_evals=30)
        assert err.value.estimate == pytest.approx(6.0, abs=1e-2)
        assert err.value.error_bound > 0

    @given(graph_strategy(min_n=2, max_n=10))
    @settings(max_examples=40, deadline=None)
    def test_dual_route_agreement(self, g):
        est = energy_coulson(char_poly(g))
        assert est.value == pytest.approx(energy(g), abs=1e-6)

    def test_agreement_with_many_zero_eigenvalues(self):
        g = disjoint_union(make_s_graph(11, 11), make_cycle(3))
        est = energy_coulson(char_poly(g))
        assert est.value == pytest.approx(energy(g), abs=1e-6)

    def test_additive_over_unions_through_the_integral(self):
        # the integral route never sees the components, yet must add up
        rng = random.Random(77)
        for _ in range(10):
            g = _rand(rng, rng.randint(3, 6))
            h = _rand(rng, rng.randint(3, 6))
            lhs = energy_coulson(char_poly(disjoint_union(g, h))).value
            rhs = energy_coulson(char_poly(g)).value + energy_coulson(char_poly(h)).value
            assert lhs == pytest.approx(rhs, abs=2e-6)


class TestClosedForms:
    def test_values_at_n_6_and_10(self):
        assert closed_form_charpoly(FamilySpec("s", (6, 6))).coeffs == (
            1, 0, -6, -2, 3, 0, 0,
        )
        assert closed_form_charpoly(FamilySpec("s", (6, 8))).coeffs == (
            1, 0, -8, -6, 3, 0, 0,
        )
        assert closed_form_charpoly(FamilySpec("s", (10, 13))).coeffs == (
            1, 0, -13, -8, 16, 0, 0, 0, 0, 0, 0,
        )

    def test_unsupported_families(self):
        with pytest.raises(InvalidFamilyError):
            closed_form_charpoly(FamilySpec("s", (5, 5)))  # n too small
        with pytest.raises(InvalidFamilyError):
            closed_form_charpoly(FamilySpec("s", (8, 9)))  # e = n+1 not covered
        with pytest.raises(InvalidFamilyError):
            closed_form_charpoly(FamilySpec("cycle", (6,)))


def test_reference_energy_table():
    table = {
        "K 4": 6.0,
        "S 4 4": 4.96239,
        "B 7 9": 7.21110,
        "S 7 7": 6.64681,
        "B 8 10": 7.91375,
        "S 8 8": 7.07326,
        "B 9 11": 8.46834,
        "S 9 9": 7.46410,
        "S 5 7": 6.0,
        "S 5 5": 5.62721,
    }
    for fam, want in table.items():
        assert energy(family_graph(fam)) == pytest.approx(want, abs=1e-5), fam


def test_energy_of_wheel_against_charpoly_roots():
    # cross-check: energy equals the sum of |roots| of the exact polynomial
    g = family_graph("W 5")
    p = char_poly(g)
    import numpy as np

    roots = np.roots(p.coeffs)
    assert max(abs(r.imag) for r in roots) < 1e-8
    assert energy(g) == pytest.approx(sum(abs(r.real) for r in roots), abs=1e-8)
