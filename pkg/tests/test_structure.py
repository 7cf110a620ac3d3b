from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from hyperq import (
    balanced_bipartition_to_kernel,
    build_hypergraph,
    degree_sum_bounds,
    detect_easy_balanced_patterns,
    diameter,
    diameter_upper_bound,
    distinct_eigenvalues_vs_diameter,
    greedy_min_degree_coloring,
    partial_bipartition_from_kernel,
    q_spectrum,
    regularity_report,
    signless_laplacian,
    spectral_edge_count,
    zero_eigenpair_valid,
)
from hyperq.errors import (
    DegenerateSpectrum,
    Disconnected,
    DimensionMismatch,
    NotBalanced,
    NotNearInteger,
    TooFewEdges,
    ZeroVector,
)
from hyperq.spectral import eigen_decompose
from hyperq.structure import (
    PartialBipartition,
    balance_ratio,
    chromatic_bound,
    find_partial_bipartition,
    is_partial_bipartition,
    is_proper_coloring,
    min_degree_order,
)

from conftest import hypergraphs, single_edge


def fs(*xs):
    return frozenset(xs)


class TestRegularity:
    def test_k4_regular(self, k4):
        rep = regularity_report(k4)
        assert rep.is_regular and rep.rho_equals_kd and rep.rho_equals_kdelta and rep.principal_uniform
        assert rep.agree

    def test_example_irregular(self, fig1):
        rep = regularity_report(fig1)
        assert not any([rep.is_regular, rep.rho_equals_kd, rep.rho_equals_kdelta, rep.principal_uniform])

    @settings(max_examples=80, deadline=None)
    @given(hypergraphs(connected=True))
    def test_agree_on_connected(self, h):
        assert regularity_report(h).agree


class TestZeroEigenvalue:
    def test_twin_vector(self, twins):
        # kernel of Q is {x3 = x4, x1 + x2 + x3 = 0}; e3 - e4 leaves edge sums (1, -1)
        assert zero_eigenpair_valid(twins, [1, -1, 0, 0])
        assert zero_eigenpair_valid(twins, [1, 1, -2, -2])
        assert not zero_eigenpair_valid(twins, [0, 0, 1, -1])
        assert not zero_eigenpair_valid(twins, np.ones(4))

    def test_errors(self, twins):
        with pytest.raises(ZeroVector):
            zero_eigenpair_valid(twins, np.zeros(4))
        with pytest.raises(DimensionMismatch):
            zero_eigenpair_valid(twins, np.ones(3))

    def test_partition_from_kernel_twins(self, twins):
        # kernel of Q is 2-dimensional here, so only validity is fixed
        assert q_spectrum(twins).zero_count() == 2
        p = partial_bipartition_from_kernel(twins)
        assert p is not None and is_partial_bipartition(twins, p)

    def test_no_kernel(self, k4):
        assert partial_bipartition_from_kernel(k4) is None

    def test_single_edge_kernel(self):
        p = partial_bipartition_from_kernel(single_edge(3))
        assert p is not None and is_partial_bipartition(single_edge(3), p)

    def test_balanced_vector(self, twins):
        p = PartialBipartition(fs("3", "4"), fs("1"), fs("2"), Fraction(1))
        assert balanced_bipartition_to_kernel(twins, p).tolist() == [1, -1, 0, 0]
        wrong = PartialBipartition(fs("1", "2"), fs("3"), fs("4"), Fraction(1))
        assert not is_partial_bipartition(twins, wrong)
        with pytest.raises(NotBalanced):
            balanced_bipartition_to_kernel(twins, wrong)
        edge = single_edge(2)
        assert balanced_bipartition_to_kernel(edge, PartialBipartition(fs(), fs("1"), fs("2"))).tolist() == [1, -1]

    def test_unbalanced_rejected(self):
        h = build_hypergraph(3, ["123", "345"])
        p = PartialBipartition(fs(), fs("1", "2", "5"), fs("3", "4"))
        assert is_partial_bipartition(h, p)
        with pytest.raises(NotBalanced):
            balance_ratio(h, p)

    def test_ratio_two(self):
        h = build_hypergraph(3, ["123", "145"])
        p = PartialBipartition(fs(), fs("2", "3", "4", "5"), fs("1"))
        assert balance_ratio(h, p) == 2
        x = balanced_bipartition_to_kernel(h, p)
        assert np.allclose(signless_laplacian(h) @ x, 0)

    def test_patterns(self, twins, k4):
        p = detect_easy_balanced_patterns(twins)
        assert p.balanced == 1 and {p.v1, p.v2} == {fs("1"), fs("2")}
        assert detect_easy_balanced_patterns(k4) is None
        assert detect_easy_balanced_patterns(single_edge(4)) is not None

    def test_degree_one_companion_pattern(self):
        h = build_hypergraph(2, ["ab", "ac", "bc", "cd"])
        p = detect_easy_balanced_patterns(h)
        assert p is None or is_partial_bipartition(h, p)
        star = build_hypergraph(3, ["x12", "x34", "x56"])
        p = detect_easy_balanced_patterns(star)
        assert is_partial_bipartition(star, p) and p.balanced == 1

    def test_k4_is_partially_bipartite_without_zero(self, k4):
        # partial bipartiteness alone does not force the eigenvalue 0
        p = PartialBipartition(fs(), fs("1", "2"), fs("3", "4"))
        assert is_partial_bipartition(k4, p)
        assert q_spectrum(k4).eigenvalues.min() == pytest.approx(1, abs=1e-8)
        with pytest.raises(NotBalanced):
            balance_ratio(k4, p)

    @settings(max_examples=80, deadline=None)
    @given(hypergraphs(n_max=7))
    def test_kernel_partition_property(self, h):
        spec = q_spectrum(h)
        p = partial_bipartition_from_kernel(h)
        assert (p is None) == (spec.zero_count() == 0)
        for j in range(spec.kernel().shape[1]):
            assert zero_eigenpair_valid(h, spec.kernel()[:, j])
        if p is not None:
            assert find_partial_bipartition(h) is not None

    @settings(max_examples=80, deadline=None)
    @given(hypergraphs(n_max=7))
    def test_pattern_property(self, h):
        p = detect_easy_balanced_patterns(h)
        if p is not None:
            x = balanced_bipartition_to_kernel(h, p)
            q = signless_laplacian(h)
            assert np.linalg.norm(q @ x) <= 1e-8 * np.linalg.norm(q) * np.linalg.norm(x)


class TestBounds:
    def test_example(self, fig1):
        b = degree_sum_bounds(fig1)
        assert (b.lower, b.upper) == (5, 6)
        assert b.k_avg_degree == Fraction(27, 5) and b.k_max_degree == 6
        assert b.holds

    def test_k4_tight(self, k4):
        b = degree_sum_bounds(k4)
        assert b.lower == b.upper == 9

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs())
    def test_property(self, h):
        assert degree_sum_bounds(h).holds


class TestColoring:
    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_single_edge(self, k):
        h = single_edge(k)
        col = greedy_min_degree_coloring(h)
        assert col.color_count == 2 and chromatic_bound(h) == 2

    def test_k4(self, k4):
        col = greedy_min_degree_coloring(k4)
        assert is_proper_coloring(k4, col)
        assert col.color_count == 2 and chromatic_bound(k4) == 4

    def test_example(self, fig1):
        col = greedy_min_degree_coloring(fig1)
        assert is_proper_coloring(fig1, col)
        assert col.color_count == 2 and chromatic_bound(fig1) == 2

    def test_order_ties_lowest_index(self, k4):
        assert min_degree_order(k4) == [3, 2, 1, 0]

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs())
    def test_property(self, h):
        col = greedy_min_degree_coloring(h)
        assert is_proper_coloring(h, col)
        assert col.color_count <= chromatic_bound(h)


class TestEdgeCount:
    def test_k4(self, k4):
        assert spectral_edge_count(q_spectrum(k4), 3) == 4

    def test_single_edge(self):
        assert spectral_edge_count(q_spectrum(single_edge(4)), 4) == 1

    def test_not_integer(self):
        with pytest.raises(NotNearInteger):
            spectral_edge_count(eigen_decompose([[1.5]]), 1)

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs())
    def test_property(self, h):
        assert spectral_edge_count(q_spectrum(h), h.k) == h.m


class TestDiameter:
    def test_k4_bound_is_one(self, k4):
        assert diameter_upper_bound(k4) == 1

    def test_example_bound(self, fig1):
        # closed form: x_min ~ 0.1920 gives 1 + 3.519
        assert diameter_upper_bound(fig1) == 4

    def test_errors(self, c4):
        with pytest.raises(TooFewEdges):
            diameter_upper_bound(single_edge(3))
        with pytest.raises(Disconnected):
            diameter_upper_bound(build_hypergraph(2, ["ab", "cd"]))
        with pytest.raises(Disconnected):
            distinct_eigenvalues_vs_diameter(build_hypergraph(2, ["ab", "cd"]))

    def test_degenerate(self, monkeypatch):
        from hyperq import structure

        class Fake:
            eigenvalues = np.array([2.0, 2.0, 0.0])
            tolerances = q_spectrum(single_edge(2)).tolerances

        h = build_hypergraph(2, ["ab", "bc"])
        monkeypatch.setattr(structure, "q_spectrum", lambda _h: Fake)
        with pytest.raises(DegenerateSpectrum):
            diameter_upper_bound(h)

    def test_distinct(self, k4, fig1):
        r = distinct_eigenvalues_vs_diameter(k4)
        assert (r.distinct, r.diameter, r.holds) == (2, 1, True)
        r = distinct_eigenvalues_vs_diameter(fig1)
        assert (r.distinct, r.diameter, r.holds) == (4, 2, True)

    @settings(max_examples=80, deadline=None)
    @given(hypergraphs(connected=True, min_edges=2))
    def test_property(self, h):
        assert distinct_eigenvalues_vs_diameter(h).holds
        spec = q_spectrum(h)
        if spec.eigenvalues[0] - spec.eigenvalues[1] > spec.tolerances.group:
            assert diameter_upper_bound(h) >= diameter(h)
