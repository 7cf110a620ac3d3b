import itertools
import math
from collections import Counter
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from hyperq import (
    build_hypergraph,
    cartesian_product,
    degrees,
    diameter,
    distance,
    edge_neighborhood,
    is_connected,
    neighborhood,
    union,
)
from hyperq.core import components, induced_component, is_subgraph
from hyperq.errors import (
    DuplicateEdge,
    EmptyEdgeList,
    NonUniformEdge,
    UniformityMismatch,
    UnknownVertex,
)

from conftest import hypergraphs


def two_section(h):
    g = nx.Graph()
    g.add_nodes_from(h.vertices)
    for e in h.edges:
        g.add_edges_from(itertools.combinations(h.edge_tokens(e), 2))
    return g


class TestBuild:
    def test_tokens_and_order(self, fig1):
        assert fig1.vertices == ("1", "2", "3", "4", "5")
        assert (fig1.k, fig1.n, fig1.m) == (3, 5, 3)

    def test_incidence_read_only(self, fig1):
        with pytest.raises(ValueError):
            fig1.incidence[0, 0] = 5

    @pytest.mark.parametrize("edges, exc", [
        (["123", "12"], NonUniformEdge),
        (["123", "113"], NonUniformEdge),
        (["123", "321"], DuplicateEdge),
        ([], EmptyEdgeList),
    ])
    def test_rejects(self, edges, exc):
        with pytest.raises(exc):
            build_hypergraph(3, edges)

    def test_k_too_small(self):
        with pytest.raises(ValueError):
            build_hypergraph(1, ["1"])

    def test_isolated_vertices_kept(self):
        h = build_hypergraph(2, ["ab"], vertices=["z"])
        assert h.n == 3 and not is_connected(h)

    def test_equality_ignores_order(self):
        assert build_hypergraph(3, ["123", "145"]) == build_hypergraph(3, ["541", "321"])


class TestDegreesAndNeighbourhoods:
    def test_degrees(self, fig1):
        d = degrees(fig1)
        assert d.per_vertex == {"1": 2, "2": 1, "3": 2, "4": 2, "5": 2}
        assert (d.max, d.min, d.average) == (2, 1, Fraction(9, 5))

    def test_neighborhood_is_multiset(self, fig1):
        assert neighborhood(fig1, "4") == Counter({"1": 1, "5": 2, "3": 1})

    def test_edge_neighborhood(self, fig1):
        assert sorted(edge_neighborhood(fig1, "2")) == [("1", "2", "3")]

    def test_unknown_vertex(self, fig1):
        with pytest.raises(UnknownVertex):
            neighborhood(fig1, "9")


class TestDistances:
    def test_example(self, fig1):
        assert distance(fig1, "2", "4") == 2
        assert distance(fig1, "4", "4") == 0
        assert diameter(fig1) == 2

    def test_disconnected(self):
        h = build_hypergraph(2, ["ab", "cd"])
        assert distance(h, "a", "d") == math.inf
        assert diameter(h) == math.inf
        assert sorted(map(len, components(h))) == [2, 2]

    def test_induced_component(self):
        h = build_hypergraph(2, ["ab", "bc", "de"])
        parts = sorted((induced_component(h, c) for c in components(h)), key=lambda g: g.n)
        assert [(g.n, g.m) for g in parts] == [(2, 1), (3, 2)]

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs())
    def test_matches_networkx(self, h):
        lengths = dict(nx.all_pairs_shortest_path_length(two_section(h)))
        for u in h.vertices:
            for w in h.vertices:
                assert distance(h, u, w) == lengths[u].get(w, math.inf)

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(connected=True))
    def test_metric(self, h):
        vs = h.vertices
        for u, v, w in itertools.product(vs, repeat=3):
            assert distance(h, u, v) == distance(h, v, u)
            assert distance(h, u, w) <= distance(h, u, v) + distance(h, v, w)


class TestOperations:
    def test_union_merges_shared_tokens(self):
        u = union(build_hypergraph(2, ["ab"]), build_hypergraph(2, ["bc", "ab"]))
        assert (u.n, u.m) == (3, 2)

    def test_union_uniformity(self):
        with pytest.raises(UniformityMismatch):
            union(build_hypergraph(2, ["ab"]), build_hypergraph(3, ["abc"]))

    def test_product_c4(self, c4):
        prod = cartesian_product(c4, c4)
        assert (prod.n, prod.m) == (16, 32)
        assert np.all(np.array(list(degrees(prod).per_vertex.values())) == 4)
        assert "(a,b)" in prod.vertices
        assert diameter(prod) == 4

    def test_subgraph(self, fig1):
        assert is_subgraph(build_hypergraph(3, ["145"]), fig1)
        assert not is_subgraph(build_hypergraph(3, ["245"]), fig1)
