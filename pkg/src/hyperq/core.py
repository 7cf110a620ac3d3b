"""k-uniform hypergraphs: construction, degrees, neighbourhoods, distances.

Vertices are string tokens indexed ``0..n-1`` in order of first appearance.
Edges are stored as sorted tuples of vertex indices. Instances are frozen;
derived matrices are computed lazily and cached on the instance.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DuplicateEdge,
    EmptyEdgeList,
    NonUniformEdge,
    UniformityMismatch,
    UnknownVertex,
)


@dataclass(frozen=True, eq=False)
class Hypergraph:
    k: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 2:
            raise NonUniformEdge(f"uniformity must be at least 2, got {self.k}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex tokens must be unique")
        n = len(self.vertices)
        seen = set()
        for e in self.edges:
            if len(set(e)) != self.k:
                raise NonUniformEdge(f"edge {e} does not have {self.k} distinct vertices")
            if any(not 0 <= v < n for v in e):
                raise UnknownVertex(f"edge {e} refers to a vertex outside 0..{n - 1}")
            key = frozenset(e)
            if key in seen:
                raise DuplicateEdge(f"edge {self.edge_tokens(e)} appears twice")
            seen.add(key)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: Hashable) -> int:
        try:
            return self._index[str(v)]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def edge_tokens(self, e: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in e)

    def edge_sets(self) -> list[frozenset[str]]:
        return [frozenset(self.edge_tokens(e)) for e in self.edges]

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.k == other.k
            and set(self.vertices) == set(other.vertices)
            and set(self.edge_sets()) == set(other.edge_sets())
        )

    def __hash__(self):
        return hash((self.k, frozenset(self.vertices), frozenset(self.edge_sets())))

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"

    @cached_property
    def incidence(self) -> np.ndarray:
        """0/1 vertex-by-edge matrix (read-only)."""
        b = np.zeros((self.n, self.m), dtype=np.int64)
        for j, e in enumerate(self.edges):
            b[list(e), j] = 1
        b.setflags(write=False)
        return b

    @cached_property
    def distances(self) -> np.ndarray:
        b = self.incidence
        adj = (b @ b.T) > 0
        np.fill_diagonal(adj, False)
        d = _kernels.all_pairs_bfs(np.ascontiguousarray(adj))
        d.setflags(write=False)
        return d


def build_hypergraph(k: int, edge_list: Iterable[Iterable[Hashable]],
                     vertices: Iterable[Hashable] = ()) -> Hypergraph:
    """Build a k-graph from edges given as collections of vertex tokens.

    Tokens are converted with ``str``. Extra ``vertices`` are placed first, in
    the given order, which lets subgraphs keep isolated vertices.
    """
    index: dict[str, int] = {}
    for v in vertices:
        index.setdefault(str(v), len(index))
    edges = []
    seen = set()
    for raw in edge_list:
        tokens = [str(v) for v in raw]
        if len(tokens) != k or len(set(tokens)) != k:
            raise NonUniformEdge(f"edge {tokens} is not a set of {k} distinct vertices")
        key = frozenset(tokens)
        if key in seen:
            raise DuplicateEdge(f"edge {sorted(tokens)} appears twice")
        seen.add(key)
        for t in tokens:
            index.setdefault(t, len(index))
        edges.append(tuple(sorted(index[t] for t in tokens)))
    if not edges:
        raise EmptyEdgeList("hypergraph needs at least one edge")
    return Hypergraph(k=k, vertices=tuple(index), edges=tuple(edges))


@dataclass(frozen=True)
class DegreeProfile:
    per_vertex: dict[str, int]
    max: int
    min: int
    average: Fraction


def degrees(h: Hypergraph) -> DegreeProfile:
    deg = h.incidence.sum(axis=1)
    per_vertex = {v: int(d) for v, d in zip(h.vertices, deg)}
    return DegreeProfile(
        per_vertex=per_vertex,
        max=int(deg.max()),
        min=int(deg.min()),
        average=Fraction(int(deg.sum()), h.n),
    )


def degree_vector(h: Hypergraph) -> np.ndarray:
    return h.incidence.sum(axis=1)


def neighborhood(h: Hypergraph, v: Hashable) -> Counter:
    """Multiset of neighbours: multiplicity of w is the number of edges holding v and w."""
    i = h.index(v)
    out: Counter = Counter()
    for e in h.edges:
        if i in e:
            out.update(h.vertices[j] for j in e if j != i)
    return out


def edge_neighborhood(h: Hypergraph, v: Hashable) -> list[tuple[str, ...]]:
    i = h.index(v)
    return [h.edge_tokens(e) for e in h.edges if i in e]


def distance(h: Hypergraph, u: Hashable, w: Hashable) -> float:
    """Length of a shortest walk from u to w; ``math.inf`` when unreachable."""
    d = h.distances[h.index(u), h.index(w)]
    return math.inf if d < 0 else int(d)


def diameter(h: Hypergraph) -> float:
    d = h.distances
    if (d < 0).any():
        return math.inf
    return int(d.max())


def is_connected(h: Hypergraph) -> bool:
    return not (h.distances < 0).any()


def components(h: Hypergraph) -> list[list[int]]:
    """Vertex index lists of the connected components, ordered by smallest index."""
    d = h.distances
    seen = set()
    out = []
    for i in range(h.n):
        if i in seen:
            continue
        comp = [int(j) for j in np.flatnonzero(d[i] >= 0)]
        seen.update(comp)
        out.append(comp)
    return out


def induced_component(h: Hypergraph, comp: Sequence[int]) -> Hypergraph:
    keep = set(comp)
    edges = [h.edge_tokens(e) for e in h.edges if keep.issuperset(e)]
    return build_hypergraph(h.k, edges, vertices=[h.vertices[i] for i in sorted(comp)])


def union(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Union of vertex and edge sets; equal tokens denote the same vertex."""
    if g.k != h.k:
        raise UniformityMismatch(f"cannot unite a {g.k}-graph with a {h.k}-graph")
    seen = set(g.edge_sets())
    ordered = [g.edge_tokens(e) for e in g.edges]
    ordered += [h.edge_tokens(e) for e in h.edges if frozenset(h.edge_tokens(e)) not in seen]
    verts = list(g.vertices) + [v for v in h.vertices if v not in g._index]
    return build_hypergraph(g.k, ordered, vertices=verts)


def product_token(a: str, b: str) -> str:
    return f"({a},{b})"


def cartesian_product(g: Hypergraph, h: Hypergraph) -> Hypergraph:
    """Edges ``{v} x e`` for v in V(G), e in E(H), and ``a x {u}`` for a in E(G), u in V(H)."""
    if g.k != h.k:
        raise UniformityMismatch(f"cannot multiply a {g.k}-graph by a {h.k}-graph")
    verts = [product_token(a, b) for a in g.vertices for b in h.vertices]
    edges = []
    for a in g.vertices:
        for e in h.edges:
            edges.append([product_token(a, h.vertices[j]) for j in e])
    for b in h.vertices:
        for e in g.edges:
            edges.append([product_token(g.vertices[i], b) for i in e])
    return build_hypergraph(g.k, edges, vertices=verts)


def is_subgraph(sub: Hypergraph, h: Hypergraph) -> bool:
    if sub.k != h.k or not set(sub.vertices) <= set(h.vertices):
        return False
    return set(sub.edge_sets()) <= set(h.edge_sets())
