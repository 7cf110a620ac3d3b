"""Clique and line multigraphs of a hypergraph."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Hypergraph, degree_vector


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Loopless multigraph stored as a dense symmetric integer matrix."""

    labels: tuple
    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] != len(self.labels):
            raise ValueError("adjacency must be square and match the labels")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a) != 0) or np.any(a < 0):
            raise ValueError("adjacency needs a zero diagonal and nonnegative entries")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return len(self.labels)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def multiplicity(self, i, j) -> int:
        return int(self.adjacency[self.labels.index(i), self.labels.index(j)])


def clique_multigraph(h: Hypergraph) -> Multigraph:
    b = h.incidence
    a = b @ b.T
    np.fill_diagonal(a, 0)
    return Multigraph(labels=h.vertices, adjacency=a)


def line_multigraph(h: Hypergraph) -> Multigraph:
    b = h.incidence
    a = b.T @ b
    np.fill_diagonal(a, 0)
    labels = tuple(" ".join(h.edge_tokens(e)) for e in h.edges)
    return Multigraph(labels=labels, adjacency=a)


def line_degree_check(h: Hypergraph) -> bool:
    """True iff every edge's line-multigraph degree is its vertex degree sum minus k."""
    deg = degree_vector(h)
    expected = np.array([deg[list(e)].sum() - h.k for e in h.edges])
    return bool(np.array_equal(line_multigraph(h).degrees(), expected))
