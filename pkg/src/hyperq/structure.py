"""Structural facts read off the signless Laplacian spectrum.

Covers regularity, zero eigenvalues and partial bipartitions, degree-sum
bounds on the spectral radius, greedy colouring, edge counts and diameter
relations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _config
from .core import Hypergraph, degree_vector, diameter, is_connected
from .errors import (
    DegenerateSpectrum,
    DimensionMismatch,
    Disconnected,
    InternalConsistency,
    NotBalanced,
    NotNearInteger,
    TooFewEdges,
    ZeroVector,
)
from .spectral import Spectrum, perron, q_spectrum

# Guards floor() against values like 0.9999999999 that are 1 in exact arithmetic.
_FLOOR_EPS = 1e-9


@dataclass(frozen=True)
class RegularityReport:
    connected: bool
    is_regular: bool
    rho_equals_kd: bool
    rho_equals_kdelta: bool
    principal_uniform: bool

    @property
    def agree(self) -> bool:
        flags = {self.is_regular, self.rho_equals_kd, self.rho_equals_kdelta, self.principal_uniform}
        return len(flags) == 1


def regularity_report(h: Hypergraph) -> RegularityReport:
    """Evaluate the four equivalent regularity conditions.

    On a connected hypergraph they must agree; a split verdict raises
    :class:`InternalConsistency`. Disconnected inputs are evaluated but not
    asserted.
    """
    deg = degree_vector(h)
    spec = q_spectrum(h)
    p = perron(h)
    tol = spec.tolerances.zero
    k = h.k
    report = RegularityReport(
        connected=p.connected,
        is_regular=bool(np.all(deg == deg[0])),
        rho_equals_kd=bool(abs(p.rho - k * deg.sum() / h.n) <= tol),
        rho_equals_kdelta=bool(abs(p.rho - k * deg.max()) <= tol),
        principal_uniform=bool(np.all(np.abs(p.vector - 1.0 / math.sqrt(h.n)) <= tol)),
    )
    if report.connected and not report.agree:
        raise InternalConsistency(f"regularity conditions disagree: {report}")
    return report


def _zero_tol(h: Hypergraph) -> float:
    return _config.TOL_ZERO * max(1.0, q_spectrum(h).rho)


def edge_sums(h: Hypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return h.incidence.T @ x


def zero_eigenpair_valid(h: Hypergraph, x) -> bool:
    """True iff x sums to (numerically) zero on every edge, i.e. Qx = 0."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (h.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, expected ({h.n},)")
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        raise ZeroVector("the zero vector is not an eigenvector")
    return bool(np.all(np.abs(edge_sums(h, x)) <= _zero_tol(h) * norm))


@dataclass(frozen=True)
class PartialBipartition:
    v0: frozenset
    v1: frozenset
    v2: frozenset
    balanced: Fraction | None = None

    def as_dict(self) -> dict:
        return {
            "V0": sorted(self.v0),
            "V1": sorted(self.v1),
            "V2": sorted(self.v2),
            "c": None if self.balanced is None else str(self.balanced),
        }


def is_partial_bipartition(h: Hypergraph, p: PartialBipartition) -> bool:
    """Check disjointness, coverage, nonempty sides and the per-edge condition."""
    if not p.v1 or not p.v2:
        return False
    if p.v0 & p.v1 or p.v0 & p.v2 or p.v1 & p.v2:
        return False
    if p.v0 | p.v1 | p.v2 != set(h.vertices):
        return False
    for e in h.edge_sets():
        if e <= p.v0:
            continue
        if not (e & p.v1 and e & p.v2):
            return False
    if p.balanced is not None and balance_ratio(h, p) not in (None, p.balanced):
        return False
    return True


def balance_ratio(h: Hypergraph, p: PartialBipartition) -> Fraction | None:
    """Common |e & V1| / |e & V2| over edges leaving V0.

    Returns None when every edge lies in V0 (any ratio works); raises
    NotBalanced when the ratio is not constant or undefined.
    """
    ratio = None
    for e in h.edge_sets():
        if e <= p.v0:
            continue
        a, b = len(e & p.v1), len(e & p.v2)
        if b == 0 or a == 0:
            raise NotBalanced(f"edge {sorted(e)} misses one side")
        r = Fraction(a, b)
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise NotBalanced(f"ratios {ratio} and {r} differ")
    return ratio


def partial_bipartition_from_kernel(h: Hypergraph) -> PartialBipartition | None:
    """Split V by the sign pattern of a zero-eigenvalue eigenvector of Q.

    Uses the first kernel vector in solver order; returns None when zero is
    not an eigenvalue.
    """
    spec = q_spectrum(h)
    ker = spec.kernel()
    if ker.shape[1] == 0:
        return None
    x = ker[:, 0]
    theta = spec.tolerances.zero * float(np.max(np.abs(x)))
    names = np.array(h.vertices, dtype=object)
    p = PartialBipartition(
        v0=frozenset(names[np.abs(x) <= theta]),
        v1=frozenset(names[x > theta]),
        v2=frozenset(names[x < -theta]),
    )
    if not is_partial_bipartition(h, p):
        raise InternalConsistency(f"kernel vector does not induce a partial bipartition: {p}")
    return p


def balanced_bipartition_to_kernel(h: Hypergraph, p: PartialBipartition) -> np.ndarray:
    """Vector with 1 on V1, -c on V2 and 0 on V0; lies in the kernel of Q."""
    if not is_partial_bipartition(h, PartialBipartition(p.v0, p.v1, p.v2)):
        raise NotBalanced("not a partial bipartition of this hypergraph")
    ratio = balance_ratio(h, p)
    c = p.balanced if ratio is None and p.balanced is not None else ratio
    if c is None:
        c = Fraction(1)
    if p.balanced is not None and p.balanced != c:
        raise NotBalanced(f"declared ratio {p.balanced} but edges give {c}")
    x = np.zeros(h.n)
    for v in p.v1:
        x[h.index(v)] = 1.0
    for v in p.v2:
        x[h.index(v)] = -float(c)
    if not zero_eigenpair_valid(h, x):
        raise InternalConsistency("balanced partition vector is not in the kernel")
    return x


def detect_easy_balanced_patterns(h: Hypergraph) -> PartialBipartition | None:
    """Look for two cheap certificates of a balanced partial bipartition.

    First a pair of vertices lying in exactly the same edges (V1 and V2 are
    the two singletons). Failing that, a vertex each of whose edges also
    holds another vertex of degree 1 (V1 is the vertex, V2 one such
    companion per edge). Both give ratio 1.
    """
    b = h.incidence
    cols: dict[bytes, int] = {}
    for i in range(h.n):
        key = b[i].tobytes()
        if key in cols:
            u, v = h.vertices[cols[key]], h.vertices[i]
            return PartialBipartition(
                v0=frozenset(h.vertices) - {u, v}, v1=frozenset([u]), v2=frozenset([v]),
                balanced=Fraction(1),
            )
        cols[key] = i

    deg = degree_vector(h)
    for i in range(h.n):
        if deg[i] == 0:
            continue
        companions = []
        for e in h.edges:
            if i not in e:
                continue
            pick = next((j for j in e if j != i and deg[j] == 1), None)
            if pick is None:
                break
            companions.append(h.vertices[pick])
        else:
            v1 = frozenset([h.vertices[i]])
            v2 = frozenset(companions)
            return PartialBipartition(
                v0=frozenset(h.vertices) - v1 - v2, v1=v1, v2=v2, balanced=Fraction(1),
            )
    return None


def find_partial_bipartition(h: Hypergraph, max_n: int = 10) -> PartialBipartition | None:
    """Exhaustive search over all 3^n labellings; small instances only."""
    if h.n > max_n:
        raise ValueError(f"exhaustive search limited to n <= {max_n}")
    edges = [list(e) for e in h.edges]
    for labels in itertools.product((0, 1, 2), repeat=h.n):
        if 1 not in labels or 2 not in labels:
            continue
        ok = True
        for e in edges:
            seen = {labels[i] for i in e}
            if seen != {0} and not (1 in seen and 2 in seen):
                ok = False
                break
        if ok:
            groups = [frozenset(h.vertices[i] for i in range(h.n) if labels[i] == g) for g in (0, 1, 2)]
            return PartialBipartition(*groups)
    return None


@dataclass(frozen=True)
class DegreeSumBounds:
    lower: int
    upper: int
    k_avg_degree: Fraction
    k_max_degree: int
    rho: float
    connected: bool

    @property
    def holds(self) -> bool:
        tol = _config.TOL_ZERO * max(1.0, self.rho)
        return (self.lower - tol <= self.rho <= self.upper + tol
                and float(self.k_avg_degree) - tol <= self.rho <= self.k_max_degree + tol)


def degree_sum_bounds(h: Hypergraph) -> DegreeSumBounds:
    """Min and max over edges of the vertex degree sum, which bracket rho.

    Also reports k times the average and maximum degree. Raises
    InternalConsistency if rho falls outside either bracket.
    """
    deg = degree_vector(h)
    sums = [int(deg[list(e)].sum()) for e in h.edges]
    out = DegreeSumBounds(
        lower=min(sums),
        upper=max(sums),
        k_avg_degree=Fraction(h.k * int(deg.sum()), h.n),
        k_max_degree=h.k * int(deg.max()),
        rho=q_spectrum(h).rho,
        connected=is_connected(h),
    )
    if not out.holds:
        raise InternalConsistency(f"spectral radius outside degree bounds: {out}")
    return out


@dataclass(frozen=True)
class Coloring:
    assignment: dict
    color_count: int


def min_degree_order(h: Hypergraph) -> list[int]:
    """Vertex order v_1..v_n: v_n has minimum degree, then peel recursively.

    Ties go to the lowest vertex index. Removing a vertex deletes every
    edge through it.
    """
    alive_edges = [set(e) for e in h.edges]
    remaining = set(range(h.n))
    peeled = []
    while remaining:
        deg = {v: 0 for v in remaining}
        for e in alive_edges:
            for v in e:
                deg[v] += 1
        v = min(remaining, key=lambda u: (deg[u], u))
        peeled.append(v)
        remaining.discard(v)
        alive_edges = [e for e in alive_edges if v not in e]
    return peeled[::-1]


def greedy_min_degree_coloring(h: Hypergraph) -> Coloring:
    """Greedy colouring along :func:`min_degree_order`.

    Each vertex takes the smallest colour leaving no edge inside the
    already-coloured prefix monochromatic.
    """
    order = min_degree_order(h)
    position = {v: t for t, v in enumerate(order)}
    color = {}
    for t, v in enumerate(order):
        closed = [e for e in h.edges if v in e and all(position[u] <= t for u in e)]
        c = 1
        while True:
            mono = False
            for e in closed:
                others = {color[u] for u in e if u != v}
                if others == {c}:
                    mono = True
                    break
            if not mono:
                break
            c += 1
        color[v] = c
    assignment = {h.vertices[v]: c for v, c in sorted(color.items())}
    return Coloring(assignment=assignment, color_count=max(color.values()))


def is_proper_coloring(h: Hypergraph, coloring: Coloring) -> bool:
    return all(len({coloring.assignment[v] for v in h.edge_tokens(e)}) > 1 for e in h.edges)


def chromatic_bound(h: Hypergraph) -> int:
    """floor(rho / k) + 1."""
    return math.floor(q_spectrum(h).rho / h.k + _FLOOR_EPS) + 1


def spectral_edge_count(spec: Spectrum, k: int) -> int:
    """Number of edges recovered from the eigenvalue sum (trace of Q is km)."""
    ratio = float(np.sum(spec.eigenvalues)) / k
    m = round(ratio)
    if abs(ratio - m) > 0.01:
        raise NotNearInteger(f"eigenvalue sum / k = {ratio} is not near an integer")
    return int(m)


@dataclass(frozen=True)
class DistinctVsDiameter:
    distinct: int
    diameter: int
    holds: bool


def distinct_eigenvalues_vs_diameter(h: Hypergraph) -> DistinctVsDiameter:
    if not is_connected(h):
        raise Disconnected("diameter is infinite")
    d = int(diameter(h))
    distinct = q_spectrum(h).distinct
    return DistinctVsDiameter(distinct=distinct, diameter=d, holds=distinct >= d + 1)


def diameter_upper_bound(h: Hypergraph) -> int:
    """floor(1 + log((1 - x^2)/x^2) / log(l1/l2)) with x the smallest Perron entry.

    Raises InternalConsistency if the actual diameter exceeds the bound.
    """
    if not is_connected(h):
        raise Disconnected("bound needs a connected hypergraph")
    if h.m < 2:
        raise TooFewEdges("bound needs at least two edges")
    spec = q_spectrum(h)
    l1, l2 = float(spec.eigenvalues[0]), float(spec.eigenvalues[1])
    if l1 - l2 <= spec.tolerances.group:
        raise DegenerateSpectrum(f"top eigenvalues {l1} and {l2} coincide")
    x_min = float(np.min(perron(h).vector))
    if l2 <= spec.tolerances.zero:
        bound = 1
    else:
        ratio = math.log((1.0 - x_min**2) / x_min**2) / math.log(l1 / l2)
        bound = math.floor(1.0 + ratio + _FLOOR_EPS)
    d = int(diameter(h))
    if d > bound:
        raise InternalConsistency(f"diameter {d} exceeds spectral bound {bound}")
    return bound

