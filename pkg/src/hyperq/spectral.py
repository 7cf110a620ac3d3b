"""Signless Laplacian matrices, eigendecomposition and spectral identities."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from . import _config
from ._config import CHARPOLY_MAX_ORDER, MAX_SWEEPS, TOL_SOLVE, Tolerances
from .charpoly import char_poly_exact, poly_mul, poly_pow, poly_shift
from .core import Hypergraph, degree_vector, is_connected, is_subgraph
from .errors import (
    DimensionMismatch,
    InternalConsistency,
    NoConvergence,
    NotASubgraph,
    UniformityMismatch,
)
from .multigraphs import clique_multigraph, line_multigraph


def incidence_matrix(h: Hypergraph) -> np.ndarray:
    return h.incidence.copy()


def degree_matrix(h: Hypergraph) -> np.ndarray:
    return np.diag(degree_vector(h))


def signless_laplacian(h: Hypergraph) -> np.ndarray:
    """Q = B B^T, cross-checked against D + A_C."""
    b = h.incidence
    q = b @ b.T
    if not np.array_equal(q, degree_matrix(h) + clique_multigraph(h).adjacency):
        raise InternalConsistency("B B^T differs from D + A_C")
    return q


def gram_line_matrix(h: Hypergraph) -> np.ndarray:
    """B^T B, cross-checked against kI + A_L."""
    b = h.incidence
    g = b.T @ b
    if not np.array_equal(g, h.k * np.eye(h.m, dtype=np.int64) + line_multigraph(h).adjacency):
        raise InternalConsistency("B^T B differs from kI + A_L")
    return g


def group_eigenvalues(values, tol: float) -> list[tuple[float, int]]:
    """Single-linkage clusters of a sorted (either direction) sequence.

    A new cluster starts wherever consecutive values differ by more than
    ``tol``. Each cluster is reported as (mean, size).
    """
    vals = list(values)
    if not vals:
        return []
    groups = [[vals[0]]]
    for prev, cur in zip(vals, vals[1:]):
        if abs(cur - prev) > tol:
            groups.append([cur])
        else:
            groups[-1].append(cur)
    return [(float(np.mean(g)), len(g)) for g in groups]


@dataclass(frozen=True, eq=False)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None
    tolerances: Tolerances
    sweeps: int = 0
    groups: list[tuple[float, int]] = field(init=False)

    def __post_init__(self):
        groups = group_eigenvalues(self.eigenvalues, self.tolerances.group)
        # Clusters at zero are reported as exactly 0.
        groups = [(0.0 if abs(v) <= self.tolerances.zero else v, c) for v, c in groups]
        object.__setattr__(self, "groups", groups)

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def rho(self) -> float:
        return float(self.eigenvalues[0]) if self.n else 0.0

    @property
    def distinct(self) -> int:
        return len(self.groups)

    def values(self) -> list[float]:
        return [g[0] for g in self.groups]

    def multiplicities(self) -> list[int]:
        return [g[1] for g in self.groups]

    def zero_count(self) -> int:
        return int(np.sum(np.abs(self.eigenvalues) <= self.tolerances.zero))

    def rank(self) -> int:
        return self.n - self.zero_count()

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tolerances.group if tol is None else tol
        return int(np.sum(np.abs(self.eigenvalues - value) <= tol))

    def kernel(self) -> np.ndarray:
        """Columns of the eigenvector matrix whose eigenvalue is zero."""
        mask = np.abs(self.eigenvalues) <= self.tolerances.zero
        return self.eigenvectors[:, mask]


def _check_symmetric(m) -> np.ndarray:
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-magnitude entry is positive (lowest index wins ties)."""
    v = vectors.copy()
    for j in range(v.shape[1]):
        i = int(np.argmax(np.abs(v[:, j])))
        if v[i, j] < 0:
            v[:, j] = -v[:, j]
    return v


def eigen_decompose(m, tol_solve: float = TOL_SOLVE, tol_group: float | None = None,
                    tol_zero: float | None = None, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Eigenvalues come back in descending order with orthonormal, sign-normalised
    eigenvectors. ``tol_group`` and ``tol_zero`` are relative to ``max(1, rho)``.
    """
    a = _check_symmetric(m)
    work = np.ascontiguousarray(a.copy())
    v, sweeps, off = _kernels.jacobi_sweeps(work, float(tol_solve), int(max_sweeps))
    if sweeps < 0:
        raise NoConvergence(
            f"off-diagonal norm {off:.3e} after {max_sweeps} sweeps",
            sweeps=max_sweeps, off_norm=off, matrix=work, vectors=v,
        )
    w = np.diag(work).copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = fix_signs(v[:, order])
    rho = float(np.max(np.abs(w))) if len(w) else 0.0
    tols = Tolerances.scaled(rho, solve=tol_solve, group=tol_group, zero=tol_zero)
    return Spectrum(eigenvalues=w, eigenvectors=v, tolerances=tols, sweeps=sweeps)


def q_spectrum(h: Hypergraph, tol_group: float | None = None, tol_zero: float | None = None) -> Spectrum:
    """Spectrum of Q(H), memoised on the hypergraph per tolerance pair."""
    tol_group = _config.TOL_GROUP if tol_group is None else tol_group
    tol_zero = _config.TOL_ZERO if tol_zero is None else tol_zero
    cache = h.__dict__.setdefault("_spectra", {})
    key = (tol_group, tol_zero)
    if key not in cache:
        cache[key] = eigen_decompose(signless_laplacian(h), tol_group=tol_group, tol_zero=tol_zero)
    return cache[key]


@dataclass(frozen=True)
class Perron:
    rho: float
    vector: np.ndarray
    connected: bool


def perron(h: Hypergraph) -> Perron:
    """Spectral radius and unit principal eigenvector of Q(H).

    Positivity and simplicity are only guaranteed when ``connected`` is True.
    """
    spec = q_spectrum(h)
    return Perron(rho=spec.rho, vector=spec.eigenvectors[:, 0].copy(), connected=is_connected(h))


def spectral_radius(h: Hypergraph) -> float:
    return q_spectrum(h).rho


def principal_eigenvector(h: Hypergraph) -> np.ndarray:
    return perron(h).vector


def quadratic_form_edges(h: Hypergraph, x) -> float:
    """Sum over edges of the squared sum of x on the edge."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (h.n,):
        raise DimensionMismatch(f"vector has shape {x.shape}, expected ({h.n},)")
    return float(sum(x[list(e)].sum() ** 2 for e in h.edges))


def verify_poly_identity_line(h: Hypergraph, max_order: int = CHARPOLY_MAX_ORDER) -> bool:
    """Exact check of P_AL(x) (x+k)^max(0,n-m) == (x+k)^max(0,m-n) P_Q(x+k)."""
    k, n, m = h.k, h.n, h.m
    p_line = char_poly_exact(line_multigraph(h).adjacency, max_order=max_order).coefficients
    p_q = char_poly_exact(signless_laplacian(h), max_order=max_order).coefficients
    lhs = poly_mul(p_line, poly_pow((1, k), max(0, n - m)))
    rhs = poly_mul(poly_pow((1, k), max(0, m - n)), poly_shift(p_q, k))
    return lhs == rhs


def verify_poly_identity_regular(h: Hypergraph, max_order: int = CHARPOLY_MAX_ORDER) -> bool:
    """Exact check of P_AL(x) (x+k)^max(0,n-m) == (x+k)^max(0,m-n) P_AC(x - r + k).

    Only meaningful for r-regular H; raises ValueError otherwise.
    """
    deg = degree_vector(h)
    if not np.all(deg == deg[0]):
        raise ValueError("hypergraph is not regular")
    r = int(deg[0])
    k, n, m = h.k, h.n, h.m
    p_line = char_poly_exact(line_multigraph(h).adjacency, max_order=max_order).coefficients
    p_c = char_poly_exact(clique_multigraph(h).adjacency, max_order=max_order).coefficients
    lhs = poly_mul(p_line, poly_pow((1, k), max(0, n - m)))
    rhs = poly_mul(poly_pow((1, k), max(0, m - n)), poly_shift(p_c, k - r))
    return lhs == rhs


def multiset_close(a, b, tol: float) -> bool:
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= tol))


def spectrum_union_check(g: Hypergraph, h: Hypergraph) -> bool:
    """Spec(Q(G u G')) equals Spec(Q(G)) u Spec(Q(G')) for vertex-disjoint G, G'."""
    from .core import union

    if g.k != h.k:
        raise UniformityMismatch(f"{g.k}-graph and {h.k}-graph")
    if set(g.vertices) & set(h.vertices):
        raise ValueError("union check needs vertex-disjoint hypergraphs")
    whole = q_spectrum(union(g, h))
    parts = np.concatenate([q_spectrum(g).eigenvalues, q_spectrum(h).eigenvalues])
    return multiset_close(whole.eigenvalues, parts, whole.tolerances.group)


def product_spectrum_comparison(g: Hypergraph, h: Hypergraph) -> dict:
    """Compare Spec(Q(G x H)) with all pairwise sums of base eigenvalues.

    Sums that coincide are pooled, so multiplicities are aggregate counts.
    """
    from .core import cartesian_product

    if g.k != h.k:
        raise UniformityMismatch(f"{g.k}-graph and {h.k}-graph")
    sg, sh = q_spectrum(g), q_spectrum(h)
    prod = q_spectrum(cartesian_product(g, h))
    tol = prod.tolerances.group
    rows = []
    contained = True
    for mu, m1 in sg.groups:
        for lam, m2 in sh.groups:
            rows.append({"mu": mu, "lambda": lam, "sum": mu + lam, "pair_multiplicity": m1 * m2})
    pooled = group_eigenvalues(sorted((r["sum"] for r in rows for _ in range(r["pair_multiplicity"])),
                                      reverse=True), tol)
    for value, mult in pooled:
        observed = prod.multiplicity(value, tol)
        if observed < mult:
            contained = False
    sums = [mu + lam for mu in sg.eigenvalues for lam in sh.eigenvalues]
    return {
        "pairs": rows,
        "pooled": [{"value": v, "expected": c, "observed": prod.multiplicity(v, tol)} for v, c in pooled],
        "contained": contained,
        "equal": multiset_close(prod.eigenvalues, sums, tol),
    }


def product_eigsum_check(g: Hypergraph, h: Hypergraph) -> bool:
    return product_spectrum_comparison(g, h)["contained"]


def subgraph_monotonicity_check(h: Hypergraph, sub: Hypergraph) -> bool:
    if not is_subgraph(sub, h):
        raise NotASubgraph("second argument is not a subgraph of the first")
    rho = spectral_radius(h)
    return spectral_radius(sub) <= rho + TOL_SOLVE * max(1.0, rho)
