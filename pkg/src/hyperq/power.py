"""Generalised power hypergraphs and their signless Laplacian spectra.

``power(H, PowerParams(s, r))`` blows every vertex up into ``s`` vertices
(the original "main" vertex plus copies ``v#2..v#s``) and pads every edge
with ``r - k*s`` additional vertices named ``<edge>@i``, where ``<edge>`` is
the edge's tokens joined by ``-``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _config
from ._config import Tolerances
from .core import Hypergraph
from .errors import BadParams, InternalConsistency, NonPositiveEigenvalue
from .spectral import Spectrum, eigen_decompose, gram_line_matrix, multiset_close, q_spectrum, signless_laplacian

LIFT_RESIDUAL = 1e-8


@dataclass(frozen=True)
class PowerParams:
    s: int
    r: int

    def check(self, k: int) -> None:
        if self.s < 1:
            raise BadParams(f"expansion factor s must be >= 1, got {self.s}")
        if self.r < k * self.s:
            raise BadParams(f"r = {self.r} is below k*s = {k * self.s}")

    def extra(self, k: int) -> int:
        return self.r - k * self.s


@dataclass(frozen=True)
class PowerVertexMap:
    """Index sets of the blown-up vertices and the padding of each edge."""

    vertex_sets: tuple[tuple[int, ...], ...]
    edge_sets: tuple[tuple[int, ...], ...]

    def main(self, v: int) -> int:
        return self.vertex_sets[v][0]


def power(h: Hypergraph, params: PowerParams) -> tuple[Hypergraph, PowerVertexMap]:
    params.check(h.k)
    s, extra = params.s, params.extra(h.k)
    names = []
    vertex_sets = []
    for v in h.vertices:
        block = [v] + [f"{v}#{j}" for j in range(2, s + 1)]
        vertex_sets.append(tuple(range(len(names), len(names) + s)))
        names.extend(block)
    edge_sets = []
    for e in h.edges:
        label = "-".join(h.edge_tokens(e))
        edge_sets.append(tuple(range(len(names), len(names) + extra)))
        names.extend(f"{label}@{i}" for i in range(1, extra + 1))
    edges = []
    for e, pad in zip(h.edges, edge_sets):
        members = [u for v in e for u in vertex_sets[v]] + list(pad)
        edges.append(tuple(sorted(members)))
    powered = Hypergraph(k=params.r, vertices=tuple(names), edges=tuple(edges))
    return powered, PowerVertexMap(tuple(vertex_sets), tuple(edge_sets))


def predict_power_spectrum(base: Spectrum, k: int, n: int, m: int, params: PowerParams,
                           tol_group: float | None = None, tol_zero: float | None = None) -> Spectrum:
    """Spectrum of Q(H^r_s) from the spectrum of Q(H).

    Nonzero base eigenvalues l map to s(l - k) + r; the value r - ks occurs
    m - t times and 0 occurs (r - ks - 1)m + sn times, t being the rank of
    Q(H). When r = ks the last two groups merge into 0 with multiplicity
    sn - t.
    """
    params.check(k)
    s, r = params.s, params.r
    if base.n != n:
        raise BadParams(f"base spectrum has {base.n} values, expected n = {n}")
    nonzero = base.eigenvalues[np.abs(base.eigenvalues) > base.tolerances.zero]
    t = len(nonzero)
    if t > m:
        raise InternalConsistency(f"rank {t} of Q exceeds the edge count {m}")
    extra = r - k * s
    values = list(s * (nonzero - k) + r)
    if extra > 0:
        values += [float(extra)] * (m - t)
        values += [0.0] * ((extra - 1) * m + s * n)
    else:
        values += [0.0] * (s * n - t)
    w = np.array(sorted(values, reverse=True))
    tols = Tolerances.scaled(float(w[0]) if len(w) else 0.0, group=tol_group, zero=tol_zero)
    return Spectrum(eigenvalues=w, eigenvectors=None, tolerances=tols)


def predicted_trace(k: int, m: int, t: int, params: PowerParams, base_trace: int) -> int:
    """Exact integer trace of the predicted spectrum.

    Summing s(l - k) + r over the t nonzero eigenvalues (whose sum is the
    base trace) and adding (r - ks)(m - t).
    """
    s, r = params.s, params.r
    return s * base_trace - s * k * t + r * t + (r - k * s) * (m - t)


def power_spectrum_comparison(h: Hypergraph, params: PowerParams) -> dict:
    powered, _ = power(h, params)
    base = q_spectrum(h)
    predicted = predict_power_spectrum(base, h.k, h.n, h.m, params)
    observed = q_spectrum(powered)
    tol = observed.tolerances.group
    base_trace = int(np.trace(signless_laplacian(h)))
    trace = predicted_trace(h.k, h.m, base.rank(), params, base_trace)
    return {
        "matches": multiset_close(predicted.eigenvalues, observed.eigenvalues, tol),
        "predicted": predicted.groups,
        "observed": observed.groups,
        "zero_predicted": predicted.multiplicity(0.0, tol),
        "zero_observed": observed.zero_count(),
        "trace_exact": trace,
        "trace_ok": trace == params.r * h.m,
        "tolerance": tol,
    }


def verify_power_spectrum(h: Hypergraph, params: PowerParams) -> bool:
    return power_spectrum_comparison(h, params)["matches"]


def _residual(q: np.ndarray, lam: float, x: np.ndarray) -> float:
    return float(np.linalg.norm(q @ x - lam * x))


def lift_eigenvector(h: Hypergraph, params: PowerParams, pair) -> tuple[float, np.ndarray]:
    """Lift a base eigenpair (mu, y) with mu > 0 to Q(H^r_s).

    Main vertices and copies keep y; the padding of edge e gets y(e) / mu.
    The returned vector is unit-normalised and its eigen-residual checked.
    """
    mu, y = pair
    y = np.asarray(y, dtype=np.float64)
    params.check(h.k)
    if mu <= _config.TOL_ZERO * max(1.0, abs(mu)):
        raise NonPositiveEigenvalue(f"cannot lift eigenvalue {mu}")
    powered, vmap = power(h, params)
    lam = params.s * (mu - h.k) + params.r
    x = np.zeros(powered.n)
    for v, block in enumerate(vmap.vertex_sets):
        x[list(block)] = y[v]
    for e, pad in zip(h.edges, vmap.edge_sets):
        if pad:
            x[list(pad)] = y[list(e)].sum() / mu
    x /= np.linalg.norm(x)
    q = signless_laplacian(powered)
    if _residual(q, lam, x) > LIFT_RESIDUAL * max(1.0, lam):
        raise InternalConsistency(f"lifted vector is not an eigenvector for {lam}")
    return float(lam), x


@dataclass(frozen=True)
class WitnessFamily:
    name: str
    eigenvalue: float
    vectors: np.ndarray
    max_residual: float
    rank: int

    @property
    def count(self) -> int:
        return self.vectors.shape[1]


def _family(name, eigenvalue, columns, size, q) -> WitnessFamily:
    vecs = np.array(columns, dtype=np.float64).T if columns else np.zeros((size, 0))
    if vecs.shape[1]:
        res = float(max(_residual(q, eigenvalue, vecs[:, j]) / np.linalg.norm(vecs[:, j])
                  for j in range(vecs.shape[1])))
        rank = int(np.linalg.matrix_rank(vecs))
    else:
        res, rank = 0.0, 0
    return WitnessFamily(name, eigenvalue, vecs, res, rank)


def kernel_dimension_witnesses(h: Hypergraph, params: PowerParams) -> dict:
    """Explicit eigenvectors certifying the multiplicities of 0 and r - ks.

    For r > ks: differences inside each edge padding (0), one vector per
    main/copy vertex balancing it against a padding vertex of each of its
    edges (0), and padding vectors built from the kernel of B^T B (r - ks).
    For r = ks: differences between a main vertex and its copies, and base
    kernel vectors spread over the copies (both 0).
    """
    params.check(h.k)
    powered, vmap = power(h, params)
    q = signless_laplacian(powered)
    size = powered.n
    extra = params.extra(h.k)
    families = []

    def unit(*pairs):
        x = np.zeros(size)
        for i, val in pairs:
            x[i] += val
        return x

    if extra > 0:
        diffs = [unit((pad[0], 1.0), (pad[j], -1.0)) for pad in vmap.edge_sets for j in range(1, extra)]
        families.append(_family("padding_differences", 0.0, diffs, size, q))
        balance = []
        for v, block in enumerate(vmap.vertex_sets):
            pads = [vmap.edge_sets[j][0] for j, e in enumerate(h.edges) if v in e]
            for w in block:
                balance.append(unit((w, 1.0), *[(p, -1.0) for p in pads]))
        families.append(_family("vertex_balances", 0.0, balance, size, q))
        gram = eigen_decompose(gram_line_matrix(h))
        line_kernel = gram.kernel()
        padded = []
        for j in range(line_kernel.shape[1]):
            z = line_kernel[:, j]
            x = np.zeros(size)
            for e_idx, pad in enumerate(vmap.edge_sets):
                x[list(pad)] = z[e_idx]
            padded.append(x)
        families.append(_family("line_kernel_padding", float(extra), padded, size, q))
    else:
        copies = [unit((block[0], 1.0), (block[j], -1.0))
                  for block in vmap.vertex_sets for j in range(1, params.s)]
        families.append(_family("copy_differences", 0.0, copies, size, q))
        base_kernel = q_spectrum(h).kernel()
        lifted = []
        for j in range(base_kernel.shape[1]):
            x = np.zeros(size)
            for v, block in enumerate(vmap.vertex_sets):
                x[list(block)] = base_kernel[v, j]
            lifted.append(x)
        families.append(_family("lifted_base_kernel", 0.0, lifted, size, q))

    zero_fams = [f for f in families if f.eigenvalue == 0.0 and f.count]
    zero_rank = int(np.linalg.matrix_rank(np.hstack([f.vectors for f in zero_fams]))) if zero_fams else 0
    return {"families": families, "zero_rank": zero_rank,
            "zero_count": sum(f.count for f in families if f.eigenvalue == 0.0)}
