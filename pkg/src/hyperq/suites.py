"""Randomised cross-checks of every identity and bound, driven by ``verify``.

Each suite draws its own instance from a generator keyed on
``(seed, trial, suite)``, so results do not depend on execution order and
trials can run in worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _config
from .charpoly import char_poly_exact, poly_eval
from .core import build_hypergraph, degree_vector
from .errors import DegenerateSpectrum, HypergraphError, TooFewEdges
from .generate import random_instance
from .io import serialize
from .multigraphs import line_degree_check, line_multigraph
from .power import PowerParams, lift_eigenvector, power_spectrum_comparison
from .spectral import (
    eigen_decompose,
    gram_line_matrix,
    product_spectrum_comparison,
    q_spectrum,
    signless_laplacian,
    spectrum_union_check,
    subgraph_monotonicity_check,
    verify_poly_identity_line,
    verify_poly_identity_regular,
)
from .structure import (
    balance_ratio,
    balanced_bipartition_to_kernel,
    chromatic_bound,
    degree_sum_bounds,
    detect_easy_balanced_patterns,
    diameter_upper_bound,
    distinct_eigenvalues_vs_diameter,
    find_partial_bipartition,
    greedy_min_degree_coloring,
    is_proper_coloring,
    partial_bipartition_from_kernel,
    regularity_report,
    spectral_edge_count,
    zero_eigenpair_valid,
)

POLY_MAX_ORDER = 40


@dataclass
class Outcome:
    status: str  # pass | fail | skip | logged
    detail: str = ""
    instance: str = ""


class Failed(Exception):
    pass


def _require(cond, msg):
    if not cond:
        raise Failed(msg)


def _residuals_ok(m, spec):
    m = np.asarray(m, dtype=float)
    fro = np.linalg.norm(m)
    v, w = spec.eigenvectors, spec.eigenvalues
    res = np.linalg.norm(m @ v - v * w, axis=0)
    ortho = np.abs(v.T @ v - np.eye(len(w))).max() if len(w) else 0.0
    return bool(np.all(res <= spec.tolerances.solve * max(fro, 1.0))), float(ortho)


def suite_factorizations(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, cfg.n_max)
    q = signless_laplacian(h)
    gram_line_matrix(h)
    deg = degree_vector(h)
    _require(np.array_equal(q.sum(axis=1), h.k * deg), "row sums differ from k*d")
    _require(int(np.trace(q)) == h.k * h.m, "trace differs from k*m")
    _require(line_degree_check(h), "line degree identity")
    spec = q_spectrum(h)
    _require(spec.eigenvalues.min() >= -spec.tolerances.zero, "Q not positive semidefinite")
    _require(abs(spec.eigenvalues.sum() - h.k * h.m) <= h.n * spec.tolerances.group, "eigenvalue sum")
    ok, ortho = _residuals_ok(q, spec)
    _require(ok, "eigen residual above tolerance")
    _require(ortho <= 1e-10, f"eigenvectors not orthonormal ({ortho:.2e})")
    line = eigen_decompose(line_multigraph(h).adjacency)
    _require(line.eigenvalues.min() >= -h.k - spec.tolerances.zero, "A_L eigenvalue below -k")
    _require(abs(line.rho - (spec.rho - h.k)) <= spec.tolerances.group, "rho(A_L) != rho(Q) - k")
    return h


def suite_poly(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, min(cfg.n_max, 12), m_max=POLY_MAX_ORDER)
    _require(verify_poly_identity_line(h, max_order=POLY_MAX_ORDER), "line polynomial identity")
    deg = degree_vector(h)
    if np.all(deg == deg[0]):
        _require(verify_poly_identity_regular(h, max_order=POLY_MAX_ORDER), "regular polynomial identity")
    if h.n <= _config.CHARPOLY_MAX_ORDER:
        p = char_poly_exact(signless_laplacian(h))
        _require(p[1] == -h.k * h.m, "q1 != -k*m")
        for lam in q_spectrum(h).eigenvalues:
            scale = sum(abs(c) * max(1.0, abs(lam)) ** (p.degree - i) for i, c in enumerate(p))
            _require(abs(poly_eval([float(c) for c in p], lam)) <= 1e-9 * scale,
                     f"charpoly does not vanish at {lam}")
    return h


def suite_bounds(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, cfg.n_max, connected=True)
    if h is None:
        raise _Skip("no connected instance within 100 draws")
    degree_sum_bounds(h)
    rep = regularity_report(h)
    _require(rep.agree, "regularity conditions disagree")
    col = greedy_min_degree_coloring(h)
    _require(is_proper_coloring(h, col), "greedy coloring improper")
    _require(col.color_count <= chromatic_bound(h), "coloring exceeds floor(rho/k)+1")
    _require(spectral_edge_count(q_spectrum(h), h.k) == h.m, "edge count from spectrum")
    return h


def suite_zero(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, cfg.n_max)
    spec = q_spectrum(h)
    part = partial_bipartition_from_kernel(h)
    _require((part is not None) == (spec.zero_count() > 0), "partition/zero mismatch")
    ker = spec.kernel()
    for j in range(ker.shape[1]):
        _require(zero_eigenpair_valid(h, ker[:, j]), "kernel vector has nonzero edge sum")
    pattern = detect_easy_balanced_patterns(h)
    candidates = [pattern] if pattern is not None else []
    if h.n <= 8:
        found = find_partial_bipartition(h)
        if found is not None:
            try:
                balance_ratio(h, found)
                candidates.append(found)
            except HypergraphError:
                pass
    q = signless_laplacian(h).astype(float)
    for p in candidates:
        x = balanced_bipartition_to_kernel(h, p)
        _require(np.linalg.norm(q @ x) <= 1e-8 * np.linalg.norm(q) * np.linalg.norm(x),
                 "balanced vector not in kernel")
        _require(spec.zero_count() > 0, "balanced partition but no zero eigenvalue")
    return h


def suite_diameter(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, cfg.n_max, connected=True)
    if h is None:
        raise _Skip("no connected instance within 100 draws")
    _require(distinct_eigenvalues_vs_diameter(h).holds, "distinct eigenvalues < D+1")
    try:
        diameter_upper_bound(h)
    except (TooFewEdges, DegenerateSpectrum):
        pass
    return h


def _draw(ctx, rng, *args, **kwargs):
    h = random_instance(rng, *args, **kwargs)
    if h is not None:
        ctx.setdefault("instances", []).append(h)
    return h


def _relabel(h, prefix):
    return build_hypergraph(h.k, [[prefix + t for t in h.edge_tokens(e)] for e in h.edges])


def suite_union(rng, cfg, ctx):
    k = int(rng.choice(cfg.ks))
    g = _draw(ctx, rng, (k,), min(cfg.n_max, 6))
    h = _draw(ctx, rng, (k,), min(cfg.n_max, 6))
    g, h = _relabel(g, "a"), _relabel(h, "b")
    _require(spectrum_union_check(g, h), "union spectrum")
    return g


def suite_product(rng, cfg, ctx):
    k = int(rng.choice(cfg.ks))
    g = _draw(ctx, rng, (k,), min(cfg.n_max, 4))
    h = _draw(ctx, rng, (k,), min(cfg.n_max, 4))
    cmp = product_spectrum_comparison(g, h)
    _require(cmp["contained"], "product sums missing from spectrum")
    _require(cmp["equal"], "product spectrum differs from pairwise sums")
    return g


def suite_monotone(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, cfg.n_max)
    if h.m < 2:
        raise _Skip("needs two edges")
    drop = int(rng.integers(h.m))
    edges = [h.edge_tokens(e) for i, e in enumerate(h.edges) if i != drop]
    sub = build_hypergraph(h.k, edges, vertices=h.vertices)
    _require(subgraph_monotonicity_check(h, sub), "rho increased on deleting an edge")
    one = build_hypergraph(h.k, [h.edge_tokens(h.edges[drop])])
    _require(subgraph_monotonicity_check(h, one), "rho below k")
    return h


def suite_power(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, min(cfg.n_max, 6))
    s = int(rng.integers(1, 3))
    r = h.k * s + int(rng.integers(0, 3))
    params = PowerParams(s, r)
    cmp = power_spectrum_comparison(h, params)
    _require(cmp["matches"], f"power spectrum mismatch for s={s}, r={r}")
    _require(cmp["trace_ok"], "predicted trace != r*m")
    _require(cmp["zero_predicted"] == cmp["zero_observed"],
             f"zero multiplicity {cmp['zero_observed']} != predicted {cmp['zero_predicted']}")
    spec = q_spectrum(h)
    lift_eigenvector(h, params, (spec.eigenvalues[0], spec.eigenvectors[:, 0]))
    return h


def suite_converse(rng, cfg, ctx):
    h = _draw(ctx, rng, cfg.ks, min(cfg.n_max, 8))
    if q_spectrum(h).zero_count() > 0:
        return h
    found = find_partial_bipartition(h)
    if found is not None:
        raise _Logged(f"partially bipartite without eigenvalue 0: {found.as_dict()}", h)
    return h


class _Skip(Exception):
    pass


class _Logged(Exception):
    def __init__(self, msg, h):
        super().__init__(msg)
        self.h = h


SUITES = {
    "factorizations": suite_factorizations,
    "polynomial-identities": suite_poly,
    "bounds": suite_bounds,
    "zero-eigenvalue": suite_zero,
    "diameter": suite_diameter,
    "union-spectrum": suite_union,
    "product-spectrum": suite_product,
    "subgraph-monotonicity": suite_monotone,
    "power-spectrum": suite_power,
    "partial-bipartite-without-zero": suite_converse,
}


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 1
    n_max: int = 8
    ks: tuple = (2, 3)


def run_trial(cfg: VerifyConfig, trial: int) -> dict:
    out = {}
    for j, (name, fn) in enumerate(SUITES.items()):
        rng = np.random.default_rng([cfg.seed, trial, j])
        ctx: dict = {}
        try:
            fn(rng, cfg, ctx)
            out[name] = Outcome("pass")
        except _Skip as exc:
            out[name] = Outcome("skip", str(exc))
        except _Logged as exc:
            out[name] = Outcome("logged", str(exc), serialize(exc.h))
        except (Failed, HypergraphError) as exc:
            inst = "\n".join(serialize(h) for h in ctx.get("instances", []))
            out[name] = Outcome("fail", f"{type(exc).__name__}: {exc}", inst)
    return out


def run_verify(trials: int, seed: int = 1, n_max: int = 8, ks=(2, 3), jobs: int = 1,
               max_reports: int = 10) -> dict:
    cfg = VerifyConfig(seed=seed, n_max=n_max, ks=tuple(ks))
    summary = {name: {"pass": 0, "fail": 0, "skip": 0, "logged": 0, "counterexamples": [], "log": []}
               for name in SUITES}
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_trial, [cfg] * trials, range(trials)))
    else:
        results = [run_trial(cfg, t) for t in range(trials)]
    for t, res in enumerate(results):
        for name, o in res.items():
            entry = summary[name]
            entry[o.status] += 1
            if o.status == "fail" and len(entry["counterexamples"]) < max_reports:
                entry["counterexamples"].append({"trial": t, "detail": o.detail, "instance": o.instance})
            if o.status == "logged" and len(entry["log"]) < max_reports:
                entry["log"].append({"trial": t, "detail": o.detail, "instance": o.instance})
    failures = sum(s["fail"] for s in summary.values())
    return {"seed": seed, "trials": trials, "n_max": n_max, "ks": list(ks),
            "suites": summary if trials else {}, "failures": failures, "ok": failures == 0}
