"""JSON-ready documents for the ``spectrum``, ``analyze`` and ``power`` commands."""

from __future__ import annotations

import math

import numpy as np

from .charpoly import char_poly_exact
from .core import Hypergraph, components, degrees, diameter, induced_component, is_connected
from .errors import DegenerateSpectrum, HypergraphError, OrderLimitExceeded, TooFewEdges
from .io import serialize
from .power import PowerParams, power, power_spectrum_comparison, predict_power_spectrum
from .spectral import Spectrum, perron, q_spectrum, signless_laplacian
from .structure import (
    balanced_bipartition_to_kernel,
    chromatic_bound,
    degree_sum_bounds,
    detect_easy_balanced_patterns,
    diameter_upper_bound,
    distinct_eigenvalues_vs_diameter,
    greedy_min_degree_coloring,
    is_proper_coloring,
    partial_bipartition_from_kernel,
    regularity_report,
    spectral_edge_count,
    zero_eigenpair_valid,
)

SKIPPED = "skipped: requires connectivity"


def num(x):
    """Round to 12 significant digits; integral results come back as int."""
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    y = float(f"{x:.12g}")
    if y == int(y):
        return int(y)
    return y


def spectrum_doc(spec: Spectrum) -> dict:
    return {
        "eigenvalues": [num(v) for v in spec.values()],
        "multiplicities": spec.multiplicities(),
        "rho": num(spec.rho),
        "tolerances": spec.tolerances.as_dict(),
    }


def spectrum_report(h: Hypergraph, exact_charpoly: bool = False) -> dict:
    doc = {"k": h.k, "n": h.n, "m": h.m}
    doc.update(spectrum_doc(q_spectrum(h)))
    if exact_charpoly:
        try:
            doc["charpoly"] = list(char_poly_exact(signless_laplacian(h)).coefficients)
        except OrderLimitExceeded as exc:
            doc["charpoly"] = f"skipped: {exc}"
    return doc


class _Checks:
    """Collects named assertions; an exception inside a check counts as failure."""

    def __init__(self):
        self.items = []

    def run(self, name, fn):
        try:
            value = fn()
        except HypergraphError as exc:
            self.items.append({"name": name, "held": False, "detail": f"{type(exc).__name__}: {exc}"})
            return None
        self.items.append({"name": name, "held": True})
        return value

    def record(self, name, held, detail=None):
        item = {"name": name, "held": bool(held)}
        if detail is not None:
            item["detail"] = detail
        self.items.append(item)

    @property
    def first_failure(self):
        return next((c["name"] for c in self.items if not c["held"]), None)


def analysis_report(h: Hypergraph) -> dict:
    """Run the whole structural battery on one hypergraph.

    Sections that need connectivity are replaced by a skip marker when H is
    disconnected. ``assertions`` lists every check with its verdict.
    """
    checks = _Checks()
    spec = q_spectrum(h)
    tols = spec.tolerances.as_dict()
    prof = degrees(h)
    connected = is_connected(h)
    doc = {
        "hypergraph": {"k": h.k, "n": h.n, "m": h.m},
        "degrees": {
            "per_vertex": prof.per_vertex,
            "max": prof.max,
            "min": prof.min,
            "average": str(prof.average),
        },
        "connected": connected,
        "diameter": num(diameter(h)),
        "spectrum": spectrum_doc(spec),
        "rho": {"value": num(spec.rho), "tolerances": tols},
    }

    edge_count = checks.run("edge-count-from-spectrum", lambda: spectral_edge_count(spec, h.k))
    if edge_count is not None:
        checks.record("edge-count-matches", edge_count == h.m)
    doc["edge_count_from_spectrum"] = edge_count

    if connected:
        p = perron(h)
        checks.record("perron-vector-positive", bool(np.all(p.vector > 0)))
        b = checks.run("degree-sum-bounds", lambda: degree_sum_bounds(h))
        doc["bounds"] = None if b is None else {
            "edge_degree_sum": [b.lower, b.upper],
            "k_avg_degree": str(b.k_avg_degree),
            "k_max_degree": b.k_max_degree,
            "tolerances": tols,
        }
        reg = checks.run("regularity-equivalence", lambda: regularity_report(h))
        doc["regularity"] = None if reg is None else {
            "regular": reg.is_regular,
            "rho_equals_kd": reg.rho_equals_kd,
            "rho_equals_kDelta": reg.rho_equals_kdelta,
            "principal_uniform": reg.principal_uniform,
            "tolerances": tols,
        }
        dv = checks.run("distinct-eigenvalues-vs-diameter", lambda: distinct_eigenvalues_vs_diameter(h))
        if dv is not None:
            checks.record("distinct-at-least-diameter-plus-one", dv.holds)
            doc["distinct_vs_diameter"] = {"distinct": dv.distinct, "diameter": dv.diameter,
                                           "holds": dv.holds, "tolerances": tols}
        try:
            bound = diameter_upper_bound(h)
            checks.record("diameter-upper-bound", True)
            doc["diameter_upper_bound"] = {"bound": bound, "diameter": int(diameter(h)), "tolerances": tols}
        except (TooFewEdges, DegenerateSpectrum) as exc:
            doc["diameter_upper_bound"] = f"undefined: {exc}"
        except HypergraphError as exc:
            checks.record("diameter-upper-bound", False, str(exc))
            doc["diameter_upper_bound"] = None
    else:
        for key in ("bounds", "regularity", "distinct_vs_diameter", "diameter_upper_bound"):
            doc[key] = SKIPPED

    coloring = greedy_min_degree_coloring(h)
    checks.record("coloring-proper", is_proper_coloring(h, coloring))
    if connected:
        bound = chromatic_bound(h)
        checks.record("coloring-within-bound", coloring.color_count <= bound)
        doc["coloring"] = {"colors": coloring.color_count, "bound": bound,
                           "assignment": coloring.assignment, "tolerances": tols}
    else:
        per = []
        for comp in components(h):
            sub = induced_component(h, comp) if len(comp) > 1 else None
            if sub is None or sub.m == 0:
                continue
            col = greedy_min_degree_coloring(sub)
            bound = chromatic_bound(sub)
            checks.record("coloring-within-bound", col.color_count <= bound)
            per.append({"vertices": list(sub.vertices), "colors": col.color_count, "bound": bound})
        doc["coloring"] = {"colors": coloring.color_count, "assignment": coloring.assignment,
                           "components": per, "tolerances": tols}

    zero = {"has_zero": spec.zero_count() > 0, "multiplicity": spec.zero_count(), "tolerances": tols}
    part = checks.run("kernel-partial-bipartition", lambda: partial_bipartition_from_kernel(h))
    zero["partition"] = None if part is None else part.as_dict()
    pattern = detect_easy_balanced_patterns(h)
    zero["balanced_pattern"] = None if pattern is None else pattern.as_dict()
    if pattern is not None:
        x = checks.run("balanced-pattern-kernel", lambda: balanced_bipartition_to_kernel(h, pattern))
        if x is not None:
            checks.record("balanced-pattern-implies-zero", zero["has_zero"])
    ker = spec.kernel()
    if ker.shape[1]:
        checks.record("kernel-vector-sums-vanish",
                      all(zero_eigenpair_valid(h, ker[:, j]) for j in range(ker.shape[1])))
    doc["zero_eigenvalue"] = zero

    doc["assertions"] = checks.items
    doc["ok"] = checks.first_failure is None
    doc["first_failure"] = checks.first_failure
    return doc


def power_report(h: Hypergraph, params: PowerParams, verify: bool = False) -> dict:
    powered, _ = power(h, params)
    predicted = predict_power_spectrum(q_spectrum(h), h.k, h.n, h.m, params)
    doc = {
        "params": {"s": params.s, "r": params.r},
        "constructedFile": serialize(powered),
        "predictedSpectrum": spectrum_doc(predicted),
        "verified": None,
    }
    if verify:
        cmp = power_spectrum_comparison(h, params)
        doc["verified"] = bool(cmp["matches"] and cmp["trace_ok"])
        doc["observedSpectrum"] = spectrum_doc(q_spectrum(powered))
        doc["zeroMultiplicity"] = {"predicted": cmp["zero_predicted"], "observed": cmp["zero_observed"]}
    return doc
