"""Seeded random k-graphs: m distinct k-subsets of {1..n}, uniformly."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .core import Hypergraph, build_hypergraph, is_connected
from .errors import TooManyEdges

_ENUMERATE_LIMIT = 200_000


def rng_for(seed, trial=None) -> np.random.Generator:
    """Generator keyed on (seed, trial) so trials do not depend on run order."""
    if trial is None:
        return np.random.default_rng(seed)
    return np.random.default_rng([int(seed), int(trial)])


def random_edges(k: int, n: int, m: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    total = comb(n, k)
    if m > total:
        raise TooManyEdges(f"only {total} distinct {k}-subsets of {n} vertices, asked for {m}")
    if total <= _ENUMERATE_LIMIT:
        pool = list(itertools.combinations(range(1, n + 1), k))
        picks = rng.choice(total, size=m, replace=False)
        return [pool[i] for i in picks]
    chosen: dict[tuple[int, ...], None] = {}
    while len(chosen) < m:
        e = tuple(sorted(int(v) + 1 for v in rng.choice(n, size=k, replace=False)))
        chosen.setdefault(e, None)
    return list(chosen)


def random_hypergraph(k: int, n: int, m: int, seed=None, rng=None) -> Hypergraph:
    rng = rng_for(seed) if rng is None else rng
    return build_hypergraph(k, random_edges(k, n, m, rng))


def random_instance(rng: np.random.Generator, ks=(2, 3), n_max: int = 8,
                    m_max: int | None = None, connected: bool = False,
                    attempts: int = 100) -> Hypergraph | None:
    """Draw k, n and m, then a hypergraph; None if ``connected`` was not met in time."""
    for _ in range(attempts):
        k = int(rng.choice(ks))
        n = int(rng.integers(k, max(k, n_max) + 1))
        cap = comb(n, k) if m_max is None else min(comb(n, k), m_max)
        m = int(rng.integers(1, cap + 1))
        h = random_hypergraph(k, n, m, rng=rng)
        if not connected or is_connected(h):
            return h
    return None
