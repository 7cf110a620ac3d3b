"""Hot loops: cyclic Jacobi rotations and all-pairs BFS.

Each kernel exists twice, a numba ``@njit`` version and a numpy version with
identical arithmetic. The public names (``jacobi_sweeps``, ``all_pairs_bfs``)
point at the numba versions unless numba is missing or disabled through
``HYPERQ_DISABLE_NUMBA``.
"""

import numpy as np

from ._config import USE_NUMBA, NUMBA_AVAILABLE

if NUMBA_AVAILABLE:
    from numba import njit
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _off_norm_np(a):
    # Summed directly: ||A||^2 - ||diag||^2 cancels down to ~1e-8 ||A||.
    off = a - np.diag(np.diag(a))
    return np.sqrt(np.sum(off * off))


# Beyond this |theta|, theta**2 would overflow; tan ~ 1/(2 theta) instead.
_BIG_THETA = 1e150


def _rotation(app, aqq, apq):
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > _BIG_THETA:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    return c, t * c


def jacobi_sweeps_numpy(a, tol, max_sweeps):
    """Diagonalise symmetric ``a`` in place with cyclic Jacobi sweeps.

    Returns ``(v, sweeps, off)`` where ``v`` accumulates the rotations, so
    that on convergence ``a`` is diagonal and ``a_in = v @ diag(a) @ v.T``.
    ``sweeps`` is ``-1`` when the cap was hit.
    """
    n = a.shape[0]
    v = np.eye(n)
    fro = np.sqrt(np.sum(a * a))
    target = tol * fro
    off = _off_norm_np(a)
    if off <= target:
        return v, 0, off
    for sweep in range(1, max_sweeps + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                if sweep > 4 and abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                c, s = _rotation(a[p, p], a[q, q], apq)
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        off = _off_norm_np(a)
        if off <= target:
            return v, sweep, off
    return v, -1, off


@njit(cache=True)
def jacobi_sweeps_numba(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n)
    fro = 0.0
    off2 = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
            if i != j:
                off2 += a[i, j] * a[i, j]
    target = tol * np.sqrt(fro)
    if np.sqrt(off2) <= target:
        return v, 0, np.sqrt(off2)
    for sweep in range(1, max_sweeps + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                g = 100.0 * abs(apq)
                if sweep > 4 and abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > _BIG_THETA:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        off2 = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off2 += a[i, j] * a[i, j]
        if np.sqrt(off2) <= target:
            return v, sweep, np.sqrt(off2)
    return v, -1, np.sqrt(off2)


def all_pairs_bfs_numpy(adj):
    """Hop distances on the 0/1 adjacency ``adj``; ``-1`` marks unreachable."""
    n = adj.shape[0]
    adj = adj.astype(bool)
    dist = np.full((n, n), -1, dtype=np.int64)
    for src in range(n):
        seen = np.zeros(n, dtype=bool)
        frontier = np.zeros(n, dtype=bool)
        frontier[src] = True
        seen[src] = True
        level = 0
        while frontier.any():
            dist[src, frontier] = level
            frontier = adj[frontier].any(axis=0) & ~seen
            seen |= frontier
            level += 1
    return dist


@njit(cache=True)
def all_pairs_bfs_numba(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for src in range(n):
        dist[src, src] = 0
        head = 0
        tail = 1
        queue[0] = src
        while head < tail:
            u = queue[head]
            head += 1
            for w in range(n):
                if adj[u, w] and dist[src, w] < 0:
                    dist[src, w] = dist[src, u] + 1
                    queue[tail] = w
                    tail += 1
    return dist


if USE_NUMBA:
    jacobi_sweeps = jacobi_sweeps_numba
    all_pairs_bfs = all_pairs_bfs_numba
else:
    jacobi_sweeps = jacobi_sweeps_numpy
    all_pairs_bfs = all_pairs_bfs_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"
