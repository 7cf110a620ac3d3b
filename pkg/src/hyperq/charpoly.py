"""Exact integer characteristic polynomials and polynomial helpers.

Polynomials are tuples of Python ints, highest degree first, so
``(1, -2, 0)`` is ``x**2 - 2x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from ._config import CHARPOLY_MAX_ORDER
from .errors import InternalConsistency, OrderLimitExceeded


@dataclass(frozen=True)
class CharPoly:
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return poly_eval(self.coefficients, x)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]


def _as_int_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.dtype.kind == "f":
        if not np.all(a == np.round(a)):
            raise ValueError("matrix entries must be integers")
    elif a.dtype.kind not in "iuO":
        raise ValueError("matrix entries must be integers")
    out = np.empty(a.shape, dtype=object)
    for idx, val in np.ndenumerate(a):
        out[idx] = int(val)
    return out


def char_poly_exact(m, max_order: int = CHARPOLY_MAX_ORDER) -> CharPoly:
    """Coefficients of det(xI - M) by the Faddeev-LeVerrier recurrence.

    Every division is checked to be exact; a remainder means the input was
    not an integer matrix after all.
    """
    a = _as_int_matrix(m)
    n = a.shape[0]
    if n > max_order:
        raise OrderLimitExceeded(f"order {n} exceeds the exact limit {max_order}")
    coeffs = [1]
    eye = np.zeros((n, n), dtype=object)
    np.fill_diagonal(eye, 1)
    mk = np.zeros((n, n), dtype=object)
    for step in range(1, n + 1):
        mk = a.dot(mk) + coeffs[-1] * eye
        tr = int(np.trace(a.dot(mk)))
        q, r = divmod(-tr, step)
        if r:
            raise InternalConsistency(f"inexact division at step {step}")
        coeffs.append(q)
    return CharPoly(tuple(coeffs))


def poly_mul(p, q) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_pow(p, e: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def poly_shift(p, c: int) -> tuple[int, ...]:
    """Coefficients of p(x + c)."""
    n = len(p) - 1
    out = [0] * (n + 1)
    for i, a in enumerate(p):
        d = n - i
        for j in range(d + 1):
            # a * C(d, j) * c**(d-j) * x**j
            out[n - j] += a * comb(d, j) * c ** (d - j)
    return tuple(out)


def poly_eval(p, x):
    acc = 0
    for a in p:
        acc = acc * x + a
    return acc


def poly_from_roots(roots) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for r in roots:
        out = poly_mul(out, (1, -r))
    return out
