"""Runtime switches and default numerical tolerances.

Set ``HYPERQ_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

_FLAG = "HYPERQ_DISABLE_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


try:
    import numba  # noqa: F401

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and _numba_requested()

# Relative off-diagonal Frobenius norm at which rotation sweeps stop.
TOL_SOLVE = 1e-12
# Multiplied by max(1, rho) to obtain absolute thresholds.
TOL_GROUP = 1e-8
TOL_ZERO = 1e-8
MAX_SWEEPS = 100
CHARPOLY_MAX_ORDER = 16


def configure(tol_zero: float | None = None, tol_group: float | None = None) -> None:
    """Change the process-wide relative tolerances (used by the CLI flags)."""
    global TOL_ZERO, TOL_GROUP
    if tol_zero is not None:
        TOL_ZERO = float(tol_zero)
    if tol_group is not None:
        TOL_GROUP = float(tol_group)


@dataclass(frozen=True)
class Tolerances:
    """Tolerances a spectrum was computed and grouped under.

    ``group`` and ``zero`` are absolute values, already scaled by
    ``max(1, rho)``.
    """

    solve: float
    group: float
    zero: float

    @classmethod
    def scaled(cls, rho: float, solve: float | None = None, group: float | None = None,
               zero: float | None = None) -> "Tolerances":
        solve = TOL_SOLVE if solve is None else solve
        group = TOL_GROUP if group is None else group
        zero = TOL_ZERO if zero is None else zero
        scale = max(1.0, abs(rho))
        return cls(solve=solve, group=group * scale, zero=zero * scale)

    def as_dict(self) -> dict:
        return {"solve": self.solve, "group": self.group, "zero": self.zero}
