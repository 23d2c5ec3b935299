"""Backend selection for the hot kernels.

The compiled extension is preferred when present; set LIESPECTRA_PURE=1 to
force the pure-Python twin (used by the benchmark and as a safety net on
platforms without a C toolchain).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("LIESPECTRA_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "pure"

# int64 safety margin for the compiled backend; the pure twin has no limit.
_COMPILED_COORD_BUDGET = 5000


def _fits_compiled(lam, n):
    return n <= 9 and sum(abs(x) for x in lam) + n <= _COMPILED_COORD_BUDGET


def _pick(lam, n):
    if _impl is not _kernels_py and not _fits_compiled(lam, n):
        return _kernels_py  # exact arbitrary-precision path for huge inputs
    return _impl


def dominant_subdominants(n, alpha, posroots, adj, det, lam):
    return _pick(lam, n).dominant_subdominants(n, alpha, posroots, adj, det, lam)


def weyl_orbit(n, alpha, start):
    return _pick(start, n).weyl_orbit(n, alpha, start)


def orbit_expand(n, alpha, reps, mults):
    worst = max(reps, key=lambda r: sum(abs(x) for x in r), default=(0,) * n)
    return _pick(worst, n).orbit_expand(n, alpha, reps, mults)


def freudenthal(n, alpha, posroots, pairings, dhalf, adj, det, sform, den, lam):
    return _pick(lam, n).freudenthal(
        n, alpha, posroots, pairings, dhalf, adj, det, sform, den, lam
    )
