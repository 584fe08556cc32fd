"""Backend selection for the RK4 hot loop.

The compiled extension is used when it was built; otherwise the pure-Python
stepper is used.  Both are importable explicitly for benchmarking.
"""
from __future__ import annotations

from . import _rk4_py

try:
    from ._ext import _rk4 as _rk4_c
except ImportError:  # extension not built
    _rk4_c = None

BACKENDS = {"python": _rk4_py.rk4_linear}
if _rk4_c is not None:
    BACKENDS["compiled"] = _rk4_c.rk4_linear

BACKEND = "compiled" if _rk4_c is not None else "python"
rk4_linear = BACKENDS[BACKEND]


def get_kernel(backend: str | None = None):
    if backend is None:
        return rk4_linear
    try:
        return BACKENDS[backend]
    except KeyError:
        raise ValueError(f"backend {backend!r} unavailable; have {sorted(BACKENDS)}") from None
