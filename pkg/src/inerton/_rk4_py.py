"""Pure-Python RK4 stepper for the linear particle/inerton system.

Operation order mirrors ``_ext/_rk4.pyx`` so both backends round identically.
"""
from __future__ import annotations

import math

import numpy as np


def rk4_linear(a: float, b: float, v0l: float, y0, h: float, steps: int):
    """Integrate ``X' = V, V' = -a*u, x' = u, u' = b*(V - v0l), z' = 0``.

    Returns ``(out, bad_step)``: ``out`` has shape ``(steps + 1, 5)``;
    ``bad_step`` is the first step yielding a non-finite state, or -1.
    """
    out = np.empty((steps + 1, 5))
    X, V, x, u, z = (float(c) for c in y0)
    out[0] = (X, V, x, u, z)
    h2 = 0.5 * h
    h6 = h / 6.0
    for i in range(steps):
        k1X = V
        k1V = -a * u
        k1x = u
        k1u = b * (V - v0l)

        V2 = V + h2 * k1V
        u2 = u + h2 * k1u
        k2X = V2
        k2V = -a * u2
        k2x = u2
        k2u = b * (V2 - v0l)

        V3 = V + h2 * k2V
        u3 = u + h2 * k2u
        k3X = V3
        k3V = -a * u3
        k3x = u3
        k3u = b * (V3 - v0l)

        V4 = V + h * k3V
        u4 = u + h * k3u
        k4X = V4
        k4V = -a * u4
        k4x = u4
        k4u = b * (V4 - v0l)

        X = X + h6 * (k1X + 2.0 * k2X + 2.0 * k3X + k4X)
        V = V + h6 * (k1V + 2.0 * k2V + 2.0 * k3V + k4V)
        x = x + h6 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        u = u + h6 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        if not (math.isfinite(X) and math.isfinite(V) and math.isfinite(x) and math.isfinite(u)):
            return out[: i + 1], i + 1
        out[i + 1] = (X, V, x, u, z)
    return out, -1
