# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled RK4 stepper; same contract as ``inerton._rk4_py.rk4_linear``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport isfinite

cnp.import_array()


def rk4_linear(double a, double b, double v0l, y0, double h, Py_ssize_t steps):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] arr = np.empty((steps + 1, 5))
    cdef double[:, ::1] out = arr
    cdef double X = y0[0], V = y0[1], x = y0[2], u = y0[3], z = y0[4]
    cdef double h2 = 0.5 * h
    cdef double h6 = h / 6.0
    cdef double k1X, k1V, k1x, k1u, k2X, k2V, k2x, k2u
    cdef double k3X, k3V, k3x, k3u, k4X, k4V, k4x, k4u
    cdef double V2, u2, V3, u3, V4, u4
    cdef Py_ssize_t i
    out[0, 0] = X; out[0, 1] = V; out[0, 2] = x; out[0, 3] = u; out[0, 4] = z
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
        if not (isfinite(X) and isfinite(V) and isfinite(x) and isfinite(u)):
            return arr[: i + 1], i + 1
        out[i + 1, 0] = X; out[i + 1, 1] = V; out[i + 1, 2] = x
        out[i + 1, 3] = u; out[i + 1, 4] = z
    return arr, -1
