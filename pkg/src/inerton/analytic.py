"""Closed-form solutions of the particle/inerton system.

The single-period evaluators are valid for local time ``0 <= t_l <= T_l`` only
and raise :class:`~inerton.core.DomainError` outside it.  Later oscillations
are reached by stitching periods together (:func:`trajectory_series`).
"""
from __future__ import annotations

import math

import numpy as np

from .core import DomainError, EmissionEvent, SimulationConfig, TimeSeries, emission_schedule

PARALLEL_SPEED_FACTOR = 1.5 * math.pi


def _check_local_time(ev: EmissionEvent, t_l: float) -> None:
    if not 0.0 <= t_l <= ev.T_l:
        raise DomainError(
            f"t_l={t_l!r} outside [0, T_l] = [0, {ev.T_l!r}]; map through quasicyclic_time first"
        )


def _check_index(n: int) -> None:
    if n < 1:
        raise DomainError(f"oscillation index n={n} must be >= 1")


def inerton_perp_position(ev: EmissionEvent, t_l: float) -> float:
    _check_local_time(ev, t_l)
    return ev.Lambda_l / math.pi * math.sin(math.pi * t_l / ev.T_l)


def inerton_perp_velocity(ev: EmissionEvent, t_l: float) -> float:
    _check_local_time(ev, t_l)
    return ev.c * math.cos(math.pi * t_l / ev.T_l)


def particle_velocity(ev: EmissionEvent, t_l: float) -> float:
    _check_local_time(ev, t_l)
    return ev.v0l * (1.0 - math.sin(math.pi * t_l / ev.T_l))


def particle_position(ev: EmissionEvent, t_l: float) -> float:
    """Distance travelled since emission, ``v0l*t_l + (lambda_l/pi)(cos(pi t_l/T_l) - 1)``."""
    _check_local_time(ev, t_l)
    return ev.v0l * t_l + ev.lambda_l / math.pi * (math.cos(math.pi * t_l / ev.T_l) - 1.0)


def period_displacement(ev: EmissionEvent) -> float:
    """Particle path over one full period: ``v0l*T_l*(1 - 2/pi)``."""
    return particle_position(ev, ev.T_l)


def stated_period_displacement(ev: EmissionEvent) -> float:
    """The alternative per-period path ``3*pi*v0l*T_l/2`` that fixes the drift speed.

    Disagrees with :func:`period_displacement`; both are reported by the
    verification suite.
    """
    return PARALLEL_SPEED_FACTOR * ev.v0l * ev.T_l


def quasicyclic_time(t_l: float, n: int, ev: EmissionEvent) -> float:
    _check_local_time(ev, t_l)
    _check_index(n)
    return t_l + 2 * (n - 1) * ev.T_l


def parallel_window_start(ev: EmissionEvent, n: int) -> float:
    """Start of the n-th longitudinal drift window, in particle time.

    Uses the delay ``T_l*l/(2N)``, which differs from ``ev.delta_t_l``
    (``T*l/(2N)``) for ``l > 0``.
    """
    _check_index(n)
    delay = ev.T_l * ev.l / (2 * ev.N)
    return (2 * n - 1) * delay + (n - 1) * ev.T_l


def parallel_velocity(ev: EmissionEvent, n: int, t: float) -> float:
    start = parallel_window_start(ev, n)
    # Heaviside with H(0) = 1 on both window edges
    if start <= t <= start + ev.T_l:
        return PARALLEL_SPEED_FACTOR * ev.v0l
    return 0.0


def parallel_displacement(ev: EmissionEvent, n_max: int, t: float) -> float:
    """Longitudinal drift accumulated over windows ``1..n_max`` by particle time ``t``."""
    _check_index(n_max)
    total = 0.0
    for n in range(1, n_max + 1):
        start = parallel_window_start(ev, n)
        total += PARALLEL_SPEED_FACTOR * ev.v0l * min(max(t - start, 0.0), ev.T_l)
    return total


def _local_states(ev: EmissionEvent, t_l: np.ndarray) -> np.ndarray:
    phase = np.pi * t_l / ev.T_l
    s, c = np.sin(phase), np.cos(phase)
    out = np.empty((len(t_l), 5))
    out[:, 0] = ev.v0l * t_l + ev.lambda_l / np.pi * (c - 1.0)
    out[:, 1] = ev.v0l * (1.0 - s)
    out[:, 2] = ev.Lambda_l / np.pi * s
    out[:, 3] = ev.c * c
    out[:, 4] = 0.0
    return out


def trajectory_series(
    config: SimulationConfig, l: int, n_max: int, samples_per_period: int
) -> TimeSeries:
    """Sample ``n_max`` consecutive oscillations of slot ``l``.

    The time column is elapsed time since the first emission,
    ``(n-1)*T_l + t_l``, sampled ``samples_per_period`` times per period.
    X carries the accumulated displacement of previous periods so it is
    continuous across boundaries.  ``x_par`` stays at its emission value 0;
    the longitudinal drift is given by :func:`parallel_displacement`.
    """
    _check_index(n_max)
    if samples_per_period < 2:
        raise DomainError(f"samples_per_period={samples_per_period} must be >= 2")
    ev = emission_schedule(config, l)
    dt = ev.T_l / samples_per_period
    local = np.arange(samples_per_period + 1) * dt
    local[-1] = ev.T_l
    one = _local_states(ev, local)
    step = one[-1, 0]

    total = n_max * samples_per_period + 1
    t = np.arange(total) * dt
    t_l = np.empty(total)
    states = np.empty((total, 5))
    t_l[0] = 0.0
    states[0] = one[0]
    for n in range(n_max):
        sl = slice(n * samples_per_period + 1, (n + 1) * samples_per_period + 1)
        t_l[sl] = local[1:]
        states[sl] = one[1:]
        states[sl, 0] += n * step
    return TimeSeries("analytic", t, t_l, states, ev, config)
