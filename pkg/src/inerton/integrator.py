"""Fixed-step RK4 integration of the coupled equations, used as an oracle
for the closed-form solutions in :mod:`inerton.analytic`.

State vectors are ordered ``(X, Xdot, x_perp, xdot_perp, x_par)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    STATE_COMPONENTS,
    DomainError,
    EmissionEvent,
    NumericalError,
    SimulationConfig,
    SystemState,
    TimeSeries,
    emission_schedule,
)
from .kernels import get_kernel


class SeriesMismatchError(ValueError):
    """Two series cannot be compared sample by sample."""


@dataclass(frozen=True)
class ErrorReport:
    max_abs_error: dict[str, float]
    max_rel_error: dict[str, float]
    first_integral_drift: float
    step_count: int
    provenance: tuple[str, str]

    @property
    def worst_rel_error(self) -> float:
        return max(self.max_rel_error[k] for k in ("X", "Xdot", "x_perp", "xdot_perp"))


def coupling(ev: EmissionEvent) -> tuple[float, float]:
    """Coefficients ``(pi/T_l)(v0l/c)`` and ``(pi/T_l)(c/v0l)`` of the two equations."""
    w = math.pi / ev.T_l
    return w * (ev.v0l / ev.c), w * (ev.c / ev.v0l)


def rhs(ev: EmissionEvent, s: SystemState) -> tuple[float, float, float, float, float]:
    a, b = coupling(ev)
    return (s.Xdot, -a * s.xdot_perp, s.xdot_perp, b * (s.Xdot - ev.v0l), 0.0)


def initial_state(ev: EmissionEvent) -> SystemState:
    return SystemState(t_l=0.0, X=0.0, Xdot=ev.v0l, x_perp=0.0, xdot_perp=ev.c, x_par=0.0)


def integrate(
    config: SimulationConfig, l: int, t_end: float, steps: int, *, backend: str | None = None
) -> TimeSeries:
    """Integrate slot ``l`` from emission to ``t_end`` (at most one period ``T_l``).

    Deterministic: identical inputs give bit-identical output for a given
    backend.  ``backend`` picks ``"compiled"`` or ``"python"``; default is
    whichever was selected at import.
    """
    ev = emission_schedule(config, l)
    if steps < 2:
        raise DomainError(f"steps={steps} must be >= 2")
    if not 0.0 < t_end <= ev.T_l:
        raise DomainError(f"t_end={t_end!r} outside (0, T_l] = (0, {ev.T_l!r}]")
    a, b = coupling(ev)
    h = t_end / steps
    y0 = initial_state(ev).as_vector()
    out, bad = get_kernel(backend)(a, b, ev.v0l, y0, h, steps)
    if bad >= 0:
        raise NumericalError("non-finite state during integration", bad)
    t = np.arange(steps + 1) * h
    t[-1] = t_end
    return TimeSeries("integrated", t, t.copy(), np.asarray(out), ev, config)


def first_integral(series: TimeSeries) -> np.ndarray:
    """``Xdot + (pi/T_l)(v0l/c) x_perp``, constant (= v0l) along exact solutions."""
    a, _ = coupling(series.event)
    return series.component("Xdot") + a * series.component("x_perp")


def first_integral_drift(series: TimeSeries) -> float:
    v0l = series.event.v0l
    return float(np.max(np.abs(first_integral(series) - v0l)) / v0l)


def compare_series(a: TimeSeries, b: TimeSeries) -> ErrorReport:
    """Componentwise deviation of ``b`` from ``a``.

    Relative errors divide by the component's largest magnitude over ``a``
    (or 1 when that component is identically zero).  The reported drift is
    the worse of the two series.
    """
    if len(a) != len(b) or not np.array_equal(a.t, b.t):
        raise SeriesMismatchError("series have different sample grids")
    if a.event != b.event or a.config != b.config:
        raise SeriesMismatchError("series were produced from different parameters")
    diff = np.abs(a.states - b.states)
    abs_err = diff.max(axis=0)
    scale = np.abs(a.states).max(axis=0)
    scale[scale == 0.0] = 1.0
    rel_err = abs_err / scale
    return ErrorReport(
        max_abs_error=dict(zip(STATE_COMPONENTS, map(float, abs_err))),
        max_rel_error=dict(zip(STATE_COMPONENTS, map(float, rel_err))),
        first_integral_drift=max(first_integral_drift(a), first_integral_drift(b)),
        step_count=len(a) - 1,
        provenance=(a.provenance, b.provenance),
    )


def oracle_error(config: SimulationConfig, l: int, steps: int, *, backend: str | None = None) -> ErrorReport:
    """Compare one integrated period of slot ``l`` against the closed form."""
    from .analytic import trajectory_series

    exact = trajectory_series(config, l, 1, steps)
    numeric = integrate(config, l, exact.event.T_l, steps, backend=backend)
    return compare_series(exact, numeric)


def convergence_study(config: SimulationConfig, l: int = 0, base_steps: int = 16, levels: int = 3) -> list[tuple[int, float, float]]:
    """Step-halving study: ``(steps, error, ratio to previous level)`` per level.

    The error is the worst max-abs error over all components, each scaled by
    the component's magnitude.  The first level has ratio ``nan``.
    """
    rows: list[tuple[int, float, float]] = []
    prev = math.nan
    for k in range(levels):
        steps = base_steps * 2**k
        err = oracle_error(config, l, steps).worst_rel_error
        rows.append((steps, err, prev / err if k else math.nan))
        prev = err
    return rows
