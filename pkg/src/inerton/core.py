"""Domain types, the per-slot emission schedule and the x-axis rotation.

Units are CGS throughout (cm, g, s, erg).  Every type is a frozen dataclass;
nothing in this module mutates state after construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Literal

import numpy as np

# CGS constant set used by the built-in scenarios.
ELECTRON_MASS_G = 9.109e-28
SPEED_OF_LIGHT_CM_S = 2.998e10
PLANCK_ERG_S = 6.626e-27
SUPERPARTICLE_SIZE_CM = 1e-28

STATE_COMPONENTS = ("X", "Xdot", "x_perp", "xdot_perp", "x_par")


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class NumericalError(ArithmeticError):
    """Integration produced a non-finite state."""

    def __init__(self, message: str, step: int):
        super().__init__(f"{message} (step {step})")
        self.step = step


@dataclass(frozen=True)
class SimulationConfig:
    M: float
    v0: float
    c: float
    T: float
    N: int = 10
    R0: float = SUPERPARTICLE_SIZE_CM
    h: float = PLANCK_ERG_S
    steps_per_period: int = 10_000
    n_oscillations: int = 1
    # names of fields that were filled from defaults rather than supplied
    defaulted: frozenset[str] = field(default=frozenset(), compare=False)

    def __post_init__(self) -> None:
        for name in ("M", "v0", "c", "T", "R0", "h"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"{name} must be a positive finite number, got {value!r}")
        if not self.v0 < self.c:
            raise DomainError(f"v0 < c violated: v0={self.v0!r}, c={self.c!r}")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"N >= 1 (integer) violated: N={self.N!r}")
        if int(self.steps_per_period) != self.steps_per_period or self.steps_per_period < 2:
            raise DomainError(f"steps_per_period >= 2 violated: {self.steps_per_period!r}")
        if int(self.n_oscillations) != self.n_oscillations or self.n_oscillations < 1:
            raise DomainError(f"n_oscillations >= 1 violated: {self.n_oscillations!r}")


@dataclass(frozen=True)
class EmissionEvent:
    """Derived parameters of the inerton emitted in slot ``l``."""

    l: int
    delta_t_l: float
    T_l: float
    v0l: float
    m_l: float
    lambda_l: float
    Lambda_l: float
    c: float
    N: int


@dataclass(frozen=True)
class SystemState:
    t_l: float
    X: float
    Xdot: float
    x_perp: float
    xdot_perp: float
    x_par: float

    def as_vector(self) -> np.ndarray:
        return np.array([self.X, self.Xdot, self.x_perp, self.xdot_perp, self.x_par])


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Uniformly sampled trajectory of the particle and one inerton.

    ``states`` has one row per sample, columns ordered as
    ``STATE_COMPONENTS``; ``t_l`` is the local (per-oscillation) time of
    each sample.
    """

    provenance: Literal["analytic", "integrated"]
    t: np.ndarray
    t_l: np.ndarray
    states: np.ndarray
    event: EmissionEvent
    config: SimulationConfig

    def __post_init__(self) -> None:
        if self.provenance not in ("analytic", "integrated"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.states.shape != (len(self.t), len(STATE_COMPONENTS)):
            raise ValueError(f"states shape {self.states.shape} does not match {len(self.t)} samples")
        if len(self.t) > 1 and not np.all(np.diff(self.t) > 0):
            raise ValueError("sample times must be strictly increasing")
        for arr in (self.t, self.t_l, self.states):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.t)

    def component(self, name: str) -> np.ndarray:
        return self.states[:, STATE_COMPONENTS.index(name)]

    @property
    def samples(self) -> Iterator[tuple[float, SystemState]]:
        for t, t_l, row in zip(self.t, self.t_l, self.states):
            yield float(t), SystemState(float(t_l), *map(float, row))


def emission_schedule(config: SimulationConfig, l: int) -> EmissionEvent:
    """Per-slot parameters of the ``l``-th emission, ``0 <= l <= N-1``.

    The delay uses the base half-period, ``T*l/(2N)``; note that
    :func:`inerton.analytic.parallel_window_start` uses ``T_l*l/(2N)``.
    """
    N = config.N
    if not 0 <= l <= N - 1:
        raise DomainError(f"slot index l={l} outside [0, N-1] = [0, {N - 1}]")
    v0l = config.v0 * (1.0 - math.sin(math.pi * l / (2 * N)))
    T_l = config.T * (1.0 - l / N)
    return EmissionEvent(
        l=l,
        delta_t_l=config.T * l / (2 * N),
        T_l=T_l,
        v0l=v0l,
        m_l=config.M * v0l * v0l / (config.c * config.c),
        lambda_l=v0l * T_l,
        Lambda_l=config.c * T_l,
        c=config.c,
        N=N,
    )


def rotate_so3_x(angle: float, v) -> np.ndarray:
    """Rotate ``v`` about the first axis by ``angle`` (rows (1,0,0),(0,c,s),(0,-s,c))."""
    c, s = math.cos(angle), math.sin(angle)
    x, y, z = (float(a) for a in v)
    return np.array([x, c * y + s * z, -s * y + c * z])
