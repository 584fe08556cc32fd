"""Effective oscillator of the particle and the wave-mechanics layer built on it.

The particle, viewed from the centre of mass of the particle + cloud system,
is a harmonic oscillator with Hamiltonian ``p**2/2M + M w**2 X**2/2`` and
``w = pi/T``.  That Hamiltonian comes from a Lagrangian in which the
transverse cloud velocity is shifted by ``pi*sqrt(M/m)*X/T``; the shift
decouples the particle and is not executed here, only its end product is.

Free motion gives the action ``M v0 X - E t``, which equals the phase
``h (X/lambda - nu t)`` of a plane wave once ``lambda = h/(M v0)`` and
``nu = E/h``.  :func:`wave_equation_residual` checks that this wave solves the
wave equation with phase speed ``v0/2``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy import integrate

from .core import DomainError, SimulationConfig
from .observables import de_broglie_wavelength

HJ_STEP_FRACTION = 1e-7
QUAD_TOL_FACTOR = 1e-12


@dataclass(frozen=True)
class OscillatorParams:
    M: float
    T: float
    E: float

    @property
    def omega(self) -> float:
        return math.pi / self.T

    @property
    def amplitude(self) -> float:
        return math.sqrt(2.0 * self.E / self.M) / self.omega

    @classmethod
    def from_config(cls, config: SimulationConfig) -> "OscillatorParams":
        return cls(M=config.M, T=config.T, E=0.5 * config.M * config.v0**2)


def effective_hamiltonian(p: float, X: float, params: OscillatorParams) -> float:
    w = params.omega
    return p * p / (2.0 * params.M) + params.M * w * w * X * X / 2.0


def shortened_action(X: float, params: OscillatorParams) -> float:
    """``int_0^X sqrt(2M(E - M w**2 x**2/2)) dx`` by adaptive quadrature.

    With ``x = A sin(theta)`` the integrand becomes ``sqrt(2ME) A cos(theta)**2``,
    which has no square-root singularity at the turning points ``|x| = A``.
    """
    A = params.amplitude
    if abs(X) > A:
        raise DomainError(f"|X|={abs(X)!r} exceeds the amplitude {A!r} (classically forbidden)")
    theta = math.asin(X / A)
    scale = math.sqrt(2.0 * params.M * params.E) * A
    value, _ = integrate.quad(
        lambda th: math.cos(th) ** 2,
        0.0,
        theta,
        epsabs=QUAD_TOL_FACTOR * params.E * params.T / scale if scale else 0.0,
        epsrel=1e-13,
    )
    return scale * value


def hj_residual(X: float, params: OscillatorParams) -> float:
    """``(dS/dX)**2/2M + M w**2 X**2/2 - E`` with a centred-difference ``dS/dX``."""
    A = params.amplitude
    step = HJ_STEP_FRACTION * A
    if abs(X) + step > A:
        raise DomainError(f"|X|={abs(X)!r} too close to the turning point {A!r}")
    dS = (shortened_action(X + step, params) - shortened_action(X - step, params)) / (2.0 * step)
    return effective_hamiltonian(dS, X, params) - params.E


def oscillator_position(t: float, params: OscillatorParams) -> float:
    return params.amplitude * math.sin(params.omega * t)


def oscillator_velocity(t: float, params: OscillatorParams) -> float:
    return params.amplitude * params.omega * math.cos(params.omega * t)


def action_angle_J(params: OscillatorParams) -> float:
    """Action increment over the period ``2T``: ``E * 2T``."""
    return params.E * (2.0 * params.T)


def loop_action_quadrature(params: OscillatorParams) -> float:
    """Closed-loop action evaluated numerically, ``2 (S(A) - S(-A))``."""
    A = params.amplitude
    return 2.0 * (shortened_action(A, params) - shortened_action(-A, params))


def particle_action(X: float, t: float, config: SimulationConfig) -> float:
    E = 0.5 * config.M * config.v0**2
    return config.M * config.v0 * X - E * t


def wave_frequency(config: SimulationConfig) -> float:
    return 0.5 * config.M * config.v0**2 / config.h


def wave_action(X: float, t: float, config: SimulationConfig) -> float:
    lam = de_broglie_wavelength(config)
    return config.h * (X / lam - wave_frequency(config) * t)


def wave_function(X: float, t: float, config: SimulationConfig) -> complex:
    """Unit-amplitude plane wave ``exp(2 pi i S_wave/h)``."""
    return cmath.exp(2j * math.pi * wave_action(X, t, config) / config.h)


def wave_equation_residual(
    X: float,
    t: float,
    config: SimulationConfig,
    wavelength: float | None = None,
    frequency: float | None = None,
) -> float:
    """Normalised residual of ``psi_XX - psi_tt/(v0/2)**2`` for the plane wave.

    ``wavelength`` and ``frequency`` override the de Broglie values, which is
    how the check is shown to detect an inconsistent pair.
    """
    lam = de_broglie_wavelength(config) if wavelength is None else wavelength
    nu = wave_frequency(config) if frequency is None else frequency
    k = 2.0 * math.pi / lam
    w = 2.0 * math.pi * nu
    psi = cmath.exp(1j * (k * X - w * t))
    psi_xx = -k * k * psi
    psi_tt = -w * w * psi
    speed = config.v0 / 2.0
    return abs(psi_xx - psi_tt / (speed * speed)) / abs(k * k * psi)
