"""Particle/inerton hidden-dynamics model: closed-form trajectories, an RK4
oracle, and the derived wave-mechanics observables."""
from .core import (
    DomainError,
    EmissionEvent,
    NumericalError,
    SimulationConfig,
    SystemState,
    TimeSeries,
    emission_schedule,
    rotate_so3_x,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainError",
    "EmissionEvent",
    "NumericalError",
    "SimulationConfig",
    "SystemState",
    "TimeSeries",
    "emission_schedule",
    "rotate_so3_x",
]
