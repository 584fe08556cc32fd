"""Time the compiled and pure-Python RK4 backends on one integrated period.

    python benchmarks/bench_rk4.py [--steps 10000 100000] [--repeat 5]
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from inerton import kernels
from inerton.core import SimulationConfig
from inerton.integrator import integrate


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, nargs="+", default=[1_000, 10_000, 100_000])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    cfg = SimulationConfig(M=1.0, v0=1.0, c=10.0, T=1.0, N=10)
    backends = sorted(kernels.BACKENDS)
    print(f"default backend: {kernels.BACKEND}")
    print(f"{'steps':>8} " + " ".join(f"{b + ' [ms]':>16}" for b in backends) + f" {'speedup':>9} {'identical':>9}")
    for steps in args.steps:
        best = {}
        for b in backends:
            timer = timeit.Timer(lambda: integrate(cfg, 0, 1.0, steps, backend=b))
            best[b] = min(timer.repeat(repeat=args.repeat, number=1)) * 1e3
        same = ""
        speedup = ""
        if len(backends) == 2:
            a = integrate(cfg, 0, 1.0, steps, backend="compiled").states
            p = integrate(cfg, 0, 1.0, steps, backend="python").states
            same = str(np.array_equal(a, p))
            speedup = f"{best['python'] / best['compiled']:.1f}x"
        print(f"{steps:>8} " + " ".join(f"{best[b]:>16.3f}" for b in backends) + f" {speedup:>9} {same:>9}")


if __name__ == "__main__":
    main()
