"""Command-line front end.

Exit codes: 0 success, 1 validation or verification failure, 2 I/O or parse
failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__, analytic, observables
from .core import (
    ELECTRON_MASS_G,
    PLANCK_ERG_S,
    SPEED_OF_LIGHT_CM_S,
    SUPERPARTICLE_SIZE_CM,
    DomainError,
    SimulationConfig,
)
from .fileio import (
    ConfigParseError,
    format_kv,
    fmt,
    load_config,
    make_config,
    manifest_text,
    series_to_csv,
    write_text,
)
from .integrator import integrate
from .svg import line_plot
from .verify import report_items, run_checks

SCENARIOS = {
    # T left out: set to h/(M v0^2) so the action increment is h
    "electron": dict(M=ELECTRON_MASS_G, v0=1e5, c=SPEED_OF_LIGHT_CM_S, h=PLANCK_ERG_S, R0=SUPERPARTICLE_SIZE_CM, N=10),
    "unit": dict(M=1.0, v0=1.0, c=10.0, T=1.0, N=10),
}

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


def scenario_config(name: str) -> SimulationConfig:
    try:
        return make_config(**SCENARIOS[name])
    except KeyError:
        raise UsageError(f"unknown scenario {name!r}; available: {', '.join(sorted(SCENARIOS))}") from None


def _config(args) -> tuple[SimulationConfig, str]:
    if args.config and args.scenario:
        raise UsageError("give either --config or --scenario, not both")
    if args.config:
        return load_config(args.config), Path(args.config).name
    return scenario_config(args.scenario or "unit"), f"scenario:{args.scenario or 'unit'}"


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _emit(out: Path, files: dict[str, str], name: str, text: str) -> None:
    files[name] = write_text(out / name, text)


def _finish(out: Path, command: dict, config: SimulationConfig, files: dict[str, str]) -> None:
    write_text(out / "manifest.txt", manifest_text(command, config, files, __version__))


def cmd_simulate(args) -> int:
    config, source = _config(args)
    out = _out_dir(args)
    series = analytic.trajectory_series(config, args.l, args.n_max, args.samples)
    ev = series.event
    numeric = integrate(config, args.l, ev.T_l, config.steps_per_period)
    files: dict[str, str] = {}
    _emit(out, files, "trajectory_analytic.csv", series_to_csv(series))
    _emit(out, files, "trajectory_integrated.csv", series_to_csv(numeric))
    command = {"name": "simulate", "source": source, "l": args.l, "n_max": args.n_max, "samples": args.samples}
    _finish(out, command, config, files)
    print(f"wrote {len(series)} analytic and {len(numeric)} integrated samples to {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    config, source = _config(args)
    results = run_checks(config)
    text = format_kv(report_items(results))
    if args.out:
        out = _out_dir(args)
        files: dict[str, str] = {}
        _emit(out, files, "verify_report.txt", text)
        _finish(out, {"name": "verify", "source": source}, config, files)
    for r in results:
        print(f"{r.status.upper():4}  {r.name:32} measured={fmt(r.measured)} tolerance={fmt(r.tolerance)}")
    if not all(r.passed for r in results):
        print("verification FAILED", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def observables_items(config: SimulationConfig, scenario: str | None) -> list[tuple[str, object]]:
    report = observables.observables_report(config)
    items: list[tuple[str, object]] = list(report.items())
    items.append(("defaulted", ",".join(sorted(config.defaulted)) or "none"))
    if scenario == "electron":
        computed = {"lambda_cm": report.lambda_, "Lambda_cm": report.Lambda, "N_estimate": report.N_estimate}
        for key, quoted in observables.PAPER_ELECTRON.items():
            value = computed[key]
            items.append((f"quoted_{key}", quoted))
            items.append((f"{key}_discrepancy", max(value / quoted, quoted / value) > observables.DISCREPANCY_FACTOR))
            items.append((f"{key}_order_of_magnitude_agreement", observables.within_order_of_magnitude(value, quoted)))
    return items


def cmd_observables(args) -> int:
    config, source = _config(args)
    text = format_kv(observables_items(config, args.scenario))
    sys.stdout.write(text)
    if args.out:
        out = _out_dir(args)
        files: dict[str, str] = {}
        _emit(out, files, "observables.txt", text)
        _finish(out, {"name": "observables", "source": source}, config, files)
    return EXIT_OK


def figure5_curve(config: SimulationConfig, l: int, n_max: int, samples: int):
    """Dimensionless staircase ``(pi t/T_l, pi X/lambda_l)`` over ``n_max`` periods."""
    series = analytic.trajectory_series(config, l, n_max, samples)
    ev = series.event
    return np.pi * series.t / ev.T_l, np.pi * series.component("X") / ev.lambda_l


def cmd_figure5(args) -> int:
    config, source = _config(args)
    out = _out_dir(args)
    x, y = figure5_curve(config, args.l, args.n_max, args.samples)
    csv_text = "pi_t_over_T,pi_X_over_lambda\n" + "".join(f"{fmt(a)},{fmt(b)}\n" for a, b in zip(x, y))
    svg_text = line_plot(
        x, y, title=f"Particle staircase, slot l={args.l}", xlabel="pi t / T_l", ylabel="pi X / lambda_l"
    )
    files: dict[str, str] = {}
    _emit(out, files, "figure5.csv", csv_text)
    _emit(out, files, "figure5.svg", svg_text)
    command = {"name": "figure5", "source": source, "l": args.l, "n_max": args.n_max, "samples": args.samples}
    _finish(out, command, config, files)
    print(f"wrote figure5.csv and figure5.svg ({len(x)} points) to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inerton", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out_required: bool):
        p.add_argument("--config", metavar="PATH", help="key = value config file")
        p.add_argument("--scenario", metavar="NAME", help=f"built-in scenario ({', '.join(sorted(SCENARIOS))})")
        p.add_argument("--out", metavar="DIR", required=out_required, help="output directory")

    p = sub.add_parser("simulate", help="write analytic and integrated trajectory CSVs")
    common(p, True)
    p.add_argument("--l", type=int, default=0, metavar="IDX", help="emission slot")
    p.add_argument("--n-max", type=int, default=1, metavar="K", help="oscillations to stitch")
    p.add_argument("--samples", type=int, default=100, metavar="S", help="samples per period")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run the consistency checks")
    common(p, False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("observables", help="report derived scalar observables")
    common(p, False)
    p.set_defaults(func=cmd_observables)

    p = sub.add_parser("figure5", help="dimensionless staircase curve as CSV and SVG")
    common(p, True)
    p.add_argument("--l", type=int, default=0, metavar="IDX", help="emission slot")
    p.add_argument("--n-max", type=int, default=4, metavar="K", help="oscillations")
    p.add_argument("--samples", type=int, default=200, metavar="S", help="samples per period")
    p.set_defaults(func=cmd_figure5)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
