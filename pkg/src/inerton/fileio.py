"""Text formats: config and report files (``key = value``), trajectory CSV,
and file digests.

Floats are written with ``repr``, the shortest string that parses back to
the same double, so every file round-trips exactly and is byte-stable.
"""
from __future__ import annotations

import csv
import hashlib
import io
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .core import (
    PLANCK_ERG_S,
    STATE_COMPONENTS,
    SUPERPARTICLE_SIZE_CM,
    SimulationConfig,
    TimeSeries,
)

CSV_HEADER = ("t", *STATE_COMPONENTS, "provenance")

# config key -> (field name, type); fields absent here are not settable
CONFIG_KEYS = {
    "M_g": ("M", float),
    "v0_cm_per_s": ("v0", float),
    "c_cm_per_s": ("c", float),
    "T_s": ("T", float),
    "N": ("N", int),
    "R0_cm": ("R0", float),
    "h_erg_s": ("h", float),
    "steps_per_period": ("steps_per_period", int),
    "n_oscillations": ("n_oscillations", int),
}
REQUIRED_KEYS = ("M_g", "v0_cm_per_s", "c_cm_per_s")


class ConfigParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<config>"):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def parse_kv(text: str, source: str = "<config>") -> dict[str, tuple[str, int]]:
    """Parse ``key = value`` lines; returns ``{key: (raw value, line number)}``."""
    out: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigParseError(f"expected 'key = value', got {raw.strip()!r}", lineno, source)
        if key in out:
            raise ConfigParseError(f"duplicate key {key!r}", lineno, source)
        out[key] = (value, lineno)
    return out


def format_kv(items: Iterable[tuple[str, object]]) -> str:
    return "".join(f"{k} = {fmt(v)}\n" for k, v in items)


def config_from_text(text: str, source: str = "<config>") -> SimulationConfig:
    """Build a config from ``key = value`` text.

    ``R0_cm``, ``h_erg_s``, ``N`` and the numerical controls fall back to
    defaults; a missing ``T_s`` is set to ``h/(M v0**2)``.  Defaulted keys are
    recorded in ``config.defaulted``.  Invariant violations raise
    :class:`~inerton.core.DomainError`.
    """
    entries = parse_kv(text, source)
    values: dict[str, object] = {}
    for key, (raw, lineno) in entries.items():
        if key not in CONFIG_KEYS:
            raise ConfigParseError(f"unknown key {key!r}; known: {', '.join(CONFIG_KEYS)}", lineno, source)
        name, kind = CONFIG_KEYS[key]
        try:
            values[name] = kind(raw)
        except ValueError:
            raise ConfigParseError(f"{key}: cannot parse {raw!r} as {kind.__name__}", lineno, source) from None
    missing = [k for k in REQUIRED_KEYS if CONFIG_KEYS[k][0] not in values]
    if missing:
        raise ConfigParseError(f"missing required keys: {', '.join(missing)}", None, source)
    return make_config(**values)


def make_config(**values) -> SimulationConfig:
    defaulted = set()
    for name, default in (("R0", SUPERPARTICLE_SIZE_CM), ("h", PLANCK_ERG_S)):
        if name not in values:
            values[name] = default
            defaulted.add(name)
    for name in ("N", "steps_per_period", "n_oscillations"):
        if name not in values:
            defaulted.add(name)
    if "T" not in values:
        values["T"] = values["h"] / (values["M"] * values["v0"] ** 2)
        defaulted.add("T")
    return SimulationConfig(**values, defaulted=frozenset(defaulted))


def load_config(path: str | Path) -> SimulationConfig:
    path = Path(path)
    return config_from_text(path.read_text(encoding="utf-8"), str(path))


def config_items(config: SimulationConfig) -> list[tuple[str, object]]:
    return [(key, getattr(config, name)) for key, (name, _) in CONFIG_KEYS.items()]


def series_to_csv(series: TimeSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for t, row in zip(series.t, series.states):
        writer.writerow([fmt(t), *map(fmt, row), series.provenance])
    return buf.getvalue()


def read_series_csv(path: str | Path) -> tuple[str, np.ndarray, np.ndarray]:
    """Return ``(provenance, t, states)`` from a trajectory CSV."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header!r}")
        rows = list(reader)
    provenances = {r[-1] for r in rows}
    if len(provenances) != 1:
        raise ValueError(f"expected one provenance per file, got {sorted(provenances)}")
    data = np.array([[float(v) for v in r[:-1]] for r in rows])
    return provenances.pop(), data[:, 0], data[:, 1:]


def write_text(path: Path, text: str) -> str:
    """Write ``text`` with LF line endings; return its SHA-256 hex digest."""
    data = text.encode("utf-8")
    path.write_bytes(data)
    return hashlib.sha256(data).hexdigest()


def sha256_file(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def manifest_text(command: Mapping[str, object], config: SimulationConfig, files: Mapping[str, str], version: str) -> str:
    items: list[tuple[str, object]] = [("tool_version", version)]
    items += [(f"command.{k}", v) for k, v in command.items()]
    items += [(f"config.{k}", v) for k, v in config_items(config)]
    items.append(("config.defaulted", ",".join(sorted(config.defaulted)) or "none"))
    for name in sorted(files):
        items.append((f"file.{name}.sha256", files[name]))
    return format_kv(items)
