import numpy as np
import pytest
from hypothesis import given, strategies as st

from inerton.analytic import trajectory_series
from inerton.core import DomainError, SimulationConfig
from inerton.fileio import (
    CSV_HEADER,
    ConfigParseError,
    config_from_text,
    config_items,
    fmt,
    format_kv,
    parse_kv,
    read_series_csv,
    series_to_csv,
)
from inerton.integrator import integrate

UNIT_TEXT = """\
# unit scenario
M_g = 1
v0_cm_per_s = 1   # trailing comment
c_cm_per_s = 10
T_s = 1
N = 10
R0_cm = 1e-28
h_erg_s = 6.626e-27
"""


def test_parse_config():
    cfg = config_from_text(UNIT_TEXT)
    assert cfg == SimulationConfig(M=1, v0=1, c=10, T=1, N=10)
    assert cfg.defaulted == {"steps_per_period", "n_oscillations"}


def test_missing_R0_is_defaulted_and_flagged():
    text = "\n".join(l for l in UNIT_TEXT.splitlines() if not l.startswith("R0"))
    cfg = config_from_text(text)
    assert cfg.R0 == 1e-28
    assert "R0" in cfg.defaulted


def test_missing_period_is_calibrated():
    cfg = config_from_text("M_g = 2\nv0_cm_per_s = 3\nc_cm_per_s = 30\nh_erg_s = 18\n")
    assert cfg.T == 1.0
    assert "T" in cfg.defaulted


@pytest.mark.parametrize(
    "text, line",
    [
        ("M_g = 1\nv0_cm_per_s\n", 2),
        ("M_g = 1\n\n# x\nspeed = 3\n", 4),
        ("M_g = 1\nM_g = 2\n", 2),
        ("M_g = one\n", 1),
        ("N = 2.5\n", 1),
    ],
)
def test_parse_errors_carry_line_number(text, line):
    with pytest.raises(ConfigParseError) as info:
        config_from_text(text, "cfg.txt")
    assert info.value.line == line
    assert f"cfg.txt:{line}:" in str(info.value)


def test_missing_required_key():
    with pytest.raises(ConfigParseError, match="c_cm_per_s"):
        config_from_text("M_g = 1\nv0_cm_per_s = 1\n")


def test_invalid_physics_is_domain_error():
    with pytest.raises(DomainError, match="v0 < c"):
        config_from_text(UNIT_TEXT.replace("c_cm_per_s = 10", "c_cm_per_s = 1"))


def test_config_round_trip():
    cfg = SimulationConfig(M=9.109e-28, v0=1e5, c=2.998e10, T=7.27e-10, N=7, steps_per_period=123)
    assert config_from_text(format_kv(config_items(cfg))) == cfg


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_format_round_trips(x):
    assert float(fmt(x)) == x


def test_kv_format():
    assert format_kv([("a", 1.5), ("b", True), ("c", "x")]) == "a = 1.5\nb = true\nc = x\n"
    assert parse_kv("a = 1.5\n") == {"a": ("1.5", 1)}


@pytest.mark.parametrize("make", ["analytic", "integrated"])
def test_csv_round_trip(tmp_path, make):
    cfg = SimulationConfig(M=1, v0=1, c=10, T=1, N=10)
    s = trajectory_series(cfg, 2, 3, 17) if make == "analytic" else integrate(cfg, 2, 0.4, 33)
    text = series_to_csv(s)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert "\r" not in text
    path = tmp_path / "s.csv"
    path.write_text(text)
    prov, t, states = read_series_csv(path)
    assert prov == make
    assert np.array_equal(t, s.t)
    assert np.array_equal(states, s.states)
