import pytest

from inerton.core import ELECTRON_MASS_G, PLANCK_ERG_S, SPEED_OF_LIGHT_CM_S, SimulationConfig


@pytest.fixture
def unit_config():
    return SimulationConfig(M=1.0, v0=1.0, c=10.0, T=1.0, N=10)


@pytest.fixture
def electron_config():
    M, v0 = ELECTRON_MASS_G, 1e5
    return SimulationConfig(M=M, v0=v0, c=SPEED_OF_LIGHT_CM_S, T=PLANCK_ERG_S / (M * v0 * v0), N=10)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
