import pytest

from solfdtd.analytic import WaveParams, soliton_field
from solfdtd.gfdtd import SchemeParams
from solfdtd.grid import make_grid
from solfdtd.nonlinearity import point_defect_profile, uniform_profile
from solfdtd.stencil import GhostPolicy


@pytest.fixture
def grid():
    return make_grid(-10.0, 10.0, 200, 0.01)


@pytest.fixture
def params():
    return WaveParams(beta=-0.5, omega=1.0, phi=1.0, w=2.0, g_background=5.0)


@pytest.fixture
def defect_params():
    return WaveParams(beta=-0.5, omega=1.0, phi=1.0, w=2.0, g_background=0.05)


@pytest.fixture
def scheme():
    return SchemeParams(m_terms=1)


@pytest.fixture
def profile(grid, params):
    return uniform_profile(grid, params.g_background)


@pytest.fixture
def defect_profile(grid):
    return point_defect_profile(grid, [0.0], 0.5, 0.05)


@pytest.fixture
def policy(params):
    return GhostPolicy.analytic(params)


@pytest.fixture
def soliton0(grid, params):
    return soliton_field(grid, params, 0.0)


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance outcome; printed in the terminal summary."""

    def record(name, passed, detail):
        ACCEPTANCE_RESULTS[name] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0][1:])):
        passed, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
