import pytest

from solfdtd.config import SimulationConfig, format_config, parse_config
from solfdtd.errors import ParseError, ValidationError
from solfdtd.gfdtd import ANALYTIC_HALF_SHIFT, SELF_START


def test_empty_is_paper_preset():
    cfg = parse_config("")
    assert cfg == SimulationConfig()
    g = cfg.grid_spec()
    assert (g.y_min, g.y_max, g.n_y, g.dz) == (-10, 10, 200, 0.01)
    p = cfg.wave_params()
    assert (p.beta, p.omega, p.phi, p.w, p.g_background) == (-0.5, 1, 1, 2, 5)
    assert cfg.scheme.m_terms == 1 and cfg.run.z_end == 1
    assert cfg.bootstrap_method() == ANALYTIC_HALF_SHIFT


def test_single_defect_preset():
    cfg = parse_config("defects.locations = 0.0\ndefects.g_defect = 0.5\nphysics.g_background = 0.05")
    prof = cfg.profile()
    assert prof.defect_indices == [99]
    assert prof.g[99] == 0.5 and prof.background == 0.05
    assert cfg.bootstrap_method() == SELF_START


def test_comments_lists_and_bools():
    cfg = parse_config(
        """
        # a comment
        defects.locations = -2, 0, 2   # trailing comment
        oracle.enabled = true
        field.t_list = 0 1.5 3
        defects.g_background_override = none
        """
    )
    assert cfg.defects.locations == (-2.0, 0.0, 2.0)
    assert cfg.oracle.enabled is True
    assert cfg.field.t_list == (0.0, 1.5, 3.0)
    assert cfg.defects.g_background_override is None


def test_override_background():
    cfg = parse_config("defects.g_background_override = 0.1")
    assert cfg.profile().background == 0.1
    assert cfg.wave_params().g_background == 5.0
    assert cfg.bootstrap_method() == SELF_START


@pytest.mark.parametrize(
    "text, line",
    [
        ("grid.nope = 3", 1),
        ("\n\nbogus.key = 1", 3),
        ("grid.n_y 200", 1),
        ("grid.n_y = two hundred", 1),
        ("grid.n_y = 200\ngrid.n_y = 100", 2),
        ("oracle.enabled = maybe", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_config(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text, match",
    [
        ("grid.n_y = 3", "n_y"),
        ("physics.beta = 0", "beta"),
        ("physics.w = -1", "w"),
        ("defects.locations = 12", "defect"),
        ("run.z_end = 0.015", "multiple"),
        ("scheme.bootstrap = magic", "bootstrap"),
        ("scheme.ghost_policy = periodic", "ghost"),
        ("scheme.m_terms = -1", "m_terms"),
        ("run.snapshot_every = 0", "snapshot_every"),
    ],
)
def test_validation_errors(text, match):
    with pytest.raises(ValidationError, match=match):
        parse_config(text)


def test_format_round_trip():
    cfg = parse_config("defects.locations = -1.5, 2.25\nfield.snapshot = some/path.csv\noracle.enabled = 1")
    assert parse_config(format_config(cfg)) == cfg
