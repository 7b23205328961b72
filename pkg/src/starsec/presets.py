"""Scenario/sweep pairs reproducing the published figure set.

Parameters come from the figure captions.  Grid ranges and, where a
caption only says "different values", the ``n_ref`` series are our own
choices (201 points per axis unless the axis is an open interval).
"""

from __future__ import annotations

import math

from .channel import Geometry
from .errors import ConfigError
from .rates import SurfaceConfig
from .scenario import Scenario
from .sweep import SweepSpec, linear_grid

INV_SQRT2 = 1.0 / math.sqrt(2.0)

RATE_OUTPUTS = ("rate:all",)
SECRECY_OUTPUTS = ("secrecy:all",)

# 10..210 m in 1 m steps hits d_sd = d_sr exactly for every preset.
DISTANCE_GRID = linear_grid(10.0, 210.0, 201)
POWER_GRID = linear_grid(-10.0, 40.0, 201)
ZETA_GRID = linear_grid(0.0, 1.0, 201)
# K lives in the open interval (0, 1).
SPLIT_GRID = linear_grid(0.005, 0.995, 199)


def _rate_geometry(d_sr, d_sd):
    return Geometry(d_sr=d_sr, d_sd_r=d_sd, d_sd_t=d_sd, d_v=10.0)


def _secrecy_geometry(d_sr, d_sd=100.0, d_se_r=110.0, d_se_t=120.0):
    return Geometry(d_sr=d_sr, d_sd_r=d_sd, d_sd_t=d_sd, d_se_r=d_se_r, d_se_t=d_se_t,
                    d_v=10.0, d_v_e=12.0)


def _fig3(zeta, series):
    scen = Scenario(geometry=_rate_geometry(100.0, 100.0),
                    surface=SurfaceConfig(n_ref=series[0], split_k=0.5, zeta=zeta),
                    p_dbm=20.0)
    return scen, SweepSpec("d_sd", DISTANCE_GRID, RATE_OUTPUTS, series)


def _fig6(p_dbm):
    scen = Scenario(geometry=_rate_geometry(60.0, 80.0),
                    surface=SurfaceConfig(n_ref=1000.0, split_k=0.5, zeta=0.5), p_dbm=p_dbm)
    return scen, SweepSpec("n_ref", linear_grid(0.0, 2000.0, 201), RATE_OUTPUTS)


def _fig8(n_ref, zeta):
    scen = Scenario(geometry=_secrecy_geometry(80.0),
                    surface=SurfaceConfig(n_ref=n_ref, split_k=0.5, zeta=zeta), p_dbm=10.0)
    return scen, SweepSpec("p_dbm", POWER_GRID, SECRECY_OUTPUTS)


def _fig9(p_dbm, series):
    scen = Scenario(geometry=_secrecy_geometry(80.0),
                    surface=SurfaceConfig(n_ref=series[0], split_k=0.5, zeta=0.5), p_dbm=p_dbm)
    return scen, SweepSpec("d_sd", DISTANCE_GRID, SECRECY_OUTPUTS, series)


def _fig12(p_dbm):
    scen = Scenario(geometry=_secrecy_geometry(90.0),
                    surface=SurfaceConfig(n_ref=500.0, split_k=0.5, zeta=0.5), p_dbm=p_dbm)
    return scen, SweepSpec("n_ref", linear_grid(0.0, 1000.0, 201), SECRECY_OUTPUTS)


def _fig4():
    scen = Scenario(geometry=_rate_geometry(60.0, 80.0),
                    surface=SurfaceConfig(n_ref=1000.0, split_k=0.5, zeta=0.5), p_dbm=20.0)
    return scen, SweepSpec("p_dbm", POWER_GRID, RATE_OUTPUTS)


def _fig5():
    scen = Scenario(geometry=_rate_geometry(60.0, 80.0),
                    surface=SurfaceConfig(n_ref=500.0, split_k=0.5, zeta=INV_SQRT2), p_dbm=20.0)
    return scen, SweepSpec("zeta", ZETA_GRID, RATE_OUTPUTS, (500.0, 1500.0))


def _fig7():
    scen = Scenario(geometry=_rate_geometry(60.0, 80.0),
                    surface=SurfaceConfig(n_ref=100.0, split_k=0.5, zeta=0.5), p_dbm=20.0)
    return scen, SweepSpec("split_k", SPLIT_GRID, RATE_OUTPUTS, (100.0, 1000.0))


def _fig10():
    scen = Scenario(geometry=_secrecy_geometry(80.0, d_sd=85.0, d_se_r=85.0, d_se_t=85.0),
                    surface=SurfaceConfig(n_ref=100.0, split_k=0.5, zeta=0.5), p_dbm=10.0)
    return scen, SweepSpec("d_se", DISTANCE_GRID, SECRECY_OUTPUTS, (100.0, 500.0))


def _fig11():
    scen = Scenario(geometry=_secrecy_geometry(80.0),
                    surface=SurfaceConfig(n_ref=100.0, split_k=0.5, zeta=INV_SQRT2), p_dbm=10.0)
    # Same series as fig5; the two figures are discussed as a pair.
    return scen, SweepSpec("zeta", ZETA_GRID, SECRECY_OUTPUTS, (500.0, 1500.0))


def _fig13():
    scen = Scenario(geometry=_secrecy_geometry(90.0),
                    surface=SurfaceConfig(n_ref=100.0, split_k=0.5, zeta=0.5), p_dbm=10.0)
    return scen, SweepSpec("split_k", SPLIT_GRID, SECRECY_OUTPUTS, (100.0, 500.0))


_PRESETS = {
    "fig3a": lambda: _fig3(INV_SQRT2, (50.0, 150.0)),
    "fig3b": lambda: _fig3(0.8, (500.0, 1500.0)),
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6a": lambda: _fig6(10.0),
    "fig6b": lambda: _fig6(20.0),
    "fig7": _fig7,
    "fig8a": lambda: _fig8(100.0, INV_SQRT2),
    "fig8b": lambda: _fig8(1000.0, 0.5),
    "fig9a": lambda: _fig9(0.0, (100.0, 300.0)),
    "fig9b": lambda: _fig9(-10.0, (300.0, 600.0)),
    "fig10": _fig10,
    "fig11": _fig11,
    "fig12a": lambda: _fig12(-10.0),
    "fig12b": lambda: _fig12(5.0),
    "fig13": _fig13,
}

PRESET_NAMES = tuple(_PRESETS)


def preset(name):
    """``(Scenario, SweepSpec)`` for a figure name such as ``"fig3a"``."""
    try:
        factory = _PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; expected one of {', '.join(PRESET_NAMES)}") from None
    return factory()
