"""Achievable and secrecy rates of STAR-RIS, RIS and decode-and-forward links.

The library works on linear-scale channel gains (:class:`ChannelGains`)
derived from a planar geometry and the UMi path-loss model.  Powers are in
watts and rates in bit/s/Hz unless a name says otherwise (``p_dbm``).
"""

__version__ = "0.1.0"

from .channel import (ChannelGains, Geometry, NoiseParams, PathLossParams,
                      RadioProfile, db_to_linear, dbm_to_watt, linear_to_db,
                      noise_power_dbm, pathloss_db, resolve_gains, watt_to_dbm)
from .errors import (ConfigError, InfeasibleTargetError, ModelDomainError,
                     ModelValidityError, RelayNotBeneficialError, StarSecError,
                     ZoneDisabledError)
from .power import (hd_power_split, optimal_p2_fd, optimal_split_fd,
                    required_power_constants, required_power_fd, solve_p2_fd,
                    stable_quadratic_roots)
from .presets import PRESET_NAMES, preset
from .rates import (PowerSplit, RateReport, SurfaceConfig, rate_fd_df,
                    rate_fd_df_opt, rate_hd_df, rate_report, rate_ris, rate_siso,
                    rate_star_ref, rate_star_tra, rate_star_zone)
from .scenario import Scenario, dump_scenario, load_scenario, scenario_from_dict
from .secrecy import (SecrecyReport, secrecy_fd_df, secrecy_hd_df, secrecy_report,
                      secrecy_ris, secrecy_siso, secrecy_star)
from .sweep import SweepSpec, emit, parse_csv, run_sweep
from .thresholds import (ThresholdResult, min_elements_ris_vs_hd,
                         min_elements_star_vs_hd, min_elements_vs_fd)

__all__ = [
    'ChannelGains',
    'ConfigError',
    'Geometry',
    'InfeasibleTargetError',
    'ModelDomainError',
    'ModelValidityError',
    'NoiseParams',
    'PRESET_NAMES',
    'PathLossParams',
    'PowerSplit',
    'RadioProfile',
    'RateReport',
    'RelayNotBeneficialError',
    'Scenario',
    'SecrecyReport',
    'StarSecError',
    'SurfaceConfig',
    'SweepSpec',
    'ThresholdResult',
    'ZoneDisabledError',
    'db_to_linear',
    'dbm_to_watt',
    'dump_scenario',
    'emit',
    'hd_power_split',
    'linear_to_db',
    'load_scenario',
    'min_elements_ris_vs_hd',
    'min_elements_star_vs_hd',
    'min_elements_vs_fd',
    'noise_power_dbm',
    'optimal_p2_fd',
    'optimal_split_fd',
    'parse_csv',
    'pathloss_db',
    'preset',
    'rate_fd_df',
    'rate_fd_df_opt',
    'rate_hd_df',
    'rate_report',
    'rate_ris',
    'rate_siso',
    'rate_star_ref',
    'rate_star_tra',
    'rate_star_zone',
    'required_power_constants',
    'required_power_fd',
    'resolve_gains',
    'run_sweep',
    'scenario_from_dict',
    'secrecy_fd_df',
    'secrecy_hd_df',
    'secrecy_report',
    'secrecy_ris',
    'secrecy_siso',
    'secrecy_star',
    'solve_p2_fd',
    'stable_quadratic_roots',
    'watt_to_dbm',
]
