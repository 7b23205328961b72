"""Scenario description and its YAML file format.

A scenario file is a YAML mapping; every key is optional except
``geometry`` (``d_sr``, ``d_sd_r``, ``d_sd_t``).  Units: metres, dBm for
``p_dbm``, dB for ``beta_li_db`` and ``noise_figure_db``, dBi for antenna
gains, GHz for the carrier, Hz for the bandwidth.  See ``README.md`` for the
full schema; :meth:`Scenario.to_dict` produces a file that loads back to the
same scenario.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace

import yaml

from .channel import (ZONES, Geometry, NoiseParams,
                      RadioProfile, dbm_to_watt, resolve_gains)
from .errors import ConfigError
from .rates import SurfaceConfig
from .secrecy import EAVESDROPPER_MODELS


@dataclass(frozen=True)
class Scenario:
    geometry: Geometry
    surface: SurfaceConfig = field(default_factory=SurfaceConfig)
    p_dbm: float = 20.0
    radio: RadioProfile = field(default_factory=RadioProfile)
    noise: NoiseParams = field(default_factory=NoiseParams)
    beta_li_db: float = -130.0
    df_zone: str = "reflection"
    eavesdropper: str = "informed"

    def __post_init__(self):
        if not math.isfinite(self.p_dbm):
            raise ConfigError(f"p_dbm must be finite, got {self.p_dbm!r}")
        if not math.isfinite(self.beta_li_db) or self.beta_li_db > 0:
            raise ConfigError(f"beta_li_db must be a finite attenuation (<= 0 dB), got {self.beta_li_db!r}")
        if self.df_zone not in ZONES:
            raise ConfigError(f"df_zone must be one of {ZONES}, got {self.df_zone!r}")
        if self.eavesdropper not in EAVESDROPPER_MODELS:
            raise ConfigError(
                f"eavesdropper must be one of {EAVESDROPPER_MODELS}, got {self.eavesdropper!r}")

    @property
    def p_watt(self):
        return dbm_to_watt(self.p_dbm)

    def gains(self):
        return resolve_gains(self.geometry, self.radio, self.noise,
                             beta_li_db=self.beta_li_db, df_zone=self.df_zone)

    def with_geometry(self, **changes):
        try:
            return replace(self, geometry=replace(self.geometry, **changes))
        except TypeError as err:
            raise ConfigError(str(err)) from None

    def with_surface(self, **changes):
        try:
            return replace(self, surface=replace(self.surface, **changes))
        except TypeError as err:
            raise ConfigError(str(err)) from None

    def to_dict(self):
        radio = {"links": {name: asdict(getattr(self.radio, name)) for name in RadioProfile.LINKS}}
        return {
            "p_dbm": self.p_dbm,
            "beta_li_db": self.beta_li_db,
            "df_zone": self.df_zone,
            "eavesdropper": self.eavesdropper,
            "geometry": asdict(self.geometry),
            "surface": asdict(self.surface),
            "noise": asdict(self.noise),
            "radio": radio,
        }

    @classmethod
    def from_dict(cls, data):
        return scenario_from_dict(data)


_TOP_KEYS = {"p_dbm", "beta_li_db", "df_zone", "eavesdropper", "geometry",
             "surface", "noise", "radio", "sweep"}
_GEOMETRY_KEYS = {"d_sr", "d_sd_r", "d_sd_t", "d_se_r", "d_se_t", "d_v", "d_v_e"}
_SURFACE_KEYS = {"n_ref", "split_k", "zeta", "alpha_r", "alpha_t", "alpha"}
_NOISE_KEYS = {"bandwidth_hz", "noise_figure_db"}
_LINK_KEYS = {"carrier_frequency_ghz", "tx_gain_dbi", "rx_gain_dbi", "los"}


def _mapping(value, where):
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ConfigError(f"{where} must be a mapping, got {type(value).__name__}")
    return value


def _check_keys(data, allowed, where):
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(sorted(map(str, unknown)))}")


def _number(value, where):
    # PyYAML reads "1e7" as a string, so accept numeric strings too.
    if isinstance(value, bool):
        raise ConfigError(f"{where} must be a number, got {value!r}")
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{where} must be a number, got {value!r}") from None
    if math.isnan(out):
        raise ConfigError(f"{where} must not be NaN")
    return out


def _numbers(data, where, optional=()):
    return {key: (None if value is None and key in optional else _number(value, f"{where}.{key}"))
            for key, value in data.items()}


def _radio_from_dict(data):
    data = _mapping(data, "radio")
    _check_keys(data, {"carrier_frequency_ghz", "links"}, "radio")
    fc = _number(data.get("carrier_frequency_ghz", 3.0), "radio.carrier_frequency_ghz")
    base = RadioProfile.default(fc)
    links = _mapping(data.get("links"), "radio.links")
    _check_keys(links, set(RadioProfile.LINKS), "radio.links")
    updated = {}
    for name, spec in links.items():
        spec = _mapping(spec, f"radio.links.{name}")
        _check_keys(spec, _LINK_KEYS, f"radio.links.{name}")
        kwargs = {}
        for key, value in spec.items():
            if key == "los":
                if not isinstance(value, bool):
                    raise ConfigError(f"radio.links.{name}.los must be true or false")
                kwargs[key] = value
            else:
                kwargs[key] = _number(value, f"radio.links.{name}.{key}")
        updated[name] = replace(getattr(base, name), **kwargs)
    return replace(base, **updated)


def scenario_from_dict(data):
    """Build a :class:`Scenario` from a parsed scenario mapping."""
    data = _mapping(data, "scenario")
    _check_keys(data, _TOP_KEYS, "scenario")
    if "geometry" not in data:
        raise ConfigError("scenario needs a geometry section")
    geometry = _mapping(data["geometry"], "geometry")
    _check_keys(geometry, _GEOMETRY_KEYS, "geometry")
    surface = _mapping(data.get("surface"), "surface")
    _check_keys(surface, _SURFACE_KEYS, "surface")
    noise = _mapping(data.get("noise"), "noise")
    _check_keys(noise, _NOISE_KEYS, "noise")
    try:
        geo = Geometry(**_numbers(geometry, "geometry", optional=("d_se_r", "d_se_t")))
    except TypeError as err:
        raise ConfigError(f"geometry: {err}") from None
    kwargs = {}
    for key in ("p_dbm", "beta_li_db"):
        if key in data:
            kwargs[key] = _number(data[key], key)
    for key in ("df_zone", "eavesdropper"):
        if key in data:
            kwargs[key] = str(data[key])
    return Scenario(
        geometry=geo,
        surface=SurfaceConfig(**_numbers(surface, "surface")),
        noise=NoiseParams(**_numbers(noise, "noise")),
        radio=_radio_from_dict(data.get("radio")),
        **kwargs,
    )


def load_document(path):
    """Parse a scenario file into a plain mapping (sweep section included)."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as err:
        raise ConfigError(f"cannot read scenario file {path}: {err.strerror}") from None
    except yaml.YAMLError as err:
        raise ConfigError(f"malformed scenario file {path}: {err}") from None
    return _mapping(data, f"scenario file {path}")


def load_scenario(path):
    return scenario_from_dict(load_document(path))


def dump_scenario(scenario):
    return yaml.safe_dump(scenario.to_dict(), sort_keys=False)


def apply_override(data, assignment):
    """Apply one ``dotted.key=value`` override to a scenario mapping in place."""
    key, sep, raw = assignment.partition("=")
    if not sep or not key:
        raise ConfigError(f"override must look like key=value, got {assignment!r}")
    value = yaml.safe_load(raw)
    parts = key.split(".")
    node = data
    for part in parts[:-1]:
        child = node.get(part)
        if child is None:
            child = node[part] = {}
        if not isinstance(child, dict):
            raise ConfigError(f"cannot override {key!r}: {part!r} is not a section")
        node = child
    node[parts[-1]] = value
    return data
