"""Large-scale channel model: 3GPP UMi path loss, thermal noise and the
planar deployment geometry that turns distances into linear channel gains.

Every rate formula in the package consumes a :class:`ChannelGains`
instance; dB quantities appear only at this boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ConfigError, ModelValidityError

#: Smallest distance (m) for which the UMi model is used.
MIN_DISTANCE_M = 10.0
#: Thermal noise density at room temperature (dBm/Hz).
THERMAL_NOISE_DBM_HZ = -174.0

ZONES = ("reflection", "transmission")


def db_to_linear(x_db):
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x):
    if x <= 0:
        raise ValueError(f"linear value must be positive, got {x!r}")
    return 10.0 * math.log10(x)


def dbm_to_watt(x_dbm):
    return 10.0 ** ((x_dbm - 30.0) / 10.0)


def watt_to_dbm(x_w):
    return linear_to_db(x_w) + 30.0


@dataclass(frozen=True)
class PathLossParams:
    """Radio parameters of one link type."""

    carrier_frequency_ghz: float = 3.0
    tx_gain_dbi: float = 0.0
    rx_gain_dbi: float = 0.0
    los: bool = True

    def __post_init__(self):
        if not self.carrier_frequency_ghz > 0:
            raise ConfigError(
                f"carrier_frequency_ghz must be positive, got {self.carrier_frequency_ghz!r}")


@dataclass(frozen=True)
class NoiseParams:
    bandwidth_hz: float = 10e6
    noise_figure_db: float = 10.0

    def __post_init__(self):
        if not self.bandwidth_hz > 0:
            raise ConfigError(f"bandwidth_hz must be positive, got {self.bandwidth_hz!r}")


@dataclass(frozen=True)
class RadioProfile:
    """Per-link path-loss parameters.

    Link keys: ``sr`` source to surface/relay, ``rd`` surface/relay to
    destination, ``sd`` source to destination, ``se`` source to
    eavesdropper, ``re`` surface/relay to eavesdropper.  The defaults use
    LoS for every link touching the surface or relay and NLoS for the
    direct links, with 5 dBi at the source, relay and surface and 0 dBi at
    destinations and eavesdroppers.
    """

    sr: PathLossParams = PathLossParams(3.0, 5.0, 5.0, True)
    rd: PathLossParams = PathLossParams(3.0, 5.0, 0.0, True)
    sd: PathLossParams = PathLossParams(3.0, 5.0, 0.0, False)
    se: PathLossParams = PathLossParams(3.0, 5.0, 0.0, False)
    re: PathLossParams = PathLossParams(3.0, 5.0, 0.0, True)

    LINKS = ("sr", "rd", "sd", "se", "re")

    @classmethod
    def default(cls, carrier_frequency_ghz=3.0):
        base = cls()
        return cls(**{
            name: replace(getattr(base, name), carrier_frequency_ghz=carrier_frequency_ghz)
            for name in cls.LINKS
        })


@dataclass(frozen=True)
class Geometry:
    """Planar deployment, source at the origin, surface/relay at ``(d_sr, 0)``.

    Destinations sit at axial distance ``d_sd_r`` / ``d_sd_t`` and
    perpendicular offset ``d_v``; eavesdroppers at ``d_se_r`` / ``d_se_t``
    with offset ``d_v_e``.  Eavesdropper distances may be ``None`` when no
    eavesdropper is present.
    """

    d_sr: float
    d_sd_r: float
    d_sd_t: float
    d_se_r: float | None = None
    d_se_t: float | None = None
    d_v: float = 0.0
    d_v_e: float = 0.0

    def __post_init__(self):
        for name in ("d_sr", "d_sd_r", "d_sd_t", "d_se_r", "d_se_t"):
            value = getattr(self, name)
            if value is None:
                continue
            if not math.isfinite(value) or value < MIN_DISTANCE_M:
                raise ConfigError(
                    f"{name}={value!r} m is below the {MIN_DISTANCE_M:g} m model floor")
        for name in ("d_v", "d_v_e"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ConfigError(f"{name} must be a nonnegative finite distance, got {value!r}")
        if (self.d_se_r is None) != (self.d_se_t is None):
            raise ConfigError("d_se_r and d_se_t must be given together")

    @property
    def has_eavesdroppers(self):
        return self.d_se_r is not None

    def link_distances(self):
        """Euclidean length of every link, keyed ``<link>_<zone>``."""
        out = {"sr": self.d_sr}
        for zone, d_sd, d_se in (("ref", self.d_sd_r, self.d_se_r),
                                 ("tra", self.d_sd_t, self.d_se_t)):
            out[f"sd_{zone}"] = math.hypot(d_sd, self.d_v)
            out[f"rd_{zone}"] = math.hypot(d_sd - self.d_sr, self.d_v)
            if d_se is not None:
                out[f"se_{zone}"] = math.hypot(d_se, self.d_v_e)
                out[f"re_{zone}"] = math.hypot(d_se - self.d_sr, self.d_v_e)
        return out


@dataclass(frozen=True)
class ChannelGains:
    """Linear power gains of every link plus the receiver noise power (W).

    ``beta_sd``, ``beta_rd``, ``beta_se`` and ``beta_re`` are the links seen
    by the single-destination schemes (SISO, HD/FD-DF relaying and the
    conventional RIS); they are copies of the zone the relay serves.
    """

    beta_sr: float
    beta_sd: float
    beta_rd: float
    beta_sd_ref: float
    beta_sd_tra: float
    beta_rd_ref: float
    beta_rd_tra: float
    sigma2: float
    beta_li: float = 0.0
    beta_se: float = 0.0
    beta_re: float = 0.0
    beta_se_ref: float = 0.0
    beta_se_tra: float = 0.0
    beta_re_ref: float = 0.0
    beta_re_tra: float = 0.0

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if name == "sigma2":
                if not value > 0:
                    raise ValueError(f"sigma2 must be positive, got {value!r}")
            elif not value >= 0:
                raise ValueError(f"{name} must be nonnegative, got {value!r}")
        if self.beta_li > 1:
            raise ValueError(f"beta_li must not exceed 1, got {self.beta_li!r}")

    def replace(self, **changes):
        return replace(self, **changes)

    @classmethod
    def matched(cls, beta_sr, beta_sd, beta_rd, sigma2, beta_li=0.0,
                beta_se=0.0, beta_re=0.0):
        """Gains with identical reflection and transmission zones."""
        return cls(beta_sr=beta_sr, beta_sd=beta_sd, beta_rd=beta_rd,
                   beta_sd_ref=beta_sd, beta_sd_tra=beta_sd,
                   beta_rd_ref=beta_rd, beta_rd_tra=beta_rd,
                   sigma2=sigma2, beta_li=beta_li,
                   beta_se=beta_se, beta_re=beta_re,
                   beta_se_ref=beta_se, beta_se_tra=beta_se,
                   beta_re_ref=beta_re, beta_re_tra=beta_re)


def pathloss_db(d, params):
    """Channel gain in dB (negative) of a UMi link of length ``d`` metres.

    >>> round(pathloss_db(100.0, PathLossParams(3.0, 5.0, 5.0, True)), 3)
    -71.542
    """
    if not d >= MIN_DISTANCE_M:
        raise ModelValidityError(
            f"distance {d!r} m is below the {MIN_DISTANCE_M:g} m validity floor",
            distance=d)
    gains = params.tx_gain_dbi + params.rx_gain_dbi
    log_fc = math.log10(params.carrier_frequency_ghz)
    log_d = math.log10(d)
    if params.los:
        return gains - 28.0 - 20.0 * log_fc - 22.0 * log_d
    return gains - 22.7 - 26.0 * log_fc - 36.7 * log_d


def noise_power_dbm(params):
    return THERMAL_NOISE_DBM_HZ + 10.0 * math.log10(params.bandwidth_hz) + params.noise_figure_db


def resolve_gains(geometry, radio=None, noise=None, beta_li_db=-130.0,
                  df_zone="reflection"):
    """Turn a deployment into the :class:`ChannelGains` every formula uses.

    Parameters
    ----------
    geometry : Geometry
    radio : RadioProfile, optional
        Per-link path-loss parameters; the default UMi profile at 3 GHz.
    noise : NoiseParams, optional
        Defaults to 10 MHz bandwidth and a 10 dB noise figure.
    beta_li_db : float
        Residual loop-interference gain of the FD relay, in dB.
    df_zone : {"reflection", "transmission"}
        Which destination/eavesdropper pair the relay, SISO and RIS
        baselines serve.

    Raises
    ------
    ModelValidityError
        If any link is shorter than 10 m; ``err.link`` names the link.
    """
    radio = RadioProfile.default() if radio is None else radio
    noise = NoiseParams() if noise is None else noise
    if df_zone not in ZONES:
        raise ConfigError(f"df_zone must be one of {ZONES}, got {df_zone!r}")

    gains = {}
    for key, dist in geometry.link_distances().items():
        link = key.split("_")[0]
        try:
            gains[f"beta_{key}"] = db_to_linear(pathloss_db(dist, getattr(radio, link)))
        except ModelValidityError as err:
            raise ModelValidityError(
                f"link {key}: distance {dist:.6g} m is below the "
                f"{MIN_DISTANCE_M:g} m validity floor", link=key, distance=dist) from err

    zone = "ref" if df_zone == "reflection" else "tra"
    for link in ("sd", "rd", "se", "re"):
        src = f"beta_{link}_{zone}"
        if src in gains:
            gains[f"beta_{link}"] = gains[src]

    return ChannelGains(
        sigma2=dbm_to_watt(noise_power_dbm(noise)),
        beta_li=db_to_linear(beta_li_db),
        **gains,
    )
