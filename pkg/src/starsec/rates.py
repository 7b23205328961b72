"""Achievable rates (bit/s/Hz) of the five transmission schemes.

All expressions take the average transmit power ``p`` in watts and a
:class:`~starsec.channel.ChannelGains`.  Surface element counts are real
valued so that continuous sweeps over K and zeta are possible; integer
rounding only happens in :mod:`starsec.thresholds`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, RelayNotBeneficialError

LN2 = math.log(2.0)


def log2_1p(x):
    """``log2(1 + x)`` through the natural-log path."""
    return math.log1p(x) / LN2


@dataclass(frozen=True)
class SurfaceConfig:
    """Passive surface parameters.

    ``n_ref`` is the total element count, ``split_k`` the fraction of
    elements operating in reflection mode, ``zeta`` the reflection
    amplitude (transmission gets ``sqrt(1 - zeta**2)``).  ``alpha`` is the
    amplitude coefficient of the conventional RIS.
    """

    n_ref: float = 0.0
    split_k: float = 0.5
    zeta: float = 1.0 / math.sqrt(2.0)
    alpha_r: float = 1.0
    alpha_t: float = 1.0
    alpha: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.n_ref) and self.n_ref >= 0):
            raise ConfigError(f"n_ref must be a nonnegative count, got {self.n_ref!r}")
        if not 0.0 < self.split_k < 1.0:
            raise ConfigError(f"split_k must lie in (0, 1), got {self.split_k!r}")
        if not 0.0 <= self.zeta <= 1.0:
            raise ConfigError(f"zeta must lie in [0, 1], got {self.zeta!r}")
        for name in ("alpha_r", "alpha_t", "alpha"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ConfigError(f"{name} must lie in (0, 1], got {value!r}")

    @property
    def n_r(self):
        return self.split_k * self.n_ref

    @property
    def n_t(self):
        return (1.0 - self.split_k) * self.n_ref

    @property
    def transmission_amplitude(self):
        return math.sqrt(1.0 - self.zeta * self.zeta)

    def zone_amplitude(self, zone):
        """Per-element amplitude ``alpha_zone * split`` of a STAR zone."""
        if zone == "reflection":
            return self.alpha_r * self.zeta
        if zone == "transmission":
            return self.alpha_t * self.transmission_amplitude
        raise ConfigError(f"unknown zone {zone!r}")

    def zone_count(self, zone):
        return self.n_r if zone == "reflection" else self.n_t


@dataclass(frozen=True)
class PowerSplit:
    """Source and relay powers sharing the average budget ``p_avg``."""

    p1: float
    p2: float
    p_avg: float

    def __post_init__(self):
        if self.p1 < 0 or self.p2 < 0:
            raise ValueError(f"powers must be nonnegative, got p1={self.p1!r}, p2={self.p2!r}")
        if not self.p_avg > 0:
            raise ValueError(f"p_avg must be positive, got {self.p_avg!r}")
        if abs(self.p1 + self.p2 - 2.0 * self.p_avg) > 1e-9 * 2.0 * self.p_avg:
            raise ValueError("p1 + p2 must equal 2 * p_avg")


@dataclass(frozen=True)
class RateReport:
    r_siso: float
    r_hd_df: float
    r_fd_df: float
    r_ris: float
    r_star_ref: float
    r_star_tra: float
    hd_fallback: bool = False


def _check_power(p):
    if not p >= 0:
        raise ValueError(f"transmit power must be nonnegative, got {p!r}")


def rate_siso(p, beta_sd, sigma2):
    _check_power(p)
    return log2_1p(p * beta_sd / sigma2)


def _hd_denominator(gains):
    # Subtract first: exact when beta_sr ~ beta_sd, and keeps p1 + p2 = 2p.
    den = (gains.beta_sr - gains.beta_sd) + gains.beta_rd
    if not den > 0 or gains.beta_sr < gains.beta_sd:
        raise RelayNotBeneficialError(
            "relay not beneficial: the direct link is at least as strong as the "
            "source-relay link (beta_sd >= beta_sr)")
    return den


def rate_hd_df(p, gains):
    """Repetition-coded half-duplex DF rate with the optimal power split."""
    _check_power(p)
    den = _hd_denominator(gains)
    snr = 2.0 * p * gains.beta_sr * gains.beta_rd / (den * gains.sigma2)
    return 0.5 * log2_1p(snr)


def fd_sinr_terms(p1, p2, gains):
    """The relay-decoding and destination SINRs of full-duplex DF."""
    at_relay = p1 * gains.beta_sr / (p2 * gains.beta_li + gains.sigma2)
    at_dest = p2 * gains.beta_rd / (p1 * gains.beta_sd + gains.sigma2)
    return at_relay, at_dest


def rate_fd_df(split, gains):
    return log2_1p(min(fd_sinr_terms(split.p1, split.p2, gains)))


def rate_fd_df_opt(p, gains):
    """Full-duplex DF rate at the rate-maximising power split."""
    from .power import optimal_p2_fd

    if p == 0:
        return 0.0
    p2 = optimal_p2_fd(p, gains)
    return log2_1p(p2 * gains.beta_rd / ((2.0 * p - p2) * gains.beta_sd + gains.sigma2))


def _coherent_snr(p, beta_sd, n_amp, beta_sr, beta_rd, sigma2):
    """SNR of the direct path plus ``n_amp`` phase-aligned surface elements.

    The square ``(sqrt(beta_sd) + n_amp*sqrt(beta_sr*beta_rd))**2`` is
    expanded so that an empty surface gives exactly the SISO SNR.
    """
    cascade = n_amp * math.sqrt(beta_sr * beta_rd)
    power_gain = beta_sd + cascade * (2.0 * math.sqrt(beta_sd) + cascade)
    return p * power_gain / sigma2


def rate_ris(p, surface, gains):
    _check_power(p)
    return log2_1p(_coherent_snr(p, gains.beta_sd, surface.n_ref * surface.alpha,
                                 gains.beta_sr, gains.beta_rd, gains.sigma2))


def zone_gains(zone, gains):
    """``(beta_sd, beta_rd, beta_se, beta_re)`` of one STAR zone."""
    if zone == "reflection":
        return gains.beta_sd_ref, gains.beta_rd_ref, gains.beta_se_ref, gains.beta_re_ref
    if zone == "transmission":
        return gains.beta_sd_tra, gains.beta_rd_tra, gains.beta_se_tra, gains.beta_re_tra
    raise ConfigError(f"unknown zone {zone!r}")


def rate_star_zone(zone, p, n_zone, surface, gains):
    """Rate of the STAR-RIS user in ``zone`` served by ``n_zone`` elements."""
    _check_power(p)
    beta_sd, beta_rd, _, _ = zone_gains(zone, gains)
    return log2_1p(_coherent_snr(p, beta_sd, n_zone * surface.zone_amplitude(zone),
                                 gains.beta_sr, beta_rd, gains.sigma2))


def rate_star_ref(p, surface, gains):
    return rate_star_zone("reflection", p, surface.n_r, surface, gains)


def rate_star_tra(p, surface, gains):
    return rate_star_zone("transmission", p, surface.n_t, surface, gains)


def rate_report(p, surface, gains):
    """All six rates at one operating point.

    When the relay is not beneficial the HD-DF entry carries the SISO rate
    and ``hd_fallback`` is set.
    """
    r_siso = rate_siso(p, gains.beta_sd, gains.sigma2)
    try:
        r_hd, fallback = rate_hd_df(p, gains), False
    except RelayNotBeneficialError:
        r_hd, fallback = r_siso, True
    return RateReport(
        r_siso=r_siso,
        r_hd_df=r_hd,
        r_fd_df=rate_fd_df_opt(p, gains),
        r_ris=rate_ris(p, surface, gains),
        r_star_ref=rate_star_ref(p, surface, gains),
        r_star_tra=rate_star_tra(p, surface, gains),
        hd_fallback=fallback,
    )

