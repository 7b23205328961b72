"""Secrecy rates against a passive eavesdropper.

Every secrecy rate is ``max(0, legitimate rate - eavesdropper rate)``; the
subtraction is done at full precision and clamped once.  Relay schemes face
an informed eavesdropper that combines the source and relay transmissions
(``eavesdropper="informed"``); ``"max"`` keeps only the stronger of the two
for sensitivity checks.

For the RIS and STAR-RIS, the surface phases are matched to the legitimate
user, and the eavesdropper treats the surface-reflected copy as interference
at full coherent strength.  This favours the legitimate link.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, RelayNotBeneficialError
from .power import hd_power_split, optimal_p2_fd
from .rates import (log2_1p, rate_hd_df, rate_ris, rate_siso, rate_star_zone,
                    zone_gains)

EAVESDROPPER_MODELS = ("informed", "max")


@dataclass(frozen=True)
class SecrecyReport:
    s_siso: float
    s_hd_df: float
    s_fd_df: float
    s_ris: float
    s_star_ref: float
    s_star_tra: float
    hd_fallback: bool = False


def _clamp(legit, eve):
    return max(0.0, legit - eve)


def _check_model(eavesdropper):
    if eavesdropper not in EAVESDROPPER_MODELS:
        raise ConfigError(
            f"eavesdropper model must be one of {EAVESDROPPER_MODELS}, got {eavesdropper!r}")


def secrecy_siso(p, beta_sd, beta_se, sigma2):
    return _clamp(rate_siso(p, beta_sd, sigma2), rate_siso(p, beta_se, sigma2))


def secrecy_hd_df(p, gains, eavesdropper="informed"):
    _check_model(eavesdropper)
    if p == 0:
        rate_hd_df(p, gains)  # still reject a non-beneficial relay
        return 0.0
    split = hd_power_split(p, gains)
    leak_s = split.p1 * gains.beta_se
    leak_r = split.p2 * gains.beta_re
    leak = leak_s + leak_r if eavesdropper == "informed" else max(leak_s, leak_r)
    return _clamp(rate_hd_df(p, gains), 0.5 * log2_1p(leak / gains.sigma2))


def secrecy_fd_df(p, gains, eavesdropper="informed"):
    _check_model(eavesdropper)
    if p == 0:
        return 0.0
    s2 = gains.sigma2
    p2 = optimal_p2_fd(p, gains)
    p1 = 2.0 * p - p2
    legit = log2_1p(p2 * gains.beta_rd / (p1 * gains.beta_sd + s2))
    from_source = p1 * gains.beta_se / s2
    from_relay = p2 * gains.beta_re / (p1 * gains.beta_se + s2)
    if eavesdropper == "informed":
        eve = log2_1p(from_source + from_relay)
    else:
        eve = log2_1p(max(from_source, from_relay))
    return _clamp(legit, eve)


def _surface_eve_rate(p, beta_se, coherent_amp, beta_sr, beta_re, sigma2):
    interference = p * coherent_amp * coherent_amp * beta_sr * beta_re
    return log2_1p(p * beta_se / (interference + sigma2))


def secrecy_ris(p, surface, gains):
    eve = _surface_eve_rate(p, gains.beta_se, surface.n_ref * surface.alpha,
                            gains.beta_sr, gains.beta_re, gains.sigma2)
    return _clamp(rate_ris(p, surface, gains), eve)


def secrecy_star_zone(zone, p, n_zone, surface, gains):
    _, _, beta_se, beta_re = zone_gains(zone, gains)
    eve = _surface_eve_rate(p, beta_se, n_zone * surface.zone_amplitude(zone),
                            gains.beta_sr, beta_re, gains.sigma2)
    return _clamp(rate_star_zone(zone, p, n_zone, surface, gains), eve)


def secrecy_star(zone, p, surface, gains):
    """Secrecy rate of the STAR-RIS user in ``zone`` ("reflection" or "transmission")."""
    if zone not in ("reflection", "transmission"):
        raise ConfigError(f"unknown zone {zone!r}")
    return secrecy_star_zone(zone, p, surface.zone_count(zone), surface, gains)


def secrecy_report(p, surface, gains, eavesdropper="informed"):
    s_siso = secrecy_siso(p, gains.beta_sd, gains.beta_se, gains.sigma2)
    try:
        s_hd, fallback = secrecy_hd_df(p, gains, eavesdropper), False
    except RelayNotBeneficialError:
        s_hd, fallback = s_siso, True
    return SecrecyReport(
        s_siso=s_siso,
        s_hd_df=s_hd,
        s_fd_df=secrecy_fd_df(p, gains, eavesdropper),
        s_ris=secrecy_ris(p, surface, gains),
        s_star_ref=secrecy_star("reflection", p, surface, gains),
        s_star_tra=secrecy_star("transmission", p, surface, gains),
        hd_fallback=fallback,
    )
