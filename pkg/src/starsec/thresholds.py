"""Minimum surface size for a STAR-RIS zone or a conventional RIS to beat
DF relaying.

Each comparison reduces to ``N > bound`` with a closed-form ``bound``.
Counts are per zone for the STAR-RIS (``N_r`` or ``N_t``); the matching
total surface size ``N_ref`` is reported alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ConfigError, ZoneDisabledError
from .power import optimal_p2_fd
from .rates import (_hd_denominator, rate_fd_df_opt, rate_hd_df, rate_ris,
                    rate_star_zone, zone_gains)

#: Bounds this close to an integer are settled by a direct rate comparison.
TIE_TOL = 1e-9

SCHEMES = ("star_ref", "star_tra", "ris")
_SCHEME_ZONE = {"star_ref": "reflection", "star_tra": "transmission"}


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of one element-count comparison.

    ``n_min`` is the smallest integer count whose rate strictly exceeds the
    relay rate.  ``n_total_min`` converts it to a whole-surface count (equal
    to ``n_min`` for the conventional RIS).
    """

    scheme: str
    relay: str
    bound_real: float
    n_min: int
    always_wins: bool
    n_total_min: int
    relay_rate: float


def _smallest_winning_count(bound, rate_at, relay_rate):
    nearest = round(bound)
    if abs(bound - nearest) <= TIE_TOL * max(1.0, bound):
        return nearest if rate_at(nearest) > relay_rate else nearest + 1
    return math.floor(bound) + 1


def _result(scheme, relay, bound, share, rate_at, relay_rate):
    if bound <= 0.0:
        return ThresholdResult(scheme, relay, 0.0, 1, True, 1, relay_rate)
    n_min = _smallest_winning_count(bound, rate_at, relay_rate)
    n_total = _smallest_winning_count(bound / share, lambda m: rate_at(m * share), relay_rate)
    return ThresholdResult(scheme, relay, bound, n_min, False, n_total, relay_rate)


def _scheme_terms(scheme, surface, gains):
    """``(beta_sd, per-element amplitude, zone, zone share)`` of a scheme."""
    if scheme == "ris":
        amp = surface.alpha * math.sqrt(gains.beta_sr * gains.beta_rd)
        return gains.beta_sd, amp, None, 1.0
    if scheme not in _SCHEME_ZONE:
        raise ConfigError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    zone = _SCHEME_ZONE[scheme]
    beta_sd_zone, beta_rd_zone, _, _ = zone_gains(zone, gains)
    coeff = surface.zone_amplitude(zone)
    if coeff == 0.0:
        raise ZoneDisabledError(f"the {zone} zone receives no power (zeta={surface.zeta!r})")
    share = surface.split_k if zone == "reflection" else 1.0 - surface.split_k
    return beta_sd_zone, coeff * math.sqrt(gains.beta_sr * beta_rd_zone), zone, share


def _rate_fn(scheme, zone, p, surface, gains):
    if scheme == "ris":
        return lambda n: rate_ris(p, _with_count(surface, n), gains)
    return lambda n: rate_star_zone(zone, p, n, surface, gains)


def _with_count(surface, n):
    return replace(surface, n_ref=float(n))


def _hd_threshold(scheme, p, surface, gains):
    den = _hd_denominator(gains)
    if scheme == "ris":
        beta_sd_zone = gains.beta_sd
    else:
        beta_sd_zone = zone_gains(_SCHEME_ZONE.get(scheme, "reflection"), gains)[0]
    relay_rate = rate_hd_df(p, gains)
    if beta_sd_zone > gains.beta_sr:
        return ThresholdResult(scheme, "hd", 0.0, 1, True, 1, relay_rate)
    beta_sd_zone, amp, zone, share = _scheme_terms(scheme, surface, gains)
    snr_hd = 2.0 * p * gains.beta_sr * gains.beta_rd / (den * gains.sigma2)
    # Received amplitude the surface must reach to match the HD-DF rate.
    target = math.sqrt(math.expm1(0.5 * math.log1p(snr_hd)) * gains.sigma2 / p)
    bound = (target - math.sqrt(beta_sd_zone)) / amp
    return _result(scheme, "hd", bound, share, _rate_fn(scheme, zone, p, surface, gains), relay_rate)


def min_elements_star_vs_hd(zone, p, surface, gains):
    """Smallest zone element count for the STAR-RIS user to beat HD-DF."""
    scheme = {"reflection": "star_ref", "transmission": "star_tra"}.get(zone)
    if scheme is None:
        raise ConfigError(f"unknown zone {zone!r}")
    return _hd_threshold(scheme, p, surface, gains)


def min_elements_ris_vs_hd(p, surface, gains):
    """Smallest conventional-RIS size that beats HD-DF."""
    return _hd_threshold("ris", p, surface, gains)


def min_elements_vs_fd(scheme, p, surface, gains):
    """Smallest element count for ``scheme`` to beat optimally split FD-DF.

    ``scheme`` is one of ``"star_ref"``, ``"star_tra"`` or ``"ris"``.
    """
    beta_sd_zone, amp, zone, share = _scheme_terms(scheme, surface, gains)
    p2 = optimal_p2_fd(p, gains)
    relay_rate = rate_fd_df_opt(p, gains)
    target = math.sqrt(p2 * gains.sigma2 * gains.beta_rd
                       / (p * ((2.0 * p - p2) * gains.beta_sd + gains.sigma2)))
    bound = (target - math.sqrt(beta_sd_zone)) / amp
    return _result(scheme, "fd", bound, share, _rate_fn(scheme, zone, p, surface, gains), relay_rate)

