import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import matched_gains, power, surfaces
from starsec import (ChannelGains, Geometry, PowerSplit, SurfaceConfig,
                     rate_fd_df, rate_fd_df_opt, rate_hd_df, rate_report,
                     rate_ris, rate_siso, rate_star_ref, rate_star_tra,
                     resolve_gains)
from starsec.errors import ConfigError, RelayNotBeneficialError
from starsec.power import hd_power_split, optimal_p2_fd
from starsec.rates import fd_sinr_terms

S2 = 1e-13


def _rate_geometry(d_sr, d_sd):
    return Geometry(d_sr=d_sr, d_sd_r=d_sd, d_sd_t=d_sd, d_v=10.0)


FIG3 = _rate_geometry(100.0, 100.0)
FIG4 = _rate_geometry(60.0, 80.0)
P20 = 0.1  # 20 dBm


# --- SISO ------------------------------------------------------------------

def test_siso_zero_power_and_unit_snr():
    assert rate_siso(0.0, 1e-9, S2) == 0.0
    assert rate_siso(1.0, S2, S2) == pytest.approx(1.0, rel=1e-15)


def test_siso_fig4_matches_high_precision():
    g = resolve_gains(FIG4)
    ref = oracles.siso(oracles.mp.mpf(P20), oracles.planar_gains(60, 80, 10))
    assert rate_siso(P20, g.beta_sd, g.sigma2) == pytest.approx(float(ref), rel=1e-12)


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        rate_siso(-1.0, 1e-9, S2)


# --- HD-DF -----------------------------------------------------------------

def test_hd_symmetric_two_hop():
    g = ChannelGains.matched(beta_sr=S2, beta_sd=0.0, beta_rd=S2, sigma2=S2)
    assert rate_hd_df(1.0, g) == pytest.approx(0.5, rel=1e-15)
    assert rate_hd_df(0.0, g) == 0.0


def test_hd_fig3_matches_high_precision():
    g = resolve_gains(FIG3)
    ref = oracles.hd(oracles.mp.mpf(P20), oracles.planar_gains(100, 100, 10))
    assert rate_hd_df(P20, g) == pytest.approx(float(ref), rel=1e-12)


def test_hd_relay_not_beneficial():
    g = ChannelGains.matched(beta_sr=1e-9, beta_sd=2e-9, beta_rd=1e-9, sigma2=S2)
    with pytest.raises(RelayNotBeneficialError):
        rate_hd_df(1.0, g)


@pytest.mark.parametrize("geo", [FIG3, FIG4, _rate_geometry(80.0, 100.0)])
def test_hd_closed_form_equals_min_form_under_optimal_split(geo):
    g = resolve_gains(geo)
    split = hd_power_split(P20, g)
    mg = oracles.from_channel_gains(g)
    want = oracles.hd_min_form(oracles.mp.mpf(split.p1), oracles.mp.mpf(split.p2), mg)
    assert rate_hd_df(P20, g) == pytest.approx(float(want), rel=1e-9)


# --- FD-DF -----------------------------------------------------------------

def test_fd_silent_relay():
    g = ChannelGains.matched(beta_sr=1e-9, beta_sd=1e-11, beta_rd=1e-9, sigma2=S2)
    assert rate_fd_df(PowerSplit(2.0, 0.0, 1.0), g) == 0.0


def test_fd_interference_free_symmetric():
    g = ChannelGains.matched(beta_sr=1e-10, beta_sd=0.0, beta_rd=1e-10, sigma2=S2)
    p = 0.01
    assert rate_fd_df(PowerSplit(p, p, p), g) == pytest.approx(math.log2(1 + p * 1e-10 / S2), rel=1e-14)


def test_fd_opt_equalises_min_arguments():
    g = resolve_gains(FIG4)
    p2 = optimal_p2_fd(P20, g)
    a, b = fd_sinr_terms(2 * P20 - p2, p2, g)
    assert a == pytest.approx(b, rel=1e-9)


def test_fd_opt_matches_grid_search_fig4():
    g = resolve_gains(FIG4)
    mg = oracles.from_channel_gains(g)
    p2 = oracles.fd_p2_search(P20, mg)
    want = oracles.fd(oracles.mp.mpf(2 * P20 - p2), oracles.mp.mpf(p2), mg)
    assert rate_fd_df_opt(P20, g) == pytest.approx(float(want), rel=1e-6)


def test_fd_opt_dominates_random_splits():
    g = resolve_gains(FIG4)
    best = rate_fd_df_opt(P20, g)
    rng = random.Random(7)
    for _ in range(100):
        p2 = rng.uniform(0.0, 2 * P20)
        assert rate_fd_df(PowerSplit(2 * P20 - p2, p2, P20), g) <= best * (1 + 1e-12)


def test_fd_opt_decreases_with_loop_interference():
    g = resolve_gains(FIG4)
    rates = [rate_fd_df_opt(P20, g.replace(beta_li=10 ** (db / 10))) for db in range(-140, 1, 10)]
    assert all(b <= a for a, b in zip(rates, rates[1:]))
    assert rates[-1] < 0.1 * rates[0]


def test_fd_opt_zero_power():
    assert rate_fd_df_opt(0.0, resolve_gains(FIG4)) == 0.0


# --- RIS and STAR-RIS ------------------------------------------------------

def test_ris_without_elements_is_siso():
    g = resolve_gains(FIG4)
    assert rate_ris(P20, SurfaceConfig(n_ref=0.0), g) == rate_siso(P20, g.beta_sd, g.sigma2)


def test_ris_single_element_no_direct_link():
    g = ChannelGains.matched(beta_sr=1e-5, beta_sd=0.0, beta_rd=1e-5, sigma2=S2)
    assert rate_ris(1.0, SurfaceConfig(n_ref=1.0), g) == pytest.approx(math.log2(1 + 1e-10 / S2), rel=1e-14)


def test_ris_fig6b_matches_high_precision():
    g = resolve_gains(FIG4)
    mg = oracles.planar_gains(60, 80, 10)
    want = oracles.surface(oracles.mp.mpf(P20), 1000, mg["sd"], mg["sr"], mg["rd"], mg["s2"])
    assert rate_ris(P20, SurfaceConfig(n_ref=1000.0), g) == pytest.approx(float(want), rel=1e-12)


def test_star_ref_fig3a_matches_high_precision():
    g = resolve_gains(FIG3)
    mg = oracles.planar_gains(100, 100, 10)
    surf = SurfaceConfig(n_ref=150.0, split_k=0.5, zeta=1 / math.sqrt(2))
    n_amp = 75 * oracles.mp.sqrt(oracles.mp.mpf(1) / 2)
    want = oracles.surface(oracles.mp.mpf(P20), n_amp, mg["sd"], mg["sr"], mg["rd"], mg["s2"])
    assert rate_star_ref(P20, surf, g) == pytest.approx(float(want), rel=1e-12)


def test_star_disabled_zones_reduce_to_siso():
    g = resolve_gains(FIG4)
    siso = rate_siso(P20, g.beta_sd_ref, g.sigma2)
    assert rate_star_ref(P20, SurfaceConfig(n_ref=500.0, zeta=0.0), g) == siso
    assert rate_star_tra(P20, SurfaceConfig(n_ref=500.0, zeta=1.0), g) == siso


def test_star_zones_symmetric_at_balanced_split():
    g = resolve_gains(FIG4)
    surf = SurfaceConfig(n_ref=777.0, split_k=0.5, zeta=1 / math.sqrt(2))
    assert rate_star_ref(P20, surf, g) == pytest.approx(rate_star_tra(P20, surf, g), rel=1e-12)


def test_star_collapses_to_ris():
    g = resolve_gains(FIG4)
    k = math.nextafter(1.0, 0.0)
    star = rate_star_ref(P20, SurfaceConfig(n_ref=400.0, split_k=k, zeta=1.0), g)
    assert star == pytest.approx(rate_ris(P20, SurfaceConfig(n_ref=400.0), g), rel=1e-12)


@pytest.mark.parametrize("kwargs", [dict(split_k=0.0), dict(split_k=1.0), dict(zeta=1.5),
                                    dict(n_ref=-1.0), dict(alpha=0.0), dict(alpha_r=1.2)])
def test_surface_config_validation(kwargs):
    with pytest.raises(ConfigError):
        SurfaceConfig(**kwargs)


def test_surface_counts():
    surf = SurfaceConfig(n_ref=1000.0, split_k=0.3)
    assert surf.n_r == pytest.approx(300.0) and surf.n_t == pytest.approx(700.0)


def test_power_split_validation():
    with pytest.raises(ValueError):
        PowerSplit(1.0, 0.5, 1.0)
    with pytest.raises(ValueError):
        PowerSplit(-0.1, 2.1, 1.0)


def test_rate_report_flags_hd_fallback():
    g = ChannelGains.matched(beta_sr=1e-9, beta_sd=2e-9, beta_rd=1e-9, sigma2=S2)
    report = rate_report(1e-3, SurfaceConfig(n_ref=10.0), g)
    assert report.hd_fallback and report.r_hd_df == report.r_siso


# --- properties -------------------------------------------------------------

@given(matched_gains(eavesdropper=False), surfaces(), power, st.floats(1.0, 100.0))
@settings(max_examples=200)
def test_rates_nonnegative_and_nondecreasing_in_power(g, surf, p, factor):
    lo = rate_report(p, surf, g)
    hi = rate_report(p * factor, surf, g)
    for field in ("r_siso", "r_hd_df", "r_fd_df", "r_ris", "r_star_ref", "r_star_tra"):
        a, b = getattr(lo, field), getattr(hi, field)
        assert a >= 0.0
        assert b >= a * (1 - 1e-12), field


@given(matched_gains(eavesdropper=False), surfaces(), power, st.floats(0.0, 1000.0))
@settings(max_examples=200)
def test_surface_rates_nondecreasing_in_elements(g, surf, p, extra):
    more = SurfaceConfig(n_ref=surf.n_ref + extra, split_k=surf.split_k, zeta=surf.zeta)
    assert rate_ris(p, more, g) >= rate_ris(p, surf, g)
    assert rate_star_ref(p, more, g) >= rate_star_ref(p, surf, g)
    assert rate_star_tra(p, more, g) >= rate_star_tra(p, surf, g)


@given(matched_gains(eavesdropper=False), surfaces(), power)
def test_ris_never_below_siso(g, surf, p):
    siso = rate_siso(p, g.beta_sd, g.sigma2)
    ris = rate_ris(p, surf, g)
    assert ris >= siso
    # Strictness only where the surface term survives double rounding.
    surface_amp = surf.n_ref * math.sqrt(g.beta_sr * g.beta_rd)
    if surface_amp > 1e-6 * math.sqrt(g.beta_sd) and p * surface_amp ** 2 / g.sigma2 > 1e-9:
        assert ris > siso


@given(matched_gains(eavesdropper=False), st.floats(0.0, 5000.0), power)
def test_star_symmetry_property(g, n_ref, p):
    surf = SurfaceConfig(n_ref=n_ref, split_k=0.5, zeta=1 / math.sqrt(2))
    assert rate_star_ref(p, surf, g) == pytest.approx(rate_star_tra(p, surf, g), rel=1e-12)
