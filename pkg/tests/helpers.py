"""Random scenario generators and hypothesis strategies shared by tests."""

import math

from hypothesis import strategies as st

from starsec import ChannelGains, Geometry, SurfaceConfig, resolve_gains


def random_geometry(rng, eavesdroppers=True):
    """A planar deployment inside the model's validity region."""
    d_sr = rng.uniform(20.0, 150.0)
    kw = dict(d_sr=d_sr, d_sd_r=rng.uniform(10.0, 250.0), d_sd_t=rng.uniform(10.0, 250.0),
              d_v=rng.uniform(10.0, 30.0))
    if eavesdroppers:
        kw.update(d_se_r=rng.uniform(10.0, 250.0), d_se_t=rng.uniform(10.0, 250.0),
                  d_v_e=rng.uniform(10.0, 30.0))
    return Geometry(**kw)


def random_surface(rng, n_max=2000.0):
    return SurfaceConfig(n_ref=rng.uniform(0.0, n_max), split_k=rng.uniform(0.05, 0.95),
                         zeta=rng.uniform(0.0, 1.0))


def random_point(rng, eavesdroppers=True):
    """``(p_watt, surface, gains)`` with p between -10 and 40 dBm."""
    geometry = random_geometry(rng, eavesdroppers)
    p = 10 ** ((rng.uniform(-10.0, 40.0) - 30.0) / 10.0)
    return p, random_surface(rng), resolve_gains(geometry)


positive_gain = st.floats(1e-14, 1e-4)
noise = st.floats(1e-14, 1e-11)
power = st.floats(1e-5, 10.0)


@st.composite
def matched_gains(draw, eavesdropper=True):
    """Symmetric two-zone gains with a beneficial relay (beta_sd <= beta_sr)."""
    sr = draw(positive_gain)
    sd = draw(st.floats(0.0, 1.0)) * sr
    kw = dict(beta_sr=sr, beta_sd=sd, beta_rd=draw(positive_gain), sigma2=draw(noise),
              beta_li=draw(st.sampled_from([0.0, 1e-13, 1e-10])))
    if eavesdropper:
        kw.update(beta_se=draw(st.floats(0.0, 1e-5)), beta_re=draw(st.floats(0.0, 1e-5)))
    return ChannelGains.matched(**kw)


@st.composite
def surfaces(draw):
    return SurfaceConfig(n_ref=draw(st.floats(0.0, 5000.0)),
                         split_k=draw(st.floats(0.01, 0.99)),
                         zeta=draw(st.floats(0.0, 1.0)))


def approx_rel(a, b, rtol):
    scale = max(abs(a), abs(b))
    return scale == 0.0 or abs(a - b) <= rtol * scale


def finite(x):
    return math.isfinite(x)
