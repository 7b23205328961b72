"""Transmit-power allocation for DF relaying.

The full-duplex split equalises the relay-decoding SINR and the
destination SINR under the average-power budget ``p1 + p2 = 2p``.  The
balance condition is a quadratic in ``p2``::

    A p2**2 + B p2 + C = 0
    A = beta_rd*beta_li - beta_sr*beta_sd
    B = sigma2*(beta_rd + beta_sr) + 4*p*beta_sr*beta_sd
    C = -(4*p**2*beta_sr*beta_sd + 2*p*beta_sr*sigma2)

Because the relay SINR falls and the destination SINR rises monotonically
in ``p2``, exactly one root lies in ``(0, 2p)`` and it maximises the FD rate.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import InfeasibleTargetError
from .rates import LN2, PowerSplit, _hd_denominator, fd_sinr_terms, log2_1p

#: Relative size below which the quadratic coefficient is treated as zero.
DEGENERATE_RTOL = 1e-12


class FdSolution(NamedTuple):
    p2: float
    clamped: bool
    p2_unclamped: float

    @property
    def flag(self):
        return "p2-clamped" if self.clamped else ""


def stable_quadratic_roots(a, b, c):
    """Real roots of ``a x**2 + b x + c`` without catastrophic cancellation.

    Returns a tuple of 0, 1 or 2 roots.  ``a == 0`` degrades to the linear
    solution.
    """
    if a == 0.0:
        return () if b == 0.0 else (-c / b,)
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return ()
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        return (0.0, 0.0)
    return (q / a, c / q)


def _fd_balance_coefficients(p, g):
    a = g.beta_rd * g.beta_li - g.beta_sr * g.beta_sd
    b = g.sigma2 * (g.beta_rd + g.beta_sr) + 4.0 * p * g.beta_sr * g.beta_sd
    c = -(4.0 * p * p * g.beta_sr * g.beta_sd + 2.0 * p * g.beta_sr * g.sigma2)
    return a, b, c


def _fd_discriminant(p, g):
    # Sum of nonnegative terms; algebraically equal to b**2 - 4ac.
    return (g.sigma2 ** 2 * (g.beta_rd + g.beta_sr) ** 2
            + 16.0 * g.beta_sr * g.beta_sd * g.beta_rd * g.beta_li * p * p
            + 8.0 * g.sigma2 * g.beta_sr * g.beta_rd * (g.beta_sd + g.beta_li) * p)


def _fd_min_sinr(p, p2, gains):
    return min(fd_sinr_terms(2.0 * p - p2, p2, gains))


def solve_p2_fd(p, gains):
    """Rate-maximising relay power of full-duplex DF, with a clamp flag."""
    if not p > 0:
        raise ValueError(f"average power must be positive, got {p!r}")
    a, b, c = _fd_balance_coefficients(p, gains)
    scale = max(abs(gains.beta_rd * gains.beta_li), abs(gains.beta_sr * gains.beta_sd))

    if abs(a) <= DEGENERATE_RTOL * scale:
        roots = (-c / b,)
    else:
        disc = _fd_discriminant(p, gains)
        assert disc >= 0.0, "negative discriminant with nonnegative gains"
        q = -0.5 * (b + math.sqrt(disc))  # b > 0 whenever sigma2 > 0
        roots = (c / q, q / a)

    upper = 2.0 * p
    inside = [r for r in roots if 0.0 <= r <= upper]
    if inside:
        best = max(inside, key=lambda r: _fd_min_sinr(p, r, gains))
        return FdSolution(best, False, best)
    raw = roots[0]
    return FdSolution(min(max(raw, 0.0), upper), True, raw)


def optimal_p2_fd(p, gains):
    """Relay power ``p2`` (W) maximising the FD-DF rate; ``p1 = 2p - p2``."""
    return solve_p2_fd(p, gains).p2


def optimal_split_fd(p, gains):
    p2 = optimal_p2_fd(p, gains)
    return PowerSplit(p1=2.0 * p - p2, p2=p2, p_avg=p)


def hd_power_split(p, gains):
    """Source/relay powers of repetition-coded HD-DF with the same average power.

    Raises
    ------
    RelayNotBeneficialError
        If ``beta_sd > beta_sr`` (the relay would need negative power).
    """
    den = _hd_denominator(gains)
    p1 = 2.0 * p * gains.beta_rd / den
    p2 = 2.0 * p * (gains.beta_sr - gains.beta_sd) / den
    return PowerSplit(p1=p1, p2=p2, p_avg=p)


def required_power_constants(target_rate, gains):
    """The nine auxiliary constants of the target-rate quadratic."""
    g = gains
    gamma = math.expm1(target_rate * LN2)
    s2 = g.sigma2
    return (
        (s2 * (g.beta_rd + g.beta_sr)) ** 2,                       # C1
        16.0 * g.beta_sr * g.beta_sd * g.beta_rd * g.beta_li,        # C2
        8.0 * g.beta_sr * g.beta_rd * s2 * (g.beta_sd + g.beta_li),  # C3
        s2 * (g.beta_rd + g.beta_sr),                                # C4
        4.0 * g.beta_sr * g.beta_sd,                                 # C5
        2.0 * (g.beta_rd * g.beta_li - g.beta_sr * g.beta_sd),       # C6
        gamma * g.beta_sd + g.beta_rd,                               # C7
        2.0 * gamma * g.beta_sd,                                     # C8
        gamma * s2,                                                  # C9
    )


def required_power_fd(target_rate, gains):
    """Average power (W) at which optimally split FD-DF reaches ``target_rate``.

    Raises
    ------
    InfeasibleTargetError
        If the rate exceeds the interference-limited ceiling of the relay.
    """
    if not target_rate > 0:
        raise ValueError(f"target rate must be positive, got {target_rate!r}")
    c1, c2, c3, c4, c5, c6, c7, c8, c9 = required_power_constants(target_rate, gains)
    lin = c6 * c8 + c5 * c7
    const = c6 * c9 + c4 * c7
    a = lin * lin - c7 * c7 * c2
    b = 2.0 * lin * const - c7 * c7 * c3
    # const**2 - c7**2*c1 with c1 = c4**2, factored to avoid cancellation at small rates.
    c = c6 * c9 * (c6 * c9 + 2.0 * c4 * c7)

    if abs(a) <= DEGENERATE_RTOL * max(lin * lin, c7 * c7 * c2):
        roots = () if b == 0.0 else (-c / b,)
    else:
        if b * b - 4.0 * a * c < 0.0:
            raise InfeasibleTargetError(
                f"no transmit power reaches {target_rate:g} bit/s/Hz with full-duplex DF")
        roots = stable_quadratic_roots(a, b, c)

    # Squaring admits spurious roots; keep those where the square root side is nonnegative.
    candidates = [r for r in roots if r > 0.0 and lin * r + const >= 0.0]
    if not candidates:
        raise InfeasibleTargetError(
            f"no transmit power reaches {target_rate:g} bit/s/Hz with full-duplex DF")
    if len(candidates) == 1:
        return candidates[0]

    def mismatch(p):
        p2 = optimal_p2_fd(p, gains)
        rate = log2_1p(p2 * gains.beta_rd / ((2.0 * p - p2) * gains.beta_sd + gains.sigma2))
        return abs(rate - target_rate)

    return min(candidates, key=mismatch)
