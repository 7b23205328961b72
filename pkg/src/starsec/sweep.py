"""Parameter sweeps and tabular output.

A sweep evaluates the requested (metric, scheme) cells at every grid
point of one scenario variable and returns long-format rows::

    variable,scheme,metric,value,flag

``variable`` holds the grid value.  When the spec carries an ``n_ref``
series, the surface schemes are emitted once per series value with the
scheme label suffixed ``@n_ref=<value>``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace
from typing import NamedTuple

from .errors import ConfigError, RelayNotBeneficialError
from .power import solve_p2_fd
from .rates import (rate_fd_df_opt, rate_hd_df, rate_ris, rate_siso,
                    rate_star_ref, rate_star_tra)
from .secrecy import (secrecy_fd_df, secrecy_hd_df, secrecy_ris, secrecy_siso,
                      secrecy_star)

VARIABLES = ("d_sd", "d_se", "p_dbm", "zeta", "n_ref", "split_k")
METRICS = ("rate", "secrecy")
SCHEMES = ("siso", "hd_df", "fd_df", "ris", "star_ref", "star_tra")
SURFACE_SCHEMES = ("ris", "star_ref", "star_tra")
COLUMNS = ("variable", "scheme", "metric", "value", "flag")

FLAG_RELAY_FALLBACK = "relay-not-beneficial"
FLAG_P2_CLAMPED = "p2-clamped"


class Row(NamedTuple):
    variable: float
    scheme: str
    metric: str
    value: float
    flag: str = ""


def parse_outputs(items):
    """Turn ``["rate:siso", "secrecy:all", "rate"]`` into (metric, scheme) pairs.

    Items may also already be ``(metric, scheme)`` tuples.
    """
    out = []
    for item in items:
        if isinstance(item, tuple):
            metric, scheme = item
        else:
            metric, _, scheme = str(item).partition(":")
        metrics = METRICS if metric == "all" else (metric,)
        schemes = SCHEMES if scheme in ("", "all") else (scheme,)
        for m in metrics:
            if m not in METRICS:
                raise ConfigError(f"unknown metric {m!r}; expected one of {METRICS}")
            for s in schemes:
                if s not in SCHEMES:
                    raise ConfigError(f"unknown scheme {s!r}; expected one of {SCHEMES}")
                if (m, s) not in out:
                    out.append((m, s))
    return tuple(out)


def linear_grid(start, stop, num):
    if num < 1:
        raise ConfigError("grid needs at least one point")
    if num == 1:
        return (float(start),)
    step = (stop - start) / (num - 1)
    return tuple(start + i * step for i in range(num - 1)) + (float(stop),)


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    grid: tuple
    outputs: tuple
    series: tuple = ()

    def __post_init__(self):
        if self.variable not in VARIABLES:
            raise ConfigError(f"unknown sweep variable {self.variable!r}; expected one of {VARIABLES}")
        grid = tuple(float(x) for x in self.grid)
        if not grid:
            raise ConfigError("sweep grid is empty")
        if not all(math.isfinite(x) for x in grid):
            raise ConfigError("sweep grid must be finite")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ConfigError("sweep grid must be strictly increasing")
        object.__setattr__(self, "grid", grid)
        if not self.outputs:
            raise ConfigError("sweep outputs are empty")
        object.__setattr__(self, "outputs", parse_outputs(self.outputs))
        series = tuple(float(n) for n in self.series)
        if series and self.variable == "n_ref":
            raise ConfigError("an n_ref series cannot be combined with an n_ref sweep")
        if any(n < 0 or not math.isfinite(n) for n in series):
            raise ConfigError("n_ref series values must be nonnegative")
        object.__setattr__(self, "series", series)


def scenario_at(scenario, variable, x):
    """Copy of ``scenario`` with the swept ``variable`` set to ``x``."""
    if variable == "d_sd":
        return scenario.with_geometry(d_sd_r=x, d_sd_t=x)
    if variable == "d_se":
        return scenario.with_geometry(d_se_r=x, d_se_t=x)
    if variable == "p_dbm":
        return replace(scenario, p_dbm=x)
    if variable == "n_ref":
        return scenario.with_surface(n_ref=x)
    if variable == "zeta":
        return scenario.with_surface(zeta=x)
    if variable == "split_k":
        return scenario.with_surface(split_k=x)
    raise ConfigError(f"unknown sweep variable {variable!r}")


def _point_rows(x, scen, spec):
    gains = scen.gains()
    p = scen.p_watt
    surfaces = ([(replace(scen.surface, n_ref=n), f"@n_ref={n:g}") for n in spec.series]
                or [(scen.surface, "")])
    rows = []
    for metric, scheme in spec.outputs:
        if scheme in SURFACE_SCHEMES:
            for surface, suffix in surfaces:
                rows.append(Row(x, scheme + suffix, metric, _surface_cell(metric, scheme, p, surface, gains)))
        else:
            value, flag = _relay_cell(metric, scheme, p, gains, scen.eavesdropper)
            rows.append(Row(x, scheme, metric, value, flag))
    return rows


def _surface_cell(metric, scheme, p, surface, gains):
    if metric == "rate":
        fn = {"ris": rate_ris, "star_ref": rate_star_ref, "star_tra": rate_star_tra}[scheme]
        return fn(p, surface, gains)
    if scheme == "ris":
        return secrecy_ris(p, surface, gains)
    return secrecy_star("reflection" if scheme == "star_ref" else "transmission", p, surface, gains)


def _relay_cell(metric, scheme, p, gains, eavesdropper):
    secret = metric == "secrecy"
    if scheme == "siso":
        if secret:
            return secrecy_siso(p, gains.beta_sd, gains.beta_se, gains.sigma2), ""
        return rate_siso(p, gains.beta_sd, gains.sigma2), ""
    if scheme == "hd_df":
        try:
            if secret:
                return secrecy_hd_df(p, gains, eavesdropper), ""
            return rate_hd_df(p, gains), ""
        except RelayNotBeneficialError:
            value, _ = _relay_cell(metric, "siso", p, gains, eavesdropper)
            return value, FLAG_RELAY_FALLBACK
    # fd_df
    flag = FLAG_P2_CLAMPED if p > 0 and solve_p2_fd(p, gains).clamped else ""
    if secret:
        return secrecy_fd_df(p, gains, eavesdropper), flag
    return rate_fd_df_opt(p, gains), flag


def run_sweep(scenario, spec):
    """Evaluate ``spec`` over ``scenario``; rows come out in grid order.

    Raises
    ------
    ConfigError
        If a grid value is outside the swept variable's domain or secrecy
        is requested without eavesdropper positions.  Raised before any
        rate is evaluated.
    ModelDomainError
        If a grid point puts a link below the model's distance floor.
    """
    if any(m == "secrecy" for m, _ in spec.outputs) and not scenario.geometry.has_eavesdroppers \
            and spec.variable != "d_se":
        raise ConfigError("secrecy outputs need eavesdropper distances (geometry.d_se_r/d_se_t)")
    points = [(x, scenario_at(scenario, spec.variable, x)) for x in spec.grid]
    rows = []
    for x, scen in points:
        rows.extend(_point_rows(x, scen, spec))
    return rows


def _fmt(x):
    return format(x, ".9g")


def emit(rows, fmt="csv"):
    """Serialise rows to bytes: RFC 4180 CSV or a JSON array of objects."""
    if not rows:
        raise ConfigError("nothing to emit: the table is empty")
    if fmt == "csv":
        buf = io.StringIO(newline="")
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow((_fmt(row.variable), row.scheme, row.metric, _fmt(row.value), row.flag))
        return buf.getvalue().encode("utf-8")
    if fmt == "json":
        objs = [{"variable": float(_fmt(r.variable)), "scheme": r.scheme, "metric": r.metric,
                 "value": float(_fmt(r.value)), "flag": r.flag} for r in rows]
        return (json.dumps(objs, indent=1) + "\n").encode("utf-8")
    raise ConfigError(f"unknown output format {fmt!r}; expected csv or json")


def parse_csv(data):
    """Read back bytes produced by :func:`emit` in CSV format."""
    reader = csv.DictReader(io.StringIO(data.decode("utf-8"), newline=""))
    return [Row(float(r["variable"]), r["scheme"], r["metric"], float(r["value"]), r["flag"])
            for r in reader]


def write_output(data, out=None):
    """Write emitted bytes to ``out`` (a path) or to standard output."""
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(out, "wb") as fh:
            fh.write(data)
    except OSError as err:
        raise ConfigError(f"cannot write output file {out}: {err.strerror}") from None
