"""Command-line interface.

Every subcommand writes the long-format table ``variable,scheme,metric,
value,flag`` (CSV or JSON).  Single-point commands (``threshold``,
``power``, ``secrecy``) put the transmit power in dBm in ``variable``.

Exit status: 0 on success, 2 on a configuration or I/O error, 3 when the
scenario leaves the model's domain (distance floor, infeasible target,
relay that cannot help).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .channel import watt_to_dbm
from .errors import (ConfigError, ModelDomainError, RelayNotBeneficialError,
                     ZoneDisabledError)
from .power import hd_power_split, required_power_fd, solve_p2_fd
from .presets import PRESET_NAMES, preset
from .scenario import apply_override, load_document, scenario_from_dict
from .sweep import (FLAG_P2_CLAMPED, FLAG_RELAY_FALLBACK, Row, SweepSpec, emit,
                    linear_grid, run_sweep, write_output)
from .thresholds import (SCHEMES as THRESHOLD_SCHEMES, min_elements_ris_vs_hd,
                         min_elements_star_vs_hd, min_elements_vs_fd)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3

FLAG_ALWAYS_WINS = "always-wins"

# Shortcut flags and the scenario key each one overrides.
_SHORTCUTS = (("p_dbm", "p_dbm"), ("n_ref", "surface.n_ref"),
              ("zeta", "surface.zeta"), ("split_k", "surface.split_k"))


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _add_output_options(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="table format (default: csv)")
    p.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")


def _add_scenario_options(p):
    p.add_argument("scenario", help="scenario file (YAML)")
    p.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                   help="override a scenario key, e.g. geometry.d_sr=90 (repeatable)")
    p.add_argument("--p-dbm", type=float, help="average transmit power in dBm")
    p.add_argument("--n-ref", type=float, help="surface element count N_ref")
    p.add_argument("--zeta", type=float, help="STAR-RIS reflection amplitude")
    p.add_argument("--split-k", type=float, help="fraction of elements in the reflection zone")
    _add_output_options(p)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="starsec",
        description="Achievable and secrecy rates of STAR-RIS, RIS and DF relaying links.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="sweep one scenario variable")
    _add_scenario_options(p)
    p.add_argument("--variable", help="d_sd, d_se, p_dbm, zeta, n_ref or split_k")
    grid = p.add_mutually_exclusive_group()
    grid.add_argument("--grid", type=_float_list, help="explicit grid, e.g. 10,20,40")
    grid.add_argument("--range", nargs=3, type=float, metavar=("START", "STOP", "NUM"),
                      help="NUM evenly spaced points from START to STOP")
    p.add_argument("--outputs", help="comma-separated metric:scheme items (default rate:all)")
    p.add_argument("--series", type=_float_list, help="N_ref values for the surface schemes")

    p = sub.add_parser("preset", help="run a figure preset")
    p.add_argument("name", nargs="?", help="preset name; omit with --list")
    p.add_argument("--list", action="store_true", help="print the preset names and exit")
    _add_output_options(p)

    p = sub.add_parser("threshold", help="minimum surface size to beat DF relaying")
    _add_scenario_options(p)

    p = sub.add_parser("power", help="DF power split and required power")
    _add_scenario_options(p)
    p.add_argument("--target-rate", type=float, action="append", default=[], metavar="R",
                   help="also report the FD-DF power reaching R bit/s/Hz (repeatable)")

    p = sub.add_parser("secrecy", help="secrecy rate of every scheme")
    _add_scenario_options(p)
    return parser


def _load(args):
    data = load_document(args.scenario)
    for assignment in args.overrides:
        apply_override(data, assignment)
    for attr, key in _SHORTCUTS:
        value = getattr(args, attr)
        if value is not None:
            apply_override(data, f"{key}={value!r}")
    sweep = data.pop("sweep", None)
    return scenario_from_dict(data), sweep or {}


def _sweep_spec(args, section):
    if not isinstance(section, dict):
        raise ConfigError("the sweep section must be a mapping")
    unknown = set(section) - {"variable", "grid", "range", "outputs", "series"}
    if unknown:
        raise ConfigError(f"unknown key(s) in sweep: {', '.join(sorted(map(str, unknown)))}")
    variable = args.variable or section.get("variable")
    if variable is None:
        raise ConfigError("no sweep variable: pass --variable or set sweep.variable")
    if args.grid is not None:
        grid = args.grid
    elif args.range is not None:
        grid = _range_grid(*args.range)
    elif "grid" in section:
        grid = section["grid"]
    elif "range" in section:
        rng = section["range"]
        if not isinstance(rng, list) or len(rng) != 3:
            raise ConfigError("sweep.range must be [start, stop, num]")
        grid = _range_grid(*rng)
    else:
        raise ConfigError("no sweep grid: pass --grid/--range or set sweep.grid/sweep.range")
    if args.outputs is not None:
        outputs = [x.strip() for x in args.outputs.split(",") if x.strip()]
    else:
        outputs = section.get("outputs", ["rate:all"])
    series = args.series if args.series is not None else section.get("series", [])
    try:
        return SweepSpec(variable, tuple(grid), tuple(outputs), tuple(series))
    except (TypeError, ValueError) as err:
        if isinstance(err, ConfigError):
            raise
        raise ConfigError(f"invalid sweep section: {err}") from None


def _range_grid(start, stop, num):
    try:
        start, stop, count = float(start), float(stop), int(num)
    except (TypeError, ValueError):
        raise ConfigError("range needs numeric start, stop and an integer count") from None
    if count != float(num):
        raise ConfigError(f"range count must be an integer, got {num!r}")
    return linear_grid(start, stop, count)


def _cmd_sweep(args):
    scenario, section = _load(args)
    return run_sweep(scenario, _sweep_spec(args, section))


def _cmd_preset(args):
    if args.list:
        sys.stdout.write("\n".join(PRESET_NAMES) + "\n")
        return None
    if not args.name:
        raise ConfigError("preset needs a name (or --list)")
    scenario, spec = preset(args.name)
    return run_sweep(scenario, spec)


def _threshold_rows(x, result, relay):
    flag = FLAG_ALWAYS_WINS if result.always_wins else ""
    return [
        Row(x, result.scheme, f"n_min_vs_{relay}", float(result.n_min), flag),
        Row(x, result.scheme, f"n_total_min_vs_{relay}", float(result.n_total_min), flag),
        Row(x, result.scheme, f"bound_vs_{relay}", result.bound_real, flag),
    ]


def _cmd_threshold(args):
    scenario, _ = _load(args)
    gains, p, surface, x = scenario.gains(), scenario.p_watt, scenario.surface, scenario.p_dbm
    rows = []
    for scheme in THRESHOLD_SCHEMES:
        try:
            if scheme == "ris":
                hd = min_elements_ris_vs_hd(p, surface, gains)
            else:
                zone = "reflection" if scheme == "star_ref" else "transmission"
                hd = min_elements_star_vs_hd(zone, p, surface, gains)
            rows.extend(_threshold_rows(x, hd, "hd"))
        except RelayNotBeneficialError:
            # HD-DF falls back to SISO, which any nonempty surface beats.
            rows.append(Row(x, scheme, "n_min_vs_hd", 1.0, FLAG_RELAY_FALLBACK))
        except ZoneDisabledError as err:
            print(f"starsec: skipping {scheme}: {err}", file=sys.stderr)
            continue
        rows.extend(_threshold_rows(x, min_elements_vs_fd(scheme, p, surface, gains), "fd"))
    return rows


def _cmd_power(args):
    scenario, _ = _load(args)
    gains, p, x = scenario.gains(), scenario.p_watt, scenario.p_dbm
    fd = solve_p2_fd(p, gains)
    fd_flag = FLAG_P2_CLAMPED if fd.clamped else ""
    rows = [Row(x, "fd_df", "p1_w", 2.0 * p - fd.p2, fd_flag),
            Row(x, "fd_df", "p2_w", fd.p2, fd_flag)]
    try:
        hd = hd_power_split(p, gains)
        rows += [Row(x, "hd_df", "p1_w", hd.p1), Row(x, "hd_df", "p2_w", hd.p2)]
    except RelayNotBeneficialError:
        rows.append(Row(x, "hd_df", "p1_w", 2.0 * p, FLAG_RELAY_FALLBACK))
    for target in args.target_rate:
        p_req = required_power_fd(target, gains)
        rows.append(Row(x, "fd_df", f"required_power_dbm@{target:g}", watt_to_dbm(p_req)))
    return rows


def _cmd_secrecy(args):
    scenario, _ = _load(args)
    spec = SweepSpec("p_dbm", (scenario.p_dbm,), ("secrecy:all",))
    return run_sweep(scenario, spec)


_COMMANDS = {"sweep": _cmd_sweep, "preset": _cmd_preset, "threshold": _cmd_threshold,
             "power": _cmd_power, "secrecy": _cmd_secrecy}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        rows = _COMMANDS[args.command](args)
        if rows is not None:
            write_output(emit(rows, args.format), args.out)
    except ConfigError as err:
        print(f"starsec: error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except ModelDomainError as err:
        print(f"starsec: model error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except BrokenPipeError:
        # Reader went away (e.g. `| head`); silence the flush at exit.
        sys.stdout = open(os.devnull, "w")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
