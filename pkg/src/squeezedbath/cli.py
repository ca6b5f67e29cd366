"""Command-line front end: sweeps, lifetimes, single-point checks, and the benchmark table.

Subcommands
-----------
sweep     evaluate delta and the oracle eigenvalue over an r-grid, write a table
lifetime  print the normalized time r* at which the state turns separable
check     print delta, the verdict, and the oracle eigenvalue at one r
figure1   write the two-curve thermal-vs-squeezed comparison table

Exit codes: 0 success, 1 invalid arguments, 2 computation-domain errors,
3 I/O errors.  Scenario parameters may also come from a ``key=value`` file
passed with ``--config``; explicit flags override file values.
"""

from __future__ import annotations

import argparse
import sys

from .channel import ChannelScenario, ChannelTime, evolve
from .separability import (
    InitiallySeparable,
    NeverSeparable,
    separability_verdict,
    separation_time,
)
from .states import EnvironmentModeSpec, TwoModeSqueezedSpec
from .sweep import DEFAULT_POINTS, SweepRequest, default_grid, format_number, run_sweep, write_figure1

_CONFIG_KEYS = {"sc", "nbar", "se1", "se2", "phi1", "phi2", "r", "points", "out", "format"}


class _UsageError(Exception):
    """A required value is missing from both the flags and the config file."""

_DEFAULTS = {
    "sc": 0.0,
    "nbar": 0.0,
    "se1": 0.0,
    "se2": 0.0,
    "phi1": 0.0,
    "phi2": 0.0,
    "points": DEFAULT_POINTS,
    "format": "csv",
}


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path) as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def _resolve(args: argparse.Namespace, key: str, cast=float):
    """Flag value if given, else config-file value, else the hard default."""
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    config = getattr(args, "_config", {})
    if key in config:
        return cast(config[key])
    return _DEFAULTS.get(key)


def _scenario(args: argparse.Namespace) -> ChannelScenario:
    system = TwoModeSqueezedSpec(s_c=_resolve(args, "sc"))
    nbar = _resolve(args, "nbar")
    env_a = EnvironmentModeSpec(n_bar=nbar, s_e=_resolve(args, "se1"), phi_e=_resolve(args, "phi1"))
    env_b = EnvironmentModeSpec(n_bar=nbar, s_e=_resolve(args, "se2"), phi_e=_resolve(args, "phi2"))
    return ChannelScenario(system=system, env_a=env_a, env_b=env_b)


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sc", type=float, help="system squeezing parameter (default 0)")
    parser.add_argument("--nbar", type=float, help="mean thermal photon number of both environment modes (default 0)")
    parser.add_argument("--se1", type=float, help="environment squeezing magnitude, mode a (default 0)")
    parser.add_argument("--se2", type=float, help="environment squeezing magnitude, mode b (default 0)")
    parser.add_argument("--phi1", type=float, help="environment squeezing phase, mode a (default 0)")
    parser.add_argument("--phi2", type=float, help="environment squeezing phase, mode b (default 0)")
    parser.add_argument("--config", help="key=value scenario file; flags override file values")


def _cmd_sweep(args: argparse.Namespace) -> int:
    out = _resolve(args, "out", cast=str)
    if out is None:
        raise _UsageError("sweep needs an output file (--out or config 'out')")
    request = SweepRequest(
        scenario=_scenario(args),
        grid=default_grid(int(_resolve(args, "points", cast=int))),
        output_path=out,
        fmt=_resolve(args, "format", cast=str),
    )
    run_sweep(request)
    print(f"wrote {request.grid.size} rows to {out}")
    return 0


def _cmd_lifetime(args: argparse.Namespace) -> int:
    try:
        r_star = separation_time(_scenario(args))
    except NeverSeparable:
        print("never-separable")
    except InitiallySeparable:
        print("initially-separable")
    else:
        print(format_number(r_star))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    r = _resolve(args, "r")
    if r is None:
        raise _UsageError("check needs a normalized time (--r or config 'r')")
    verdict = separability_verdict(evolve(_scenario(args), ChannelTime(r=r)))
    print(f"delta = {format_number(verdict.delta)}")
    print(f"separable = {'true' if verdict.separable else 'false'}")
    print(f"oracle_nu = {format_number(verdict.oracle_nu)}")
    return 0


def _cmd_figure1(args: argparse.Namespace) -> int:
    out = _resolve(args, "out", cast=str)
    if out is None:
        raise _UsageError("figure1 needs an output file (--out or config 'out')")
    points = int(_resolve(args, "points", cast=int))
    write_figure1(out, points=points, fmt=_resolve(args, "format", cast=str))
    print(f"wrote {points} rows to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squeezedbath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="tabulate delta and the oracle eigenvalue over an r-grid")
    _add_scenario_flags(sweep)
    sweep.add_argument("--points", type=int, help=f"grid size (default {DEFAULT_POINTS})")
    sweep.add_argument("--out", help="output file path")
    sweep.add_argument("--format", choices=("csv", "tsv"), help="output format (default csv)")
    sweep.set_defaults(func=_cmd_sweep)

    lifetime = sub.add_parser("lifetime", help="normalized time at which the state turns separable")
    _add_scenario_flags(lifetime)
    lifetime.set_defaults(func=_cmd_lifetime)

    check = sub.add_parser("check", help="verdict for a single scenario and time")
    _add_scenario_flags(check)
    check.add_argument("--r", type=float, help="normalized time in [0, 1]")
    check.set_defaults(func=_cmd_check)

    figure1 = sub.add_parser("figure1", help="two-curve thermal vs squeezed comparison table")
    figure1.add_argument("--config", help="key=value file for out/points/format")
    figure1.add_argument("--points", type=int, help=f"grid size (default {DEFAULT_POINTS})")
    figure1.add_argument("--out", help="output file path")
    figure1.add_argument("--format", choices=("csv", "tsv"), help="output format (default csv)")
    figure1.set_defaults(func=_cmd_figure1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    try:
        config = _read_config(args.config) if getattr(args, "config", None) else {}
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    args._config = config

    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
