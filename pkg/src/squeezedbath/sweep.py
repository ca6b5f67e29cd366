"""Parameter sweeps over normalized time and deterministic tabular output.

Rows are evaluated in grid order and written with a fixed, scientific-free
9-significant-digit number format so that repeated runs emit byte-identical
files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from .channel import ChannelScenario, ChannelTime, evolve
from .separability import separability_verdict, simon_delta
from .states import EnvironmentModeSpec, TwoModeSqueezedSpec

DEFAULT_POINTS = 401

_DELIMITERS = {"csv": ",", "tsv": "\t"}


def default_grid(points: int = DEFAULT_POINTS) -> NDArray[np.float64]:
    """Uniform grid of ``points`` values of r on [0, 1]."""
    if points < 2:
        raise ValueError(f"grid needs at least 2 points, got {points}")
    return np.linspace(0.0, 1.0, points)


def format_number(x: float) -> str:
    """Format with 9 significant digits, positional notation only."""
    return np.format_float_positional(float(x), precision=9, unique=False, fractional=False, trim="k")


@dataclass(frozen=True)
class SweepRequest:
    """A scenario, an increasing r-grid in [0, 1], and an optional output file."""

    scenario: ChannelScenario
    grid: NDArray[np.float64] = field(default_factory=default_grid)
    output_path: str | Path | None = None
    fmt: str = "csv"

    def __post_init__(self) -> None:
        grid = np.asarray(self.grid, dtype=float)
        if grid.ndim != 1 or grid.size < 1:
            raise ValueError("grid must be a one-dimensional sequence of r values")
        if np.any(grid < 0.0) or np.any(grid > 1.0):
            raise ValueError("grid values must lie within [0, 1]")
        if np.any(np.diff(grid) <= 0.0):
            raise ValueError("grid values must be strictly increasing")
        object.__setattr__(self, "grid", grid)
        if self.fmt not in _DELIMITERS:
            raise ValueError(f"format must be one of {sorted(_DELIMITERS)}, got {self.fmt!r}")


@dataclass(frozen=True)
class SweepResult:
    """Per-grid-point criterion value, decision, and oracle eigenvalue, ordered by r."""

    r: NDArray[np.float64]
    delta: NDArray[np.float64]
    separable: NDArray[np.bool_]
    oracle_nu: NDArray[np.float64]

    def rows(self) -> Iterator[tuple[float, float, bool, float]]:
        for i in range(self.r.size):
            yield float(self.r[i]), float(self.delta[i]), bool(self.separable[i]), float(self.oracle_nu[i])


def run_sweep(request: SweepRequest) -> SweepResult:
    """Evaluate the separability verdict at every grid point, writing the table if asked.

    Output is deterministic: rows are assembled strictly in grid order.
    """
    deltas = np.empty(request.grid.size)
    seps = np.empty(request.grid.size, dtype=bool)
    nus = np.empty(request.grid.size)
    for i, r in enumerate(request.grid):
        verdict = separability_verdict(evolve(request.scenario, ChannelTime(r=float(r))))
        deltas[i] = verdict.delta
        seps[i] = verdict.separable
        nus[i] = verdict.oracle_nu
    result = SweepResult(r=request.grid.copy(), delta=deltas, separable=seps, oracle_nu=nus)
    if request.output_path is not None:
        write_sweep(result, request.output_path, request.fmt)
    return result


def _write_rows(path: str | Path, fmt: str, header: list[str], rows: Iterator[list[str]]) -> None:
    sep = _DELIMITERS[fmt]
    try:
        with open(path, "w", newline="") as handle:
            handle.write(sep.join(header) + "\n")
            for row in rows:
                handle.write(sep.join(row) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write table to {path!r}: {exc}") from exc


def write_sweep(result: SweepResult, path: str | Path, fmt: str = "csv") -> None:
    """Write ``r,delta,separable,oracle_nu`` rows; booleans as ``true``/``false``."""
    rows = (
        [format_number(r), format_number(d), "true" if s else "false", format_number(nu)]
        for r, d, s, nu in result.rows()
    )
    _write_rows(path, fmt, ["r", "delta", "separable", "oracle_nu"], rows)


def figure1_scenarios() -> tuple[ChannelScenario, ChannelScenario]:
    """The two benchmark scenarios of the lifetime comparison plot.

    Unit system squeezing, one mean thermal photon per environment mode; the
    first scenario is purely thermal, the second squeezes environment mode a
    with ``s_e = 0.5`` while mode b stays phase-insensitive.
    """
    system = TwoModeSqueezedSpec(s_c=1.0)
    thermal = EnvironmentModeSpec(n_bar=1.0)
    squeezed = EnvironmentModeSpec(n_bar=1.0, s_e=0.5)
    return (
        ChannelScenario(system=system, env_a=thermal, env_b=thermal),
        ChannelScenario(system=system, env_a=squeezed, env_b=thermal),
    )


def figure1_table(points: int = DEFAULT_POINTS) -> tuple[NDArray[np.float64], ...]:
    """Arrays ``(r, delta_thermal, delta_squeezed)`` over a uniform grid on [0, 1]."""
    thermal, squeezed = figure1_scenarios()
    grid = default_grid(points)
    d_th = np.array([simon_delta(evolve(thermal, ChannelTime(r=float(r)))) for r in grid])
    d_sq = np.array([simon_delta(evolve(squeezed, ChannelTime(r=float(r)))) for r in grid])
    return grid, d_th, d_sq


def write_figure1(path: str | Path, points: int = DEFAULT_POINTS, fmt: str = "csv") -> None:
    """Write the two-curve lifetime comparison as ``r,delta_thermal,delta_squeezed``."""
    if fmt not in _DELIMITERS:
        raise ValueError(f"format must be one of {sorted(_DELIMITERS)}, got {fmt!r}")
    grid, d_th, d_sq = figure1_table(points)
    rows = (
        [format_number(grid[i]), format_number(d_th[i]), format_number(d_sq[i])]
        for i in range(grid.size)
    )
    _write_rows(path, fmt, ["r", "delta_thermal", "delta_squeezed"], rows)
