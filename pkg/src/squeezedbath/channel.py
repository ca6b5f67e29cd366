"""Beam-splitter style decoherence of a two-mode state into independent Gaussian baths.

The channel mixes the system variance matrix with the environment's at a
normalized dimensionless time ``r`` in [0, 1]:

    V' = t**2 * V + r**2 * (R_a (+) R_b),      t = sqrt(1 - r**2)

where ``R_a`` and ``R_b`` are the single-mode variance matrices of the two
(independent) environment modes.  ``r = 0`` is the initial state, ``r -> 1``
full thermalization.  On characteristic functions the same law reads
``C'(z) = C_sys(t z) * C_env(r z)``, the product form of a beam-splitter
interaction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import (
    EnvironmentModeSpec,
    Matrix,
    TwoModeSqueezedSpec,
    _require_finite,
    is_physical,
    squeezed_thermal_variance,
    tmss_variance,
)


@dataclass(frozen=True)
class ChannelTime:
    """Normalized dimensionless interaction time ``r`` in [0, 1].

    ``r = 1`` is admitted as the exact infinite-time boundary even though
    ``normalized_time`` never produces it from finite (gamma, tau).
    """

    r: float
    gamma: float | None = None
    tau: float | None = None

    def __post_init__(self) -> None:
        r = _require_finite("r", self.r)
        if not 0.0 <= r <= 1.0:
            raise ValueError(f"r must lie in [0, 1], got {r!r}")
        for name, value in (("gamma", self.gamma), ("tau", self.tau)):
            if value is not None and (math.isnan(value) or value < 0):
                raise ValueError(f"{name} must be nonnegative, got {value!r}")

    @property
    def t(self) -> float:
        """Transmission amplitude sqrt(1 - r**2)."""
        return math.sqrt(1.0 - self.r * self.r)


def normalized_time(gamma: float, tau: float) -> ChannelTime:
    """Map a coupling rate and an interaction time to ``r = sqrt(1 - exp(-gamma*tau))``.

    Monotone nondecreasing in ``tau``; infinite ``gamma * tau`` is accepted and
    gives the ``r = 1`` thermalization limit.
    """
    gamma, tau = float(gamma), float(tau)
    if math.isnan(gamma) or math.isnan(tau) or gamma < 0 or tau < 0:
        raise ValueError(f"gamma and tau must be nonnegative, got {gamma!r}, {tau!r}")
    product = gamma * tau
    if math.isnan(product):  # 0 * inf
        raise ValueError(f"gamma * tau is undefined for gamma={gamma!r}, tau={tau!r}")
    r = math.sqrt(-math.expm1(-product))
    return ChannelTime(r=r, gamma=gamma, tau=tau)


@dataclass(frozen=True)
class ChannelScenario:
    """A two-mode squeezed system coupled to one environment mode per system mode.

    With ``asymmetric_analysis`` set, the scenario is restricted to the regime
    the closed-form one-mode-squeezed comparison needs: both environment
    phases zero and equal mean photon numbers.
    """

    system: TwoModeSqueezedSpec
    env_a: EnvironmentModeSpec
    env_b: EnvironmentModeSpec
    asymmetric_analysis: bool = False

    def __post_init__(self) -> None:
        if self.asymmetric_analysis:
            if self.env_a.phi_e != 0.0 or self.env_b.phi_e != 0.0:
                raise ValueError("asymmetric analysis requires both environment phases to be zero")
            if self.env_a.n_bar != self.env_b.n_bar:
                raise ValueError("asymmetric analysis requires equal mean photon numbers")

    @classmethod
    def symmetric(cls, system: TwoModeSqueezedSpec, env: EnvironmentModeSpec) -> "ChannelScenario":
        """Both environment modes prepared in the same condition."""
        return cls(system=system, env_a=env, env_b=env)


def environment_variance(env_a: EnvironmentModeSpec, env_b: EnvironmentModeSpec) -> Matrix:
    """4x4 variance matrix of the two independent environment modes, ``R_a (+) R_b``."""
    r_full = np.zeros((4, 4))
    r_full[:2, :2] = squeezed_thermal_variance(env_a)
    r_full[2:, 2:] = squeezed_thermal_variance(env_b)
    return r_full


def evolve_variance(system_v: Matrix, environment_v: Matrix, time: ChannelTime) -> Matrix:
    """Apply the mixing law ``t**2 * V + r**2 * R`` to explicit variance matrices.

    Both inputs must be physical; the output then is as well (it is a convex
    combination of physical matrices).  Entries are affine in ``r**2``.
    """
    if not is_physical(system_v):
        raise ValueError("system variance matrix is unphysical")
    if not is_physical(environment_v):
        raise ValueError("environment variance matrix is unphysical")
    r2 = time.r * time.r
    return (1.0 - r2) * np.asarray(system_v, dtype=float) + r2 * np.asarray(environment_v, dtype=float)


def evolve(scenario: ChannelScenario, time: ChannelTime, time_b: ChannelTime | None = None) -> Matrix:
    """Variance matrix of the system after interacting with its environments until ``time``.

    At ``r = 0`` this returns the initial two-mode squeezed matrix unchanged;
    at ``r = 1`` the environment block matrix replaces the system entirely.
    Passing ``time_b`` lets mode b interact for a different normalized time;
    the correlation block then scales as ``t_a * t_b``.
    """
    if time_b is None:
        r2 = time.r * time.r
        return (1.0 - r2) * tmss_variance(scenario.system) + r2 * environment_variance(
            scenario.env_a, scenario.env_b
        )
    v = tmss_variance(scenario.system)
    out = np.empty((4, 4))
    out[:2, :2] = time.t**2 * v[:2, :2] + time.r**2 * squeezed_thermal_variance(scenario.env_a)
    out[2:, 2:] = time_b.t**2 * v[2:, 2:] + time_b.r**2 * squeezed_thermal_variance(scenario.env_b)
    out[:2, 2:] = time.t * time_b.t * v[:2, 2:]
    out[2:, :2] = out[:2, 2:].T
    return out
