"""Separability of two-mode Gaussian states and entanglement lifetimes.

The central quantity is the determinant-form separability functional ``delta``:
with the variance matrix partitioned into 2x2 blocks ``[[A, C], [C^T, B]]``,

    delta = (det A - 1)(det B - 1) + (|det C| - 1)**2 - 1
            - Tr[A sy C sy B sy C^T sy]

(``sy`` the Pauli-y matrix).  For two-mode Gaussian states ``delta >= 0`` is
necessary and sufficient for separability.  A second, independent route to the
same decision is the smallest symplectic eigenvalue of the partially
transposed matrix (``ppt_oracle``): values below 1 signal entanglement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelScenario, ChannelTime, evolve
from .states import (
    EnvironmentModeSpec,
    J,
    Matrix,
    TwoModeSqueezedSpec,
    _require_finite,
    _require_symmetric,
    is_physical,
)

#: |delta| below this is classified as the separable boundary
BOUNDARY_TOL = 1e-9

#: bisection exit thresholds for lifetime searches
_DELTA_TOL = 1e-10
_WIDTH_TOL = 1e-12


class NeverSeparable(Exception):
    """The state stays entangled for every normalized time r in [0, 1)."""


class InitiallySeparable(Exception):
    """The state is already separable at r = 0."""


@dataclass(frozen=True)
class SeparabilityVerdict:
    """Criterion value, boolean decision, and the independent oracle eigenvalue."""

    delta: float
    separable: bool
    oracle_nu: float


def _blocks(v: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    return v[:2, :2], v[2:, 2:], v[:2, 2:]


def _check_physical(v: Matrix) -> Matrix:
    v = _require_symmetric(v)
    if not is_physical(v):
        raise ValueError("variance matrix is unphysical (symplectic eigenvalue below 1)")
    return v


def simon_delta(v: Matrix) -> float:
    """Separability functional of a physical 4x4 variance matrix.

    Nonnegative exactly for separable states.  The Pauli-y conjugations in the
    trace term are evaluated with the real matrix J since sigma_y = -i*J and
    the four factors of -i cancel.
    """
    a, b, c = _blocks(_check_physical(v))
    det_a, det_b, det_c = np.linalg.det(a), np.linalg.det(b), np.linalg.det(c)
    lhs = (det_a - 1.0) * (det_b - 1.0) + (abs(det_c) - 1.0) ** 2 - 1.0
    rhs = float(np.trace(a @ J @ c @ J @ b @ J @ c.T @ J))
    return float(lhs - rhs)


def separability_verdict(v: Matrix) -> SeparabilityVerdict:
    """Evaluate ``simon_delta`` and ``ppt_oracle`` and classify the state.

    ``|delta| <= BOUNDARY_TOL`` is reported as separable: boundary states of
    the criterion are separable for two-mode Gaussian states.
    """
    delta = simon_delta(v)
    return SeparabilityVerdict(
        delta=delta,
        separable=bool(delta >= -BOUNDARY_TOL),
        oracle_nu=ppt_oracle(v),
    )


def ppt_oracle(v: Matrix) -> float:
    """Smallest symplectic eigenvalue of the partially transposed variance matrix.

    Partial transposition flips the sign of one mode-b quadrature, which on
    block determinants amounts to ``det C -> -det C``.  The eigenvalue is the
    root of ``nu**4 - dt * nu**2 + det V = 0`` with
    ``dt = det A + det B - 2 det C``, evaluated in closed form (no eigensolver,
    2x2 determinants expanded directly).  Values below 1 signal entanglement.
    """
    v = _check_physical(v)

    def det2(m: Matrix) -> float:
        return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    a, b, c = _blocks(v)
    dt = det2(a) + det2(b) - 2.0 * det2(c)
    det_v = float(np.linalg.det(v))
    disc = dt * dt - 4.0 * det_v
    if disc < -1e-9:
        raise ValueError("partial-transpose quadratic has no real roots; input not a physical state")
    nu_sq = 0.5 * (dt - math.sqrt(max(disc, 0.0)))
    return math.sqrt(max(nu_sq, 0.0))


def block_delta(n1: float, n2: float, m1: float, m2: float, c1: float, c2: float) -> float:
    """Separability functional for diagonal-block matrices with ``|c1| = |c2|``.

    Parameters are the entries of ``A = diag(n1, n2)``, ``B = diag(m1, m2)``
    and ``C = diag(c1, c2)``.  With ``k2 = |c1 * c2|`` the functional reduces
    to ``(k2 - 1)**2 - k2 (n1 m1 + n2 m2) + (n1 n2 - 1)(m1 m2 - 1) - 1`` and
    agrees with ``simon_delta`` of the assembled matrix.
    """
    for name, value in (("n1", n1), ("n2", n2), ("m1", m1), ("m2", m2)):
        if _require_finite(name, value) <= 0:
            raise ValueError(f"{name} must be positive, got {value!r}")
    c1 = _require_finite("c1", c1)
    c2 = _require_finite("c2", c2)
    if not math.isclose(abs(c1), abs(c2), rel_tol=1e-9, abs_tol=1e-12):
        raise ValueError(f"correlation magnitudes must match, got |c1|={abs(c1)!r}, |c2|={abs(c2)!r}")
    k2 = abs(c1 * c2)
    return (k2 - 1.0) ** 2 - k2 * (n1 * m1 + n2 * m2) + (n1 * n2 - 1.0) * (m1 * m2 - 1.0) - 1.0


def lemma1_separable(n1: float, n2: float, c1: float, c2: float) -> bool:
    """Closed-form separability test for diagonal-block matrices with equal diagonal blocks.

    For ``A = B = diag(n1, n2)`` and ``C = diag(c1, c2)`` the state is
    separable iff ``(n1 - |c1|)(n2 - |c2|) >= 1``.
    """
    if _require_finite("n1", n1) <= 0 or _require_finite("n2", n2) <= 0:
        raise ValueError(f"n1 and n2 must be positive, got {n1!r}, {n2!r}")
    return bool((n1 - abs(c1)) * (n2 - abs(c2)) >= 1.0 - BOUNDARY_TOL)


def symmetric_lhs_rhs(
    spec: TwoModeSqueezedSpec, env: EnvironmentModeSpec, time: ChannelTime
) -> tuple[float, float]:
    """Both sides of the separability criterion for identical environment modes.

    The left-hand side is independent of the squeezing phase ``phi_e``:

        lhs = [t^4 mu^2 + r^4 nt^2 + 2 r^2 t^2 mu nt cosh(2 s_e) - 1]^2
              + (lam^2 t^4 - 1)^2 - 1

    The right-hand side (the trace term) carries the whole phase dependence
    and is maximised at ``phi_e = 0``:

        rhs = 2 lam^2 t^4 [mu^2 t^4 + 2 mu t^2 r^2 nt cosh(2 s_e)
              + r^4 nt^2 (cosh^2(2 s_e) + cos(2 phi_e) sinh^2(2 s_e))]

    ``lhs - rhs`` equals ``simon_delta`` of the evolved matrix.
    """
    mu, lam = spec.mu, spec.lam
    nt = env.n_tilde
    r2 = time.r * time.r
    t2 = 1.0 - r2
    ch = math.cosh(2.0 * env.s_e)
    sh = math.sinh(2.0 * env.s_e)
    lhs = (t2 * t2 * mu * mu + r2 * r2 * nt * nt + 2.0 * r2 * t2 * mu * nt * ch - 1.0) ** 2
    lhs += (lam * lam * t2 * t2 - 1.0) ** 2 - 1.0
    rhs = 2.0 * lam * lam * t2 * t2 * (
        mu * mu * t2 * t2
        + 2.0 * mu * t2 * r2 * nt * ch
        + r2 * r2 * nt * nt * (ch * ch + math.cos(2.0 * env.phi_e) * sh * sh)
    )
    return lhs, rhs


def symmetric_closed_form_separable(
    spec: TwoModeSqueezedSpec, env: EnvironmentModeSpec, time: ChannelTime
) -> bool:
    """Closed-form separability decision for identical phase-insensitive-angle environments.

    Requires ``phi_e = 0``; the state is separable iff

        (t^2 e^{-2 s_c} + r^2 nt e^{+2 s_e}) (t^2 e^{-2 s_c} + r^2 nt e^{-2 s_e}) >= 1.

    The left-hand side is minimised at ``s_e = 0``, so squeezing the
    environment only shortens the entangled phase.
    """
    if env.phi_e != 0.0:
        raise ValueError(f"closed form requires phi_e = 0, got {env.phi_e!r}")
    r2 = time.r * time.r
    t2 = 1.0 - r2
    base = t2 * math.exp(-2.0 * spec.s_c)
    product = (base + r2 * env.n_tilde * math.exp(2.0 * env.s_e)) * (
        base + r2 * env.n_tilde * math.exp(-2.0 * env.s_e)
    )
    return bool(product >= 1.0 - BOUNDARY_TOL)


def e_factor(s_c: float, n_bar: float, r_squared: float):
    """Positivity factor controlling how one-mode squeezing shifts the criterion.

    ``E = (mu nt - 1)(nt - mu) r^4 + (mu^2 nt - 2 mu + nt) r^2`` with
    ``mu = cosh(2 s_c)`` and ``nt = 2 n_bar + 1``; nonnegative for every
    ``r^2`` in [0, 1].  Accepts scalars or broadcastable arrays.
    """
    mu = np.cosh(2.0 * np.asarray(s_c, dtype=float))
    nt = 2.0 * np.asarray(n_bar, dtype=float) + 1.0
    r2 = np.asarray(r_squared, dtype=float)
    e = (mu * nt - 1.0) * (nt - mu) * r2 * r2 + (mu * mu * nt - 2.0 * mu + nt) * r2
    return float(e) if e.ndim == 0 else e


def monotonicity_gap(
    spec: TwoModeSqueezedSpec,
    env_a: EnvironmentModeSpec,
    env_b: EnvironmentModeSpec,
    time: ChannelTime,
) -> tuple[float, float]:
    """Criterion shift caused by squeezing one environment mode, and its sign factor.

    Restricted to zero-phase environments with equal mean photon numbers and
    ``s_e = 0`` on mode b.  Returns ``(gap, e)`` with

        gap = delta(s_e1, s_e2=0) - delta(s_e1=0, s_e2=0)
            = 4 r^2 t^2 nt sinh^2(s_e1) * E(r^2)

    ``E >= 0`` on [0, 1], so the gap is nonnegative: the squeezed-bath curve
    sits above the thermal one and entanglement dies no later in the purely
    thermal environment.
    """
    if env_a.phi_e != 0.0 or env_b.phi_e != 0.0:
        raise ValueError("gap formula requires both environment phases to be zero")
    if env_a.n_bar != env_b.n_bar:
        raise ValueError("gap formula requires equal mean photon numbers")
    if env_b.s_e != 0.0:
        raise ValueError(f"gap formula requires s_e = 0 on mode b, got {env_b.s_e!r}")
    r2 = time.r * time.r
    t2 = 1.0 - r2
    e = e_factor(spec.s_c, env_a.n_bar, r2)
    gap = 4.0 * r2 * t2 * env_a.n_tilde * math.sinh(env_a.s_e) ** 2 * e
    return gap, e


def separation_time(scenario: ChannelScenario) -> float:
    """Normalized time ``r*`` at which the evolved state first turns separable.

    Bisects the separability functional in ``r**2`` over [0, 1] down to
    ``|delta| < 1e-10`` or bracket width ``< 1e-12``.  Raises
    ``InitiallySeparable`` when ``delta(0) >= 0`` and ``NeverSeparable`` when
    ``delta`` stays negative on [0, 1) (e.g. vacuum environments, where the
    zero is attained only at the ``r = 1`` boundary).
    """

    def delta_at(r_squared: float) -> float:
        return simon_delta(evolve(scenario, ChannelTime(r=math.sqrt(r_squared))))

    if delta_at(0.0) >= -BOUNDARY_TOL:
        raise InitiallySeparable("state is separable already at r = 0")
    if delta_at(1.0) <= BOUNDARY_TOL:
        raise NeverSeparable("state remains entangled for all r in [0, 1)")

    lo, hi = 0.0, 1.0
    while hi - lo > _WIDTH_TOL:
        mid = 0.5 * (lo + hi)
        d = delta_at(mid)
        if abs(d) < _DELTA_TOL:
            return math.sqrt(mid)
        if d < 0.0:
            lo = mid
        else:
            hi = mid
    return math.sqrt(0.5 * (lo + hi))
