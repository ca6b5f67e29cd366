"""Gaussian state and environment constructors over vacuum-normalized variance matrices.

All states here are zero-mean Gaussians, so a state is fully described by its
variance (covariance) matrix.  Two-mode matrices are 4x4 and use the quadrature
ordering ``(eta_i, eta_r, xi_i, xi_r)``: imaginary and real parts of the mode-a
characteristic variable first, then mode b.  Units are vacuum-normalized, i.e.
the vacuum variance matrix is the identity and physical states have all
symplectic eigenvalues >= 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

Matrix = NDArray[np.float64]

#: slack applied to the ``nu >= 1`` physicality threshold
PHYSICALITY_TOL = 1e-9

SIGMA_Z = np.diag([1.0, -1.0])

# single-mode symplectic form on (eta_i, eta_r); sigma_y = -i*J, so even products
# of sigma_y conjugations reduce to real J conjugations
J = np.array([[0.0, 1.0], [-1.0, 0.0]])

#: two-mode symplectic form, block diagonal over the (eta_i, eta_r, xi_i, xi_r) ordering
OMEGA = np.block([[J, np.zeros((2, 2))], [np.zeros((2, 2)), J]])


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def _require_nonnegative(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value!r}")
    return value


@dataclass(frozen=True)
class TwoModeSqueezedSpec:
    """Two-mode squeezing parameter, taken real and nonnegative.

    Derived quantities: ``mu = cosh(2 s_c)`` and ``lam = sinh(2 s_c)`` satisfy
    ``mu**2 - lam**2 = 1``.
    """

    s_c: float

    def __post_init__(self) -> None:
        _require_nonnegative("s_c", self.s_c)

    @property
    def mu(self) -> float:
        return math.cosh(2.0 * self.s_c)

    @property
    def lam(self) -> float:
        return math.sinh(2.0 * self.s_c)


@dataclass(frozen=True)
class EnvironmentModeSpec:
    """One squeezed-thermal reservoir mode.

    Parameters
    ----------
    n_bar:
        Mean thermal photon number, >= 0.
    s_e:
        Squeezing magnitude, >= 0 (phases carry the sign freedom).
    phi_e:
        Squeezing phase, normalized into [0, 2*pi).
    """

    n_bar: float
    s_e: float = 0.0
    phi_e: float = 0.0

    def __post_init__(self) -> None:
        _require_nonnegative("n_bar", self.n_bar)
        _require_nonnegative("s_e", self.s_e)
        phi = _require_finite("phi_e", self.phi_e) % (2.0 * math.pi)
        object.__setattr__(self, "phi_e", phi)

    @property
    def n_tilde(self) -> float:
        """Thermal variance factor 2*n_bar + 1 (>= 1)."""
        return 2.0 * self.n_bar + 1.0

    @property
    def zeta_e(self) -> complex:
        """Complex squeezing parameter s_e * exp(i phi_e)."""
        return self.s_e * cmath.exp(1j * self.phi_e)


@dataclass(frozen=True)
class SymmetricBlockForm:
    """Reduced block parameters after local squeezing symmetrization.

    Holds the common diagonal entry ``n`` and the two correlation factors
    ``c`` and ``c_prime`` of the symmetrized matrix; ``n >= 1`` for any state
    obeying the uncertainty principle.
    """

    n: float
    c: float
    c_prime: float

    def __post_init__(self) -> None:
        _require_finite("c", self.c)
        _require_finite("c_prime", self.c_prime)
        n = _require_finite("n", self.n)
        if n < 1.0 - PHYSICALITY_TOL:
            raise ValueError(f"n must be >= 1 for a physical reduced form, got {n!r}")

    @property
    def c_m(self) -> float:
        """Mean of the correlation magnitudes, (|c| + |c'|) / 2."""
        return 0.5 * (abs(self.c) + abs(self.c_prime))

    @property
    def c_d(self) -> float:
        """Half-difference of the correlation magnitudes, (|c| - |c'|) / 2."""
        return 0.5 * (abs(self.c) - abs(self.c_prime))


def tmss_variance(spec: TwoModeSqueezedSpec) -> Matrix:
    """Variance matrix of the two-mode squeezed state with parameter ``spec.s_c``.

    Diagonal blocks are ``mu * I``, off-diagonal blocks ``-lam * sigma_z``; the
    state is pure, so the full determinant is 1 and both symplectic
    eigenvalues equal 1.  ``s_c = 0`` gives exactly the identity (vacuum).
    """
    mu, lam = spec.mu, spec.lam
    v = np.zeros((4, 4))
    v[:2, :2] = mu * np.eye(2)
    v[2:, 2:] = mu * np.eye(2)
    v[:2, 2:] = -lam * SIGMA_Z
    v[2:, :2] = -lam * SIGMA_Z
    return v


def squeezed_thermal_variance(env: EnvironmentModeSpec) -> Matrix:
    """2x2 variance matrix of a squeezed thermal mode over (eta_i, eta_r).

    Entries are ``[[a_minus, b], [b, a_plus]]`` with
    ``a_pm = n_tilde * (cosh 2 s_e +- cos(phi_e) sinh 2 s_e)`` and
    ``b = n_tilde * sin(phi_e) sinh 2 s_e``; the determinant equals
    ``n_tilde**2`` for every phase.
    """
    nt = env.n_tilde
    ch, sh = math.cosh(2.0 * env.s_e), math.sinh(2.0 * env.s_e)
    a_minus = nt * (ch - math.cos(env.phi_e) * sh)
    a_plus = nt * (ch + math.cos(env.phi_e) * sh)
    b = nt * math.sin(env.phi_e) * sh
    return np.array([[a_minus, b], [b, a_plus]])


def mean_excitation(env: EnvironmentModeSpec) -> float:
    """Average photon number of a squeezed thermal mode.

    Equals ``n_bar * cosh(2 s_e) + sinh(s_e)**2`` and is independent of the
    squeezing phase.
    """
    return env.n_bar * math.cosh(2.0 * env.s_e) + math.sinh(env.s_e) ** 2


def eval_characteristic(v: Matrix, z: NDArray[np.float64]) -> float:
    """Evaluate the Weyl characteristic function ``exp(-z.V.z / 2)`` at ``z``.

    For a physical variance matrix the value lies in (0, 1], equals 1 at the
    origin, and is even in ``z``.
    """
    z = np.asarray(z, dtype=float)
    return float(math.exp(-0.5 * float(z @ v @ z)))


def _require_symmetric(v: Matrix) -> Matrix:
    v = np.asarray(v, dtype=float)
    if v.shape != (4, 4):
        raise ValueError(f"expected a 4x4 variance matrix, got shape {v.shape}")
    if not np.array_equal(v, v.T):
        raise ValueError("variance matrix must be exactly symmetric")
    if not np.all(np.isfinite(v)):
        raise ValueError("variance matrix entries must be finite")
    return v


def symplectic_eigenvalues(v: Matrix) -> NDArray[np.float64]:
    """Both symplectic eigenvalues of a 4x4 symmetric variance matrix.

    Computed as the positive square roots of the (doubly degenerate)
    eigenvalue pairs of ``(Omega V)**2``.  Returned in ascending order.
    """
    v = _require_symmetric(v)
    m = OMEGA @ v
    w = np.linalg.eigvals(m @ m)
    nus = np.sort(np.sqrt(np.maximum(-w.real, 0.0)))
    return np.array([nus[0], nus[2]])


def is_physical(v: Matrix, tol: float = PHYSICALITY_TOL) -> bool:
    """True iff both symplectic eigenvalues of ``v`` are >= 1 - tol.

    Raises ``ValueError`` for non-symmetric input.
    """
    return bool(symplectic_eigenvalues(v)[0] >= 1.0 - tol)


def reduce_to_symmetric(n1: float, n2: float, c1: float, c2: float) -> SymmetricBlockForm:
    """Symmetrize diagonal-block parameters by local squeezing.

    Maps ``(n1, n2, c1, c2)`` to ``n = sqrt(n1 n2)``, ``c = c1 sqrt(n2/n1)``,
    ``c' = c2 sqrt(n1/n2)``.  The products ``(n - |c|)(n - |c'|)`` and
    ``(n1 - |c1|)(n2 - |c2|)`` coincide, which is what makes the symmetrized
    separability threshold usable on the original parameters.
    """
    n1 = _require_finite("n1", n1)
    n2 = _require_finite("n2", n2)
    if n1 <= 0 or n2 <= 0:
        raise ValueError(f"n1 and n2 must be positive, got {n1!r}, {n2!r}")
    ratio = math.sqrt(n2 / n1)
    return SymmetricBlockForm(n=math.sqrt(n1 * n2), c=c1 * ratio, c_prime=c2 / ratio)
