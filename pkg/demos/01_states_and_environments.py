"""Tour of the state and environment constructors.

Builds a two-mode squeezed state and a few squeezed-thermal reservoir modes,
then inspects their variance matrices, characteristic-function values, and
physicality.
"""

import math

import numpy as np

from squeezedbath import (
    EnvironmentModeSpec,
    TwoModeSqueezedSpec,
    eval_characteristic,
    is_physical,
    mean_excitation,
    squeezed_thermal_variance,
    symplectic_eigenvalues,
    tmss_variance,
)

np.set_printoptions(precision=5, suppress=True)

print("=== Two-mode squeezed state ===")
spec = TwoModeSqueezedSpec(s_c=1.0)
v = tmss_variance(spec)
print(f"s_c = {spec.s_c}: mu = cosh(2 s_c) = {spec.mu:.5f}, lam = sinh(2 s_c) = {spec.lam:.5f}")
print(v)
print(f"det V = {np.linalg.det(v):.12f}  (pure state: exactly 1)")
print(f"symplectic eigenvalues: {symplectic_eigenvalues(v)}  (pure state: both 1)")
print(f"physical? {is_physical(v)}")

print()
print("s_c = 0 gives the vacuum, whose variance matrix is the identity:")
print(tmss_variance(TwoModeSqueezedSpec(0.0)))

print()
print("=== Squeezed-thermal reservoir modes ===")
for env in (
    EnvironmentModeSpec(n_bar=1.0),
    EnvironmentModeSpec(n_bar=0.0, s_e=0.5),
    EnvironmentModeSpec(n_bar=1.0, s_e=0.5, phi_e=math.pi / 2),
):
    r = squeezed_thermal_variance(env)
    print(f"n_bar={env.n_bar}, s_e={env.s_e}, phi_e={env.phi_e:.4f}:")
    print(r)
    print(f"  det R = {np.linalg.det(r):.6f} = n_tilde^2 = {env.n_tilde**2}")
    print(f"  mean excitation <a+a> = {mean_excitation(env):.6f}")

print()
print("=== Characteristic function ===")
print("The states are zero-mean Gaussians, C(z) = exp(-z.V.z / 2):")
print(f"  at the origin:            {eval_characteristic(v, np.zeros(4))}")
z = np.array([1.0, 0.0, 0.0, 0.0])
print(f"  vacuum at z=(1,0,0,0):    {eval_characteristic(np.eye(4), z):.6f} = exp(-1/2)")
z = np.array([1.0, 0.0, 1.0, 0.0])
print(f"  TMSS along (1,0,1,0):     {eval_characteristic(v, z):.6f}")
print(f"  (the correlated direction probes mu - lam = exp(-2 s_c) = {spec.mu - spec.lam:.6f})")
