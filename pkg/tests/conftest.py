"""Shared samplers and assembly helpers for the test suite."""

import math

import numpy as np

from squeezedbath import is_physical

#: seed for every deterministic random sweep in the suite
SEED = 20260810


def assemble_diagonal_block(n1, n2, m1, m2, c1, c2):
    """4x4 variance matrix with A = diag(n1, n2), B = diag(m1, m2), C = diag(c1, c2)."""
    return np.array(
        [
            [n1, 0.0, c1, 0.0],
            [0.0, n2, 0.0, c2],
            [c1, 0.0, m1, 0.0],
            [0.0, c2, 0.0, m2],
        ]
    )


def sample_equal_block_instances(rng, count):
    """Physical (n1, n2, c1, c2) tuples for matrices with equal diagonal blocks.

    Rejection-samples until ``count`` instances pass the physicality check;
    roughly one in nine ends up entangled.
    """
    instances = []
    while len(instances) < count:
        n1 = rng.uniform(0.2, 5.0)
        n2 = rng.uniform(0.2, 5.0)
        c_max = math.sqrt(n1 * n2)
        c1 = rng.uniform(-c_max, c_max)
        c2 = rng.uniform(-c_max, c_max)
        if is_physical(assemble_diagonal_block(n1, n2, n1, n2, c1, c2)):
            instances.append((n1, n2, c1, c2))
    return instances


def sample_scenario_parameters(rng, count):
    """(s_c, n_bar, s_e, phi_e, r) tuples over the standard sampling box."""
    return [
        (
            rng.uniform(0.0, 2.0),
            rng.uniform(0.0, 3.0),
            rng.uniform(0.0, 1.0),
            rng.uniform(0.0, 2.0 * math.pi),
            rng.uniform(0.0, 1.0),
        )
        for _ in range(count)
    ]


def evolved_block_entries(s_c, n_bar, s_e1, s_e2, r):
    """Diagonal-block entries (n1, n2, m1, m2, c) of a zero-phase evolved state."""
    mu, lam = math.cosh(2.0 * s_c), math.sinh(2.0 * s_c)
    nt = 2.0 * n_bar + 1.0
    t2 = 1.0 - r * r
    n1 = t2 * mu + r * r * nt * math.exp(-2.0 * s_e1)
    n2 = t2 * mu + r * r * nt * math.exp(2.0 * s_e1)
    m1 = t2 * mu + r * r * nt * math.exp(-2.0 * s_e2)
    m2 = t2 * mu + r * r * nt * math.exp(2.0 * s_e2)
    return n1, n2, m1, m2, lam * t2
