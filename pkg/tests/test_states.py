"""State and environment constructors, physicality, and the block symmetrization."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from squeezedbath import (
    EnvironmentModeSpec,
    SymmetricBlockForm,
    TwoModeSqueezedSpec,
    eval_characteristic,
    is_physical,
    mean_excitation,
    reduce_to_symmetric,
    squeezed_thermal_variance,
    symplectic_eigenvalues,
    tmss_variance,
)

COSH2 = 3.7621956910836314  # cosh 2
SINH2 = 3.626860407847019  # sinh 2


class TestTwoModeSqueezedState:
    def test_vacuum_is_exactly_identity(self):
        np.testing.assert_array_equal(tmss_variance(TwoModeSqueezedSpec(0.0)), np.eye(4))

    def test_unit_squeezing_entries(self):
        v = tmss_variance(TwoModeSqueezedSpec(1.0))
        assert_allclose(np.diag(v), COSH2, rtol=1e-15)
        assert_allclose(v[0, 2], -SINH2, rtol=1e-15)
        assert_allclose(v[1, 3], SINH2, rtol=1e-15)
        assert v[0, 3] == v[1, 2] == 0.0
        np.testing.assert_array_equal(v, v.T)

    @pytest.mark.parametrize("s_c", [0.3, 1.0, 2.0])
    def test_pure_state_has_unit_determinant(self, s_c):
        assert_allclose(np.linalg.det(tmss_variance(TwoModeSqueezedSpec(s_c))), 1.0, rtol=1e-9)

    @pytest.mark.parametrize("s_c", [0.0, 0.3, 1.0, 2.0])
    def test_pure_state_symplectic_eigenvalues_are_one(self, s_c):
        nus = symplectic_eigenvalues(tmss_variance(TwoModeSqueezedSpec(s_c)))
        assert_allclose(nus, 1.0, atol=1e-8)

    @pytest.mark.parametrize("bad", [-0.1, math.nan, math.inf])
    def test_rejects_bad_squeezing(self, bad):
        with pytest.raises(ValueError):
            TwoModeSqueezedSpec(bad)

    def test_mu_lambda_hyperbolic_identity(self):
        for s_c in np.linspace(0.0, 3.0, 31):
            spec = TwoModeSqueezedSpec(float(s_c))
            assert_allclose(spec.mu**2 - spec.lam**2, 1.0, rtol=1e-9, atol=1e-9)


class TestSqueezedThermalMode:
    def test_plain_thermal_is_scaled_identity(self):
        for phi in (0.0, 1.0, math.pi):
            r = squeezed_thermal_variance(EnvironmentModeSpec(n_bar=1.0, s_e=0.0, phi_e=phi))
            np.testing.assert_array_equal(r, 3.0 * np.eye(2))

    def test_squeezed_vacuum_diagonal(self):
        r = squeezed_thermal_variance(EnvironmentModeSpec(n_bar=0.0, s_e=0.5, phi_e=0.0))
        assert_allclose(r, np.diag([0.36787944117144233, 2.718281828459045]), rtol=1e-15)

    def test_quarter_phase_entries(self):
        r = squeezed_thermal_variance(EnvironmentModeSpec(n_bar=1.0, s_e=0.5, phi_e=math.pi / 2))
        assert_allclose(np.diag(r), 3.0 * math.cosh(1.0), rtol=1e-12)
        assert_allclose(r[0, 1], 3.0 * math.sinh(1.0), rtol=1e-12)

    def test_determinant_is_phase_independent(self):
        for n_bar in (0.0, 0.5, 1.0, 2.7):
            for s_e in (0.0, 0.3, 1.0):
                for phi in np.linspace(0.0, 2.0 * math.pi, 9, endpoint=False):
                    env = EnvironmentModeSpec(n_bar=n_bar, s_e=s_e, phi_e=float(phi))
                    assert_allclose(
                        np.linalg.det(squeezed_thermal_variance(env)),
                        env.n_tilde**2,
                        rtol=1e-9,
                    )

    def test_phase_is_normalized_into_principal_range(self):
        assert EnvironmentModeSpec(1.0, 0.2, -math.pi / 2).phi_e == pytest.approx(1.5 * math.pi)
        assert EnvironmentModeSpec(1.0, 0.2, 2.0 * math.pi).phi_e == 0.0

    def test_n_tilde_and_zeta(self):
        env = EnvironmentModeSpec(n_bar=1.5, s_e=0.4, phi_e=math.pi / 3)
        assert env.n_tilde == 4.0
        assert env.zeta_e == pytest.approx(0.4 * np.exp(1j * math.pi / 3))

    @pytest.mark.parametrize("kwargs", [{"n_bar": -0.5}, {"n_bar": 1.0, "s_e": -0.1}, {"n_bar": math.nan}])
    def test_rejects_bad_parameters(self, kwargs):
        with pytest.raises(ValueError):
            EnvironmentModeSpec(**kwargs)


class TestMeanExcitation:
    def test_unsqueezed_thermal(self):
        assert mean_excitation(EnvironmentModeSpec(n_bar=1.0)) == 1.0

    def test_squeezed_vacuum(self):
        assert_allclose(mean_excitation(EnvironmentModeSpec(0.0, 1.0)), math.sinh(1.0) ** 2, rtol=1e-12)

    def test_squeezed_thermal(self):
        expected = math.cosh(1.0) + math.sinh(0.5) ** 2
        assert_allclose(mean_excitation(EnvironmentModeSpec(1.0, 0.5)), expected, rtol=1e-12)

    def test_independent_of_phase(self):
        values = {mean_excitation(EnvironmentModeSpec(0.7, 0.4, phi)) for phi in (0.0, 1.0, 2.0, 5.0)}
        assert len(values) == 1


class TestCharacteristicFunction:
    def test_normalized_at_origin(self):
        assert eval_characteristic(tmss_variance(TwoModeSqueezedSpec(1.3)), np.zeros(4)) == 1.0

    def test_vacuum_gaussian_width(self):
        assert_allclose(eval_characteristic(np.eye(4), np.array([1.0, 0, 0, 0])), math.exp(-0.5), rtol=1e-15)

    def test_correlated_direction_of_tmss(self):
        v = tmss_variance(TwoModeSqueezedSpec(1.0))
        value = eval_characteristic(v, np.array([1.0, 0.0, 1.0, 0.0]))
        assert_allclose(value, math.exp(-math.exp(-2.0)), rtol=1e-12)

    @given(
        s_c=st.floats(0.0, 2.0),
        z=st.lists(st.floats(-3.0, 3.0), min_size=4, max_size=4),
    )
    def test_even_in_z(self, s_c, z):
        v = tmss_variance(TwoModeSqueezedSpec(s_c))
        z = np.array(z)
        assert eval_characteristic(v, z) == eval_characteristic(v, -z)

    def test_bounded_for_physical_states(self):
        rng = np.random.default_rng(3)
        v = tmss_variance(TwoModeSqueezedSpec(0.8))
        for _ in range(50):
            value = eval_characteristic(v, rng.normal(size=4))
            assert 0.0 < value <= 1.0


class TestPhysicality:
    def test_vacuum_is_physical(self):
        assert is_physical(np.eye(4))

    def test_below_vacuum_noise_is_not(self):
        assert not is_physical(0.5 * np.eye(4))

    def test_tmss_is_physical(self):
        assert is_physical(tmss_variance(TwoModeSqueezedSpec(1.0)))

    def test_rejects_asymmetric_input(self):
        v = np.eye(4)
        v[0, 1] = 0.3
        with pytest.raises(ValueError, match="symmetric"):
            is_physical(v)


class TestReduceToSymmetric:
    def test_already_symmetric_is_unchanged(self):
        form = reduce_to_symmetric(3.0, 3.0, 1.5, -0.5)
        assert (form.n, form.c, form.c_prime) == (3.0, 1.5, -0.5)

    def test_worked_example(self):
        form = reduce_to_symmetric(4.0, 1.0, 2.0, 0.0)
        assert (form.n, form.c, form.c_prime) == (2.0, 1.0, 0.0)
        assert (form.c_m, form.c_d) == (0.5, 0.5)

    @pytest.mark.parametrize("n1,n2", [(0.0, 1.0), (1.0, -2.0)])
    def test_rejects_nonpositive_diagonals(self, n1, n2):
        with pytest.raises(ValueError):
            reduce_to_symmetric(n1, n2, 0.0, 0.0)

    def test_rejects_subvacuum_reduced_form(self):
        with pytest.raises(ValueError, match="n must be >= 1"):
            reduce_to_symmetric(0.5, 0.5, 0.0, 0.0)

    @given(
        product=st.floats(1.0, 10.0),
        ratio=st.floats(0.1, 10.0),
        c1=st.floats(-3.0, 3.0),
        c2=st.floats(-3.0, 3.0),
    )
    def test_preserves_separability_product(self, product, ratio, c1, c2):
        n1 = math.sqrt(product * ratio)
        n2 = math.sqrt(product / ratio)
        form = reduce_to_symmetric(n1, n2, c1, c2)
        original = (n1 - abs(c1)) * (n2 - abs(c2))
        reduced = (form.n - abs(form.c)) * (form.n - abs(form.c_prime))
        assert_allclose(reduced, original, rtol=1e-9, atol=1e-12)

    def test_form_validates_n(self):
        with pytest.raises(ValueError):
            SymmetricBlockForm(n=0.9, c=0.0, c_prime=0.0)
