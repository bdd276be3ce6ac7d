import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearfield.coupling import (
    FREE_SPACE_IMPEDANCE,
    CouplingModel,
    SelfImpedanceParams,
    coupling_value,
    phi,
    psi,
    self_impedance,
    wavenumber,
)

from oracles import hertzian_coupling_derivative, small_x_psi_series

EPS = np.finfo(float).eps


class TestPsi:
    def test_at_pi(self):
        # sin(pi) = 0 leaves only the cos term
        assert psi(np.pi) == pytest.approx(-3.0 / (2.0 * np.pi**2), rel=1e-14)

    def test_small_x_taylor(self):
        x = 1e-3
        assert abs(psi(x) - (1.0 - 0.2 * x**2)) < 1e-9
        # direct evaluation at small x cancels ~1/x^2 sized terms, so the
        # achievable agreement is eps/x^2, not eps
        assert psi(x) == pytest.approx(small_x_psi_series(x), abs=10 * EPS / x**2)

    def test_matches_real_part_of_complex_form(self):
        x = 5.1373
        assert psi(x) == pytest.approx(
            coupling_value(CouplingModel.HERTZIAN, x).real, abs=1e-15
        )

    def test_array_input(self):
        xs = np.array([1.0, 2.0, np.pi])
        np.testing.assert_allclose(psi(xs), [psi(1.0), psi(2.0), psi(np.pi)])


class TestPhi:
    def test_at_half_pi(self):
        # cos(pi/2) = 0 leaves only the sin term
        assert phi(np.pi / 2) == pytest.approx(-6.0 / np.pi**2, rel=1e-14)

    def test_small_x_dominant_term(self):
        x = 1e-3
        assert abs(phi(x) - (-1.5 / x**3)) / abs(phi(x)) < 1e-5

    def test_at_two_pi(self):
        expected = 1.5 * (1.0 / (2 * np.pi) - 1.0 / (2 * np.pi) ** 3)
        assert phi(2 * np.pi) == pytest.approx(expected, rel=1e-14)
        assert phi(2 * np.pi) == pytest.approx(0.2326852519316181, abs=1e-15)

    def test_matches_imag_part_of_complex_form(self):
        x = 5.1373
        assert phi(x) == pytest.approx(
            coupling_value(CouplingModel.HERTZIAN, x).imag, abs=1e-15
        )


@pytest.mark.parametrize("func", [psi, phi])
@pytest.mark.parametrize("bad", [0.0, -1.0, np.nan, np.inf, 1e-9])
def test_domain_errors(func, bad):
    with pytest.raises(ValueError):
        func(bad)


def test_domain_error_in_array():
    with pytest.raises(ValueError):
        psi(np.array([1.0, -2.0]))


class TestCouplingValue:
    def test_far_at_quarter_turn(self):
        # e^{-j pi/2} = -j, so the far value is purely real: 3/pi
        value = coupling_value(CouplingModel.FAR, np.pi / 2)
        assert value == pytest.approx(3.0 / np.pi + 0j, abs=1e-15)

    @pytest.mark.parametrize(
        "x, expected",
        [
            (5.1373, -0.26601777718135454 + 0.12036664654614177j),
            (1.59932, 0.93751709565352623 - 0.02674868589713834j),
            (6.73662, 0.09753905999475988 + 0.20016294988271872j),
        ],
    )
    def test_far_reference_values(self, x, expected):
        assert coupling_value(CouplingModel.FAR, x) == pytest.approx(
            expected, abs=1e-14
        )

    def test_hertzian_minus_mid_identity(self):
        rng = np.random.default_rng(3)
        for x in rng.uniform(0.2, 30.0, 50):
            delta = coupling_value(CouplingModel.HERTZIAN, x) - coupling_value(
                CouplingModel.MID, x
            )
            expected = -1.5j * np.exp(-1j * x) / x**3
            assert delta == pytest.approx(expected, rel=1e-12, abs=1e-15)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            coupling_value(CouplingModel.FAR, 0.0)
        with pytest.raises(ValueError):
            coupling_value(CouplingModel.FAR, -1.0)

    def test_accepts_model_by_value(self):
        assert coupling_value("far", 2.0) == coupling_value(CouplingModel.FAR, 2.0)

    def test_array_evaluation_matches_scalar(self):
        xs = np.array([0.5, 1.0, 4.76])
        values = coupling_value(CouplingModel.MID, xs)
        for x, v in zip(xs, values):
            assert v == coupling_value(CouplingModel.MID, x)


class TestEnvelopes:
    @given(st.floats(min_value=1e-6, max_value=1e6))
    def test_far_modulus_is_exact(self, x):
        assert abs(coupling_value(CouplingModel.FAR, x)) == pytest.approx(
            1.5 / x, rel=1e-13
        )

    @given(st.floats(min_value=1.0, max_value=1e6))
    def test_hertzian_bounded_by_far(self, x):
        assert abs(coupling_value(CouplingModel.HERTZIAN, x)) <= 1.5 / x * (1 + 1e-12)

    @given(st.floats(min_value=1.0, max_value=1e6))
    def test_mid_bounded_by_sqrt2_far(self, x):
        bound = np.sqrt(2.0) * 1.5 / x
        assert abs(coupling_value(CouplingModel.MID, x)) <= bound * (1 + 1e-12)

    @pytest.mark.parametrize("eps", [1e-3, 1e-6])
    def test_all_models_vanish_at_infinity(self, eps):
        x = 3.0 / eps
        for model in CouplingModel:
            assert abs(coupling_value(model, x)) < eps


@settings(max_examples=200)
@given(st.floats(min_value=0.5, max_value=1e3))
def test_hertzian_equals_psi_plus_j_phi(x):
    # two independent evaluation routes: single-exponential vs sin/cos sums
    direct = coupling_value(CouplingModel.HERTZIAN, x)
    assert abs(direct - (psi(x) + 1j * phi(x))) < 1e-13 * max(1.0, abs(direct))


@pytest.mark.parametrize("x", [0.7, 1.3, 4.76, 5.1373, 12.0])
def test_derivative_matches_finite_differences(x):
    h = 1e-6
    fd = (
        coupling_value(CouplingModel.HERTZIAN, x + h)
        - coupling_value(CouplingModel.HERTZIAN, x - h)
    ) / (2 * h)
    assert fd == pytest.approx(hertzian_coupling_derivative(x), rel=1e-8)


class TestSelfImpedance:
    def test_radiation_resistance_only(self):
        z = self_impedance(SelfImpedanceParams(wavelength=1.0, dipole_length=0.01))
        assert z.imag == 0.0
        assert z.real == pytest.approx(0.07890221238693115, rel=1e-12)
        assert z.real == pytest.approx(
            FREE_SPACE_IMPEDANCE * (2 * np.pi / 3) * 1e-4, rel=1e-15
        )

    def test_reactive_part_vanishes_far_away(self):
        z = self_impedance(
            SelfImpedanceParams(wavelength=1.0, dipole_length=0.01, field_distance=1e9)
        )
        assert z.imag / z.real < 1e-20

    def test_reactive_equals_real_at_unit_kr(self):
        # wavelength 2*pi gives k = 1, so field_distance 1 means kr = 1
        z = self_impedance(
            SelfImpedanceParams(
                wavelength=2 * np.pi, dipole_length=0.02, field_distance=1.0
            )
        )
        assert z.imag == pytest.approx(z.real, rel=1e-15)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"wavelength": 0.0, "dipole_length": 0.01},
            {"wavelength": 1.0, "dipole_length": -0.01},
            {"wavelength": 1.0, "dipole_length": 0.01, "field_distance": 0.0},
            {"wavelength": np.nan, "dipole_length": 0.01},
        ],
    )
    def test_invalid_params(self, kwargs):
        with pytest.raises(ValueError):
            SelfImpedanceParams(**kwargs)


def test_wavenumber():
    assert wavenumber(2 * np.pi) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        wavenumber(0.0)
