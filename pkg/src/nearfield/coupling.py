"""Scalar coupling functions and self-impedance of short (Hertzian) dipoles.

All distance arguments are *electrical*: x = k * d where k = 2*pi/wavelength
and d is the physical separation in meters.  Physical quantities are converted
at the boundary (see :func:`wavenumber`); everything downstream of this module
works in dimensionless electrical units.

Three coupling models are supported for parallel dipoles placed perpendicular
to a common plane:

* ``HERTZIAN`` - the full near-field coupling, with 1/x, 1/x^2 and 1/x^3 terms,
* ``MID``      - drops the 1/x^3 term,
* ``FAR``      - keeps only the radiating 1/x term.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

#: Impedance of free space, ohms (CODATA).
FREE_SPACE_IMPEDANCE = 376.730313668

#: Electrical distances below this are rejected: all supported array
#: geometries keep antennas well separated, so a tiny x almost certainly
#: indicates a layout bug and would otherwise blow up in the 1/x^3 term.
MIN_ELECTRICAL_DISTANCE = 1e-8


class CouplingModel(enum.Enum):
    """Selects the coupling function used for mutual impedance entries."""

    HERTZIAN = "hertzian"
    MID = "mid"
    FAR = "far"


def _checked_distance(x):
    """Validate an electrical distance (scalar or array), return ndarray."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("electrical distance must be finite")
    if np.any(arr < MIN_ELECTRICAL_DISTANCE):
        raise ValueError(
            f"electrical distance must be >= {MIN_ELECTRICAL_DISTANCE} "
            f"(got minimum {arr.min() if arr.size else 'empty'})"
        )
    return arr


def _maybe_scalar(value, x):
    return value.item() if np.isscalar(x) or np.ndim(x) == 0 else value


def psi(x):
    """Real part of the Hertzian coupling function.

    psi(x) = 3/2 * (sin x / x + cos x / x^2 - sin x / x^3)

    Parameters
    ----------
    x : float or ndarray
        Electrical distance(s), > 0.

    Returns
    -------
    float or ndarray
    """
    xv = _checked_distance(x)
    s, c = np.sin(xv), np.cos(xv)
    return _maybe_scalar(1.5 * (s / xv + c / xv**2 - s / xv**3), x)


def phi(x):
    """Imaginary part of the Hertzian coupling function.

    phi(x) = 3/2 * (cos x / x - sin x / x^2 - cos x / x^3)

    Parameters
    ----------
    x : float or ndarray
        Electrical distance(s), > 0.

    Returns
    -------
    float or ndarray
    """
    xv = _checked_distance(x)
    s, c = np.sin(xv), np.cos(xv)
    return _maybe_scalar(1.5 * (c / xv - s / xv**2 - c / xv**3), x)


def _hertzian(x):
    e = np.exp(-1j * x)
    return 1.5 * e * (1j / x + 1.0 / x**2 - 1j / x**3)


def _mid(x):
    e = np.exp(-1j * x)
    return 1.5 * e * (1j / x + 1.0 / x**2)


def _far(x):
    return 1.5j * np.exp(-1j * x) / x


_MODEL_FUNCS = {
    CouplingModel.HERTZIAN: _hertzian,
    CouplingModel.MID: _mid,
    CouplingModel.FAR: _far,
}


def coupling_value(model: CouplingModel, x):
    """Complex mutual-coupling value at electrical distance x.

    The Hertzian model is evaluated in single-exponential form (one sin/cos
    pair per call); its real and imaginary parts agree with :func:`psi` and
    :func:`phi` to machine precision.

    Parameters
    ----------
    model : CouplingModel
        Which coupling function to evaluate.
    x : float or ndarray
        Electrical distance(s), > 0.

    Returns
    -------
    complex or ndarray
    """
    xv = _checked_distance(x)
    return _maybe_scalar(_MODEL_FUNCS[CouplingModel(model)](xv), x)


def wavenumber(wavelength: float) -> float:
    """Wave number k = 2*pi/wavelength; converts meters to electrical units."""
    if not np.isfinite(wavelength) or wavelength <= 0.0:
        raise ValueError("wavelength must be positive and finite")
    return 2.0 * np.pi / wavelength


@dataclass(frozen=True)
class SelfImpedanceParams:
    """Parameters of an isolated short-dipole self impedance.

    ``field_distance`` controls the reactive term; when omitted the reactive
    part is dropped entirely (the convention used for matrix construction,
    where only the radiating real part matters).
    """

    wavelength: float
    dipole_length: float
    field_distance: float | None = None

    def __post_init__(self):
        if not np.isfinite(self.wavelength) or self.wavelength <= 0.0:
            raise ValueError("wavelength must be positive and finite")
        if not np.isfinite(self.dipole_length) or self.dipole_length <= 0.0:
            raise ValueError("dipole_length must be positive and finite")
        if self.field_distance is not None and (
            not np.isfinite(self.field_distance) or self.field_distance <= 0.0
        ):
            raise ValueError("field_distance must be positive and finite when given")


def self_impedance(params: SelfImpedanceParams) -> complex:
    """Self impedance of an isolated short dipole, in ohms.

    The real part is the radiation resistance
    ``Z0 * (2*pi/3) * (length/wavelength)^2``.  When ``field_distance`` is
    present the reactive near-field part, the same expression scaled by
    ``1/(k*r)^3``, is included as the imaginary component; otherwise the
    result is purely real.
    """
    resistance = (
        FREE_SPACE_IMPEDANCE
        * (2.0 * np.pi / 3.0)
        * (params.dipole_length / params.wavelength) ** 2
    )
    if params.field_distance is None:
        return complex(resistance, 0.0)
    kr = wavenumber(params.wavelength) * params.field_distance
    return complex(resistance, resistance / kr**3)
