"""Normalized impedance matrices of antenna layouts and their determinants.

The normalized matrix of an n-antenna layout has unit diagonal; entry (i, k)
for i != k is ``f(x_ik) / (1 + load_ratio)`` where ``f`` is the selected
coupling function and ``x_ik`` the pairwise electrical distance.  The linear
current/voltage system of the array is solvable exactly when this matrix is
nonsingular, which makes ``|det|`` the quantity of interest everywhere else
in this package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coupling import MIN_ELECTRICAL_DISTANCE, CouplingModel, coupling_value


class GeometryError(ValueError):
    """Invalid antenna geometry (coincident antennas, collision-risk radius)."""


class CircuitError(ValueError):
    """Invalid circuit parameters (degenerate normalization)."""


@dataclass(frozen=True, eq=False)
class ElectricalLayout:
    """Planar antenna positions in electrical units (x = k * meters).

    Positions are stored as a read-only (n, 2) float array.  All pairwise
    distances must be strictly positive.
    """

    positions: np.ndarray

    def __post_init__(self):
        pos = np.atleast_2d(np.asarray(self.positions, dtype=float))
        if pos.ndim != 2 or pos.shape[1] != 2 or pos.shape[0] < 1:
            raise GeometryError(f"positions must have shape (n, 2), got {pos.shape}")
        if not np.all(np.isfinite(pos)):
            raise GeometryError("positions must be finite")
        pos = np.ascontiguousarray(pos)
        pos.flags.writeable = False
        object.__setattr__(self, "positions", pos)
        if self.n > 1:
            d = self.distance_matrix()
            off = d[~np.eye(self.n, dtype=bool)]
            if off.min() <= 0.0:
                raise GeometryError("coincident antennas: zero pairwise distance")

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    def distance_matrix(self) -> np.ndarray:
        """Pairwise Euclidean distances, shape (n, n), zero diagonal."""
        delta = self.positions[:, None, :] - self.positions[None, :, :]
        return np.linalg.norm(delta, axis=-1)


@dataclass(frozen=True)
class CircuitParams:
    """Dimensionless circuit load: load_ratio = Z_load / Z_self."""

    load_ratio: complex = 0j

    def __post_init__(self):
        ratio = complex(self.load_ratio)
        object.__setattr__(self, "load_ratio", ratio)
        if ratio == -1.0 + 0j:
            raise CircuitError("1 + load_ratio must be nonzero")


def build_matrix(
    layout: ElectricalLayout,
    model: CouplingModel,
    circuit: CircuitParams = CircuitParams(),
) -> np.ndarray:
    """Build the normalized impedance matrix of a layout.

    Returns a complex (n, n) array with exact unit diagonal and symmetric
    off-diagonal entries ``f_model(x_ik) / (1 + load_ratio)``.

    Raises
    ------
    GeometryError
        If any pair of antennas is closer than the supported minimum
        electrical distance.
    """
    d = layout.distance_matrix()
    n = layout.n
    if n > 1:
        off = ~np.eye(n, dtype=bool)
        if d[off].min() < MIN_ELECTRICAL_DISTANCE:
            raise GeometryError(
                f"antennas closer than {MIN_ELECTRICAL_DISTANCE} electrical units"
            )
    np.fill_diagonal(d, 1.0)  # placeholder, diagonal is overwritten below
    matrix = np.asarray(coupling_value(model, d), dtype=complex)
    matrix /= 1.0 + circuit.load_ratio
    np.fill_diagonal(matrix, 1.0 + 0j)
    return matrix


def determinant(matrix: np.ndarray) -> complex:
    """Determinant of a complex square matrix.

    Uses LU factorization with partial pivoting on the largest modulus,
    accumulating the sign of row swaps.  A singular matrix yields 0 (or a
    value of modulus ~0), never an exception.
    """
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    sign = 1.0
    for k in range(n - 1):
        pivot = k + int(np.argmax(np.abs(a[k:, k])))
        if a[pivot, k] == 0j:
            return 0j
        if pivot != k:
            a[[k, pivot]] = a[[pivot, k]]
            sign = -sign
        factors = a[k + 1 :, k] / a[k, k]
        a[k + 1 :, k + 1 :] -= np.outer(factors, a[k, k + 1 :])
    return complex(sign * np.prod(np.diag(a)))


def is_diagonally_dominant(matrix: np.ndarray) -> bool:
    """True iff every row's diagonal modulus strictly exceeds the sum of its
    off-diagonal moduli (a sufficient condition for a nonzero determinant)."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    mods = np.abs(a)
    diag = np.diag(mods)
    off_sums = mods.sum(axis=1) - diag
    return bool(np.all(diag > off_sums))


def safe_distance_bound(n: int, model: CouplingModel) -> float:
    """Minimum pairwise electrical distance guaranteeing a nonsingular matrix.

    Above this separation every off-diagonal modulus is below 1/(n-1), so the
    normalized matrix is diagonally dominant and its determinant cannot be
    zero.  The bound follows from the coupling envelopes for x >= 1:
    |f(x)| <= 1.5/x for the Hertzian and far models, and
    |f_mid(x)| <= sqrt(2) * 1.5/x for the mid model, giving

        x > 1.5 * (n - 1)            (Hertzian, far)
        x > sqrt(2) * 1.5 * (n - 1)  (mid)
    """
    if n < 2:
        raise ValueError("safe distance bound requires n >= 2 antennas")
    bound = 1.5 * (n - 1)
    if CouplingModel(model) is CouplingModel.MID:
        bound *= np.sqrt(2.0)
    return float(bound)
