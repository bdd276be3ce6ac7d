"""Winding-number certificates for singular impedance configurations.

The existence argument implemented here: move every antenna of a layout along
a closed loop parameterized by t in [0, 1].  The determinant of the normalized
matrix then traces a closed curve in the complex plane.  If that curve winds
around the origin, shrinking the loop radius continuously to zero contracts
the determinant curve to a single point, and on the way the swept region
covers everything initially enclosed, the origin included.  Some intermediate
radius therefore hits determinant zero exactly, so a singular configuration
exists inside the swept tube of layouts.  The certificate produced here is the
integer winding number of the sampled curve plus the explicit refined zero
from :func:`find_zero`.

Winding numbers are computed from principal-branch argument differences of
consecutive samples.  A certificate counts as *certified* only when every
consecutive argument step is below pi/2 (half the unambiguous branch-tracking
limit, as a margin against aliasing) and the curve stays away from the origin.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .coupling import CouplingModel
from .impedance import CircuitParams, ElectricalLayout, build_matrix, determinant
from .layouts import ClosedTrajectory

#: Samples with modulus at or below this cannot be argument-tracked.
MODULUS_FLOOR = 1e-300

#: Per-segment refinement limit: bisecting beyond this cannot be expected to
#: certify a curve that passes essentially through the origin.
MAX_REFINEMENT_DEPTH = 20

_HALF_PI = np.pi / 2.0


@dataclass(frozen=True)
class DeterminantCurve:
    """Closed complex curve sampled at strictly increasing t in [0, 1]."""

    t: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if t.ndim != 1 or t.shape != values.shape[:1] or t.size < 2:
            raise ValueError("curve needs matching 1-d t and values arrays")
        if t[0] != 0.0 or t[-1] != 1.0 or np.any(np.diff(t) <= 0.0):
            raise ValueError("t must increase strictly from 0 to 1")
        if abs(values[-1] - values[0]) > 1e-12:
            raise ValueError("curve is not closed: value(1) != value(0)")
        t.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.t.size

    @property
    def min_modulus(self) -> float:
        return float(np.abs(self.values).min())

    def write_csv(self, path) -> None:
        """Write samples as CSV with columns t, re_det, im_det, abs_det."""
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["t", "re_det", "im_det", "abs_det"])
            for ti, vi in zip(self.t, self.values):
                writer.writerow(
                    [
                        repr(float(ti)),
                        repr(float(vi.real)),
                        repr(float(vi.imag)),
                        repr(float(abs(vi))),
                    ]
                )


@dataclass(frozen=True)
class WindingCertificate:
    """Result of a certified winding-number computation."""

    winding: int
    min_modulus: float
    samples_used: int
    certified: bool

    @property
    def encloses_origin(self) -> bool:
        return self.certified and self.winding != 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "winding": self.winding,
                "min_modulus": self.min_modulus,
                "samples_used": self.samples_used,
                "certified": self.certified,
            }
        )


@dataclass(frozen=True)
class ZeroLocation:
    """Outcome of Newton refinement toward a zero-determinant configuration."""

    parameters: np.ndarray
    residual_modulus: float
    iterations: int
    converged: bool
    residual_history: tuple[float, ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "parameters": np.asarray(self.parameters, dtype=float).tolist(),
                "residual_modulus": self.residual_modulus,
                "iterations": self.iterations,
                "converged": self.converged,
            }
        )


def sample_closed_curve(
    fn: Callable[[float], complex],
    initial_samples: int = 64,
    max_depth: int = MAX_REFINEMENT_DEPTH,
    modulus_floor: float = MODULUS_FLOOR,
) -> DeterminantCurve:
    """Adaptively sample a closed complex curve with argument tracking.

    Starts from uniformly spaced t and bisects every segment whose endpoint
    arguments differ by pi/2 or more, until the step is below that threshold,
    a sample falls to the modulus floor, or the per-segment depth cap is hit.
    The two latter cases leave wide segments in place; the resulting curve
    then fails certification in :func:`winding_number` rather than raising.
    """
    if initial_samples < 8:
        raise ValueError("need at least 8 initial samples")
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")

    ts = [i / initial_samples for i in range(initial_samples + 1)]
    vs = [complex(fn(t)) for t in ts]

    out_t = [ts[0]]
    out_v = [vs[0]]

    def refine(t0, v0, t1, v1, depth):
        wide = (
            min(abs(v0), abs(v1)) > modulus_floor
            and abs(np.angle(v1 / v0)) >= _HALF_PI
        )
        if wide and depth < max_depth:
            tm = 0.5 * (t0 + t1)
            vm = complex(fn(tm))
            refine(t0, v0, tm, vm, depth + 1)
            refine(tm, vm, t1, v1, depth + 1)
        else:
            out_t.append(t1)
            out_v.append(v1)

    for i in range(initial_samples):
        refine(ts[i], vs[i], ts[i + 1], vs[i + 1], 0)

    return DeterminantCurve(np.array(out_t), np.array(out_v))


def trace_curve(
    trajectory: ClosedTrajectory,
    model: CouplingModel,
    circuit: CircuitParams = CircuitParams(),
    initial_samples: int = 64,
    max_depth: int = MAX_REFINEMENT_DEPTH,
) -> DeterminantCurve:
    """Determinant curve of a normalized-matrix family along a trajectory."""

    def det_at(t: float) -> complex:
        return determinant(build_matrix(trajectory(t), model, circuit))

    return sample_closed_curve(det_at, initial_samples, max_depth)


def winding_number(curve: DeterminantCurve) -> WindingCertificate:
    """Winding number of a sampled closed curve around the origin.

    Sums principal-branch argument differences between consecutive samples
    and rounds the total to the nearest integer.  The certificate is marked
    certified only when no sample touches the modulus floor and every
    argument step is strictly below pi/2; an uncertified winding value is
    reported but carries no enclosure guarantee.
    """
    values = curve.values
    moduli = np.abs(values)
    min_modulus = float(moduli.min())
    samples_used = len(curve)

    if min_modulus <= MODULUS_FLOOR:
        return WindingCertificate(0, min_modulus, samples_used, certified=False)

    with np.errstate(over="ignore", invalid="ignore"):
        ratios = values[1:] / values[:-1]
    if not np.all(np.isfinite(ratios)):
        return WindingCertificate(0, min_modulus, samples_used, certified=False)
    steps = np.angle(ratios)
    winding = int(round(float(steps.sum()) / (2.0 * np.pi)))
    certified = bool(np.all(np.abs(steps) < _HALF_PI))
    return WindingCertificate(winding, min_modulus, samples_used, certified)


def find_zero(
    family: Callable[[Sequence[float]], ElectricalLayout],
    start: Sequence[float],
    model: CouplingModel,
    circuit: CircuitParams = CircuitParams(),
    tol: float = 1e-12,
    fd_step: float = 1e-7,
    max_iterations: int = 100,
) -> ZeroLocation:
    """Newton refinement of layout parameters toward determinant zero.

    Treats the complex determinant as two real equations in the family
    parameters and iterates Newton steps with a central finite-difference
    Jacobian.  Families with more than two parameters are handled through a
    least-squares step.  Non-convergence, a singular Jacobian, or a step that
    leaves the family's valid domain all yield a failure result carrying the
    best residual seen; no exception escapes.
    """
    params = np.asarray(start, dtype=float).copy()
    if params.ndim != 1 or params.size < 2:
        raise ValueError("need at least 2 real parameters")

    def residual(p: np.ndarray) -> complex:
        return determinant(build_matrix(family(p), model, circuit))

    history: list[float] = []
    best_params = params.copy()
    best_residual = np.inf

    def failure(iterations: int) -> ZeroLocation:
        return ZeroLocation(
            parameters=best_params,
            residual_modulus=best_residual,
            iterations=iterations,
            converged=False,
            residual_history=tuple(history),
        )

    for iteration in range(max_iterations):
        try:
            value = residual(params)
        except ValueError:
            return failure(iteration)
        history.append(abs(value))
        if abs(value) < best_residual:
            best_residual = abs(value)
            best_params = params.copy()
        if abs(value) < tol:
            return ZeroLocation(
                parameters=params,
                residual_modulus=abs(value),
                iterations=iteration,
                converged=True,
                residual_history=tuple(history),
            )

        jac = np.empty((2, params.size))
        try:
            for j in range(params.size):
                shift = np.zeros_like(params)
                shift[j] = fd_step
                plus = residual(params + shift)
                minus = residual(params - shift)
                jac[0, j] = (plus.real - minus.real) / (2.0 * fd_step)
                jac[1, j] = (plus.imag - minus.imag) / (2.0 * fd_step)
            rhs = -np.array([value.real, value.imag])
            if params.size == 2:
                step = np.linalg.solve(jac, rhs)
            else:
                step = np.linalg.lstsq(jac, rhs, rcond=None)[0]
        except (np.linalg.LinAlgError, ValueError):
            return failure(iteration)
        if not np.all(np.isfinite(step)):
            return failure(iteration)
        params = params + step

    try:
        final = abs(residual(params))
        history.append(final)
        if final < best_residual:
            best_residual = final
            best_params = params.copy()
    except ValueError:
        pass
    return failure(max_iterations)


@dataclass(frozen=True)
class RadiusScan:
    """Winding certificates over a family of shrinking trajectory radii."""

    radii: tuple[float, ...]
    certificates: tuple[WindingCertificate, ...]

    @property
    def smallest_certified_radius(self) -> float | None:
        """Smallest radius whose curve certifiably encloses the origin."""
        smallest = None
        for radius, cert in zip(self.radii, self.certificates):
            if cert.encloses_origin:
                smallest = radius if smallest is None else min(smallest, radius)
        return smallest


def shrink_radius_scan(
    trajectory_family: Callable[[float], ClosedTrajectory],
    model: CouplingModel,
    circuit: CircuitParams,
    radii: Sequence[float],
    initial_samples: int = 64,
) -> RadiusScan:
    """Certify origin enclosure for each radius in a descending list."""
    radii = tuple(float(r) for r in radii)
    if not radii:
        raise ValueError("radii must be nonempty")
    if any(b >= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly decreasing")

    certificates = []
    for radius in radii:
        curve = trace_curve(
            trajectory_family(radius), model, circuit, initial_samples
        )
        certificates.append(winding_number(curve))
    return RadiusScan(radii=radii, certificates=tuple(certificates))
