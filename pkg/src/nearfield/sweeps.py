"""Determinant sweeps over grid spacing and grid size.

For each grid size the sweep samples |det| of the normalized matrix at
uniformly spaced electrical spacings, then sharpens the bracketed minimum
with a golden-section search.  The collapse report orders the per-size minima
by antenna count and attaches consecutive ratios.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .coupling import CouplingModel
from .impedance import CircuitParams, build_matrix, determinant
from .layouts import GridConfig, grid_layout

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SweepSpec:
    """Grid sizes, spacing range and sampling resolution of a sweep."""

    sizes: tuple[tuple[int, int], ...]
    x_range: tuple[float, float]
    samples: int = 512
    model: CouplingModel = CouplingModel.HERTZIAN
    circuit: CircuitParams = CircuitParams()

    def __post_init__(self):
        sizes = tuple((int(m1), int(m2)) for m1, m2 in self.sizes)
        if not sizes:
            raise ValueError("sweep needs at least one grid size")
        if any(m1 < 1 or m2 < 1 for m1, m2 in sizes):
            raise ValueError("grid sizes must be >= 1")
        lo, hi = float(self.x_range[0]), float(self.x_range[1])
        if not (0.0 < lo < hi):
            raise ValueError("spacing range must satisfy 0 < lo < hi")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "x_range", (lo, hi))


@dataclass(frozen=True)
class SizeSweep:
    """Sampled |det| curve and refined minimum for one grid size."""

    rows: int
    cols: int
    x: np.ndarray
    abs_det: np.ndarray
    x_min: float
    min_abs_det: float

    @property
    def n(self) -> int:
        return self.rows * self.cols

    @property
    def x_min_wavelengths(self) -> float:
        """Minimum location as a fraction of the wavelength, x / (2*pi)."""
        return self.x_min / (2.0 * np.pi)


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    per_size: tuple[SizeSweep, ...]


class CollapseEntry(NamedTuple):
    n: int
    rows: int
    cols: int
    x_min: float
    min_abs_det: float
    ratio: float | None


def _golden_minimize(fn, a: float, b: float, rel: float = 1e-6):
    """Golden-section minimum of a unimodal fn on [a, b] to relative rel in x."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    while (b - a) > rel * max(abs(a), abs(b)):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    mid = 0.5 * (a + b)
    return mid, fn(mid)


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate |det| over the spacing range for every grid size.

    The reported minimum is the golden-section refinement of the bracket
    around the smallest sample; ties between equal samples resolve to the
    smallest spacing.  Results are deterministic for a fixed spec.
    """
    lo, hi = spec.x_range
    xs = np.linspace(lo, hi, spec.samples)
    per_size = []
    for rows, cols in spec.sizes:

        def abs_det_at(x: float) -> float:
            layout = grid_layout(GridConfig(rows, cols, x))
            return abs(determinant(build_matrix(layout, spec.model, spec.circuit)))

        values = np.array([abs_det_at(x) for x in xs])
        i = int(np.argmin(values))
        bracket_lo = xs[max(i - 1, 0)]
        bracket_hi = xs[min(i + 1, len(xs) - 1)]
        x_min, min_val = _golden_minimize(abs_det_at, bracket_lo, bracket_hi)
        if values[i] < min_val:
            x_min, min_val = float(xs[i]), float(values[i])
        per_size.append(
            SizeSweep(
                rows=rows,
                cols=cols,
                x=xs,
                abs_det=values,
                x_min=float(x_min),
                min_abs_det=float(min_val),
            )
        )
    return SweepResult(spec=spec, per_size=tuple(per_size))


def monotone_collapse_report(result: SweepResult) -> list[CollapseEntry]:
    """Per-size minima ordered by antenna count, with consecutive ratios."""
    if len(result.per_size) < 2:
        raise ValueError("collapse report needs at least 2 grid sizes")
    ordered = sorted(result.per_size, key=lambda s: (s.n, s.rows, s.cols))
    report = []
    previous = None
    for entry in ordered:
        ratio = None if previous is None else entry.min_abs_det / previous
        report.append(
            CollapseEntry(
                n=entry.n,
                rows=entry.rows,
                cols=entry.cols,
                x_min=entry.x_min,
                min_abs_det=entry.min_abs_det,
                ratio=ratio,
            )
        )
        previous = entry.min_abs_det
    return report


def write_sweep_csv(result: SweepResult, path) -> None:
    """All samples as CSV with columns grid_m1, grid_m2, x, abs_det."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["grid_m1", "grid_m2", "x", "abs_det"])
        for entry in result.per_size:
            for x, value in zip(entry.x, entry.abs_det):
                writer.writerow(
                    [entry.rows, entry.cols, repr(float(x)), repr(float(value))]
                )


def write_summary_csv(result: SweepResult, path) -> None:
    """Refined minima as CSV with columns grid_m1, grid_m2, x_min, abs_det_min."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["grid_m1", "grid_m2", "x_min", "abs_det_min"])
        for entry in result.per_size:
            writer.writerow(
                [entry.rows, entry.cols, repr(entry.x_min), repr(entry.min_abs_det)]
            )
