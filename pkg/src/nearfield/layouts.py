"""Named antenna configurations and their closed perturbation trajectories.

Generators return :class:`~nearfield.impedance.ElectricalLayout` instances in
electrical units.  Trajectories map t in [0, 1] to layouts and are exactly
periodic: t is wrapped modulo 1, so layout(1) is bitwise layout(0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .impedance import ElectricalLayout, GeometryError

#: Reference line configuration known to sit next to a singular far-model
#: matrix: consecutive gaps (x1, x2).
LINE_BASE = (5.1373, 1.59932)

#: Isosceles triangle (base, height) next to a singular far-model matrix.
ISOSCELES_BASE = (2.35477, 1.25534)

#: Right triangle legs (x, y) next to a singular far-model matrix.
RIGHT_TRIANGLE_BASE = (2.07905, 1.59907)

# 15-antenna triangular arrangement (nearest-neighbor spacing 4.76) with a
# per-antenna phase for the circular perturbation trajectory.  Rows are
# (center_x, center_y, phase), frozen as published decimals.
_LATTICE15_ROWS = (
    (0.0, 0.0, 0.135353),
    (2.38, 4.12228, 1.24221),
    (4.76, 8.24456, 0.249188),
    (7.14, 12.3668, 0.464789),
    (9.52, 16.4891, 0.581601),
    (4.76, 0.0, 0.754519),
    (7.14, 4.12228, 1.28072),
    (9.52, 8.24456, 1.33471),
    (11.9, 12.3668, 0.517862),
    (9.52, 0.0, 1.32011),
    (11.9, 4.12228, 0.32972),
    (14.28, 8.24456, 0.56559),
    (14.28, 0.0, 1.06079),
    (16.66, 4.12228, 0.753963),
    (19.04, 0.0, 1.02783),
)


@dataclass(frozen=True)
class LineConfig:
    """Three collinear antennas with consecutive gaps x1 and x2."""

    x1: float
    x2: float

    def __post_init__(self):
        if not (self.x1 > 0.0 and self.x2 > 0.0):
            raise ValueError("line gaps must be positive")


@dataclass(frozen=True)
class IsoscelesConfig:
    """Isosceles triangle: base along the x-axis, apex above its midpoint."""

    base: float
    height: float

    def __post_init__(self):
        if not (self.base > 0.0 and self.height > 0.0):
            raise ValueError("base and height must be positive")


@dataclass(frozen=True)
class RightTriangleConfig:
    """Right triangle with legs along the coordinate axes."""

    leg_x: float
    leg_y: float

    def __post_init__(self):
        if not (self.leg_x > 0.0 and self.leg_y > 0.0):
            raise ValueError("legs must be positive")


@dataclass(frozen=True)
class GridConfig:
    """rows x cols rectangular grid with uniform spacing."""

    rows: int
    cols: int
    spacing: float

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid must have at least one row and column")
        if not self.spacing > 0.0:
            raise ValueError("grid spacing must be positive")


@dataclass(frozen=True)
class TriangularLatticeConfig:
    """15 antenna centers with per-antenna trajectory phases and a radius."""

    centers: np.ndarray
    phases: np.ndarray
    radius: float = 0.27

    def __post_init__(self):
        centers = np.asarray(self.centers, dtype=float)
        phases = np.asarray(self.phases, dtype=float)
        if centers.shape != (15, 2) or phases.shape != (15,):
            raise ValueError("expected 15 centers (15, 2) and 15 phases")
        if self.radius < 0.0:
            raise ValueError("radius must be nonnegative")
        centers.flags.writeable = False
        phases.flags.writeable = False
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "phases", phases)


class ClosedTrajectory:
    """A closed family of layouts parameterized over t in [0, 1].

    Wraps a layout-valued function of t; the argument is reduced modulo 1
    before evaluation, which makes the trajectory exactly periodic.
    """

    def __init__(self, layout_fn: Callable[[float], ElectricalLayout]):
        self._layout_fn = layout_fn
        first = self(0.0)
        if not isinstance(first, ElectricalLayout):
            raise TypeError("layout_fn must return ElectricalLayout")

    def __call__(self, t: float) -> ElectricalLayout:
        return self._layout_fn(float(t) % 1.0)


def line_layout(cfg: LineConfig) -> ElectricalLayout:
    """Three antennas on the x-axis at 0, x1 and x1 + x2."""
    return ElectricalLayout(
        np.array([[0.0, 0.0], [cfg.x1, 0.0], [cfg.x1 + cfg.x2, 0.0]])
    )


def triangle_layout(cfg: IsoscelesConfig | RightTriangleConfig) -> ElectricalLayout:
    """Canonical placement of a triangle configuration.

    Isosceles: base endpoints (+-base/2, 0), apex (0, height).
    Right: vertices (0, 0), (leg_x, 0), (0, leg_y).
    Any congruent placement gives the same matrix; distances are all that
    matter.
    """
    if isinstance(cfg, IsoscelesConfig):
        half = cfg.base / 2.0
        pts = [[-half, 0.0], [half, 0.0], [0.0, cfg.height]]
    elif isinstance(cfg, RightTriangleConfig):
        pts = [[0.0, 0.0], [cfg.leg_x, 0.0], [0.0, cfg.leg_y]]
    else:
        raise TypeError(f"unsupported triangle config: {type(cfg).__name__}")
    return ElectricalLayout(np.array(pts))


def grid_layout(cfg: GridConfig) -> ElectricalLayout:
    """Row-major grid positions (i * spacing, j * spacing)."""
    pts = [
        (i * cfg.spacing, j * cfg.spacing)
        for i in range(cfg.rows)
        for j in range(cfg.cols)
    ]
    return ElectricalLayout(np.array(pts, dtype=float))


def table1_lattice(radius: float = 0.27) -> TriangularLatticeConfig:
    """The bundled 15-antenna triangular arrangement and trajectory phases."""
    rows = np.array(_LATTICE15_ROWS, dtype=float)
    return TriangularLatticeConfig(
        centers=rows[:, :2], phases=rows[:, 2], radius=radius
    )


def lattice_layout(cfg: TriangularLatticeConfig) -> ElectricalLayout:
    """Layout at the lattice centers (the radius-0 snapshot)."""
    return ElectricalLayout(cfg.centers)


def parameter_loop_trajectory(
    family: Callable[[Sequence[float]], ElectricalLayout],
    base: Sequence[float],
    radius: float,
    phase_offset: float = 0.25,
) -> ClosedTrajectory:
    """Closed loop in a 2-parameter layout family.

    Both parameters are perturbed sinusoidally around ``base``:

        p1(t) = base[0] + radius * sin(2*pi*t)
        p2(t) = base[1] + radius * sin(2*pi*(t - phase_offset))

    With the default quarter-period offset the loop is a circle of the given
    radius in parameter space, so it encloses every parameter point within
    ``radius`` of ``base``.
    """
    if radius < 0.0:
        raise GeometryError("radius must be nonnegative")
    b0, b1 = float(base[0]), float(base[1])

    def at(t: float) -> ElectricalLayout:
        p1 = b0 + radius * np.sin(2.0 * np.pi * t)
        p2 = b1 + radius * np.sin(2.0 * np.pi * (t - phase_offset))
        return family((p1, p2))

    return ClosedTrajectory(at)


def line_trajectory(
    radius: float,
    phase_offset: float = 0.29,
    base: Sequence[float] = LINE_BASE,
) -> ClosedTrajectory:
    """Closed loop of line layouts around the reference line configuration.

    At t = 0 the layout is exactly the base configuration.  The radius must
    stay below both base gaps so no two antennas can collide anywhere along
    the loop.
    """
    b0, b1 = float(base[0]), float(base[1])
    if radius < 0.0:
        raise GeometryError("radius must be nonnegative")
    if radius >= min(b0, b1):
        raise GeometryError(
            f"radius {radius} risks antenna collision (gaps {b0}, {b1})"
        )
    return parameter_loop_trajectory(line_family, (b0, b1), radius, phase_offset)


def lattice_trajectory(cfg: TriangularLatticeConfig) -> ClosedTrajectory:
    """Each antenna circles its center with its own phase.

    Position of antenna i at time t:

        p_i(t) = center_i + (r * sin(2*pi*(t - phase_i)),
                             r * cos(2*pi*(t - phase_i)))

    The radius must be below half the minimum center distance so antennas
    cannot collide for any t.
    """
    centers, phases, radius = cfg.centers, cfg.phases, cfg.radius
    delta = centers[:, None, :] - centers[None, :, :]
    dists = np.linalg.norm(delta, axis=-1)
    min_gap = dists[~np.eye(len(centers), dtype=bool)].min()
    if radius >= min_gap / 2.0:
        raise GeometryError(
            f"radius {radius} risks antenna collision (min center gap {min_gap})"
        )

    def at(t: float) -> ElectricalLayout:
        ang = 2.0 * np.pi * (t - phases)
        offsets = radius * np.stack([np.sin(ang), np.cos(ang)], axis=1)
        return ElectricalLayout(centers + offsets)

    return ClosedTrajectory(at)


# Two-parameter layout families, used by the zero finder and the command line.

def line_family(params: Sequence[float]) -> ElectricalLayout:
    return line_layout(LineConfig(float(params[0]), float(params[1])))


def isosceles_family(params: Sequence[float]) -> ElectricalLayout:
    return triangle_layout(IsoscelesConfig(float(params[0]), float(params[1])))


def right_triangle_family(params: Sequence[float]) -> ElectricalLayout:
    return triangle_layout(RightTriangleConfig(float(params[0]), float(params[1])))


def layout_to_json(layout: ElectricalLayout) -> str:
    """Serialize a layout to a JSON document {"positions": [[x, y], ...]}."""
    return json.dumps({"positions": layout.positions.tolist()})


def layout_from_json(document: str) -> ElectricalLayout:
    """Parse a layout from a JSON document {"positions": [[x, y], ...]}."""
    data = json.loads(document)
    if not isinstance(data, dict) or "positions" not in data:
        raise ValueError('layout JSON must be an object with a "positions" key')
    return ElectricalLayout(np.asarray(data["positions"], dtype=float))


def lattice_config_to_json(cfg: TriangularLatticeConfig) -> str:
    """Serialize a lattice trajectory config (centers, phases, radius)."""
    return json.dumps(
        {
            "centers": cfg.centers.tolist(),
            "phases": cfg.phases.tolist(),
            "radius": cfg.radius,
        }
    )


def lattice_config_from_json(document: str) -> TriangularLatticeConfig:
    """Parse a lattice trajectory config (centers, phases, radius)."""
    data = json.loads(document)
    try:
        return TriangularLatticeConfig(
            centers=np.asarray(data["centers"], dtype=float),
            phases=np.asarray(data["phases"], dtype=float),
            radius=float(data.get("radius", 0.27)),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"invalid lattice config JSON: {exc}") from exc
