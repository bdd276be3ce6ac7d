import json

import numpy as np
import pytest

from nearfield.impedance import GeometryError
from nearfield.layouts import (
    ClosedTrajectory,
    GridConfig,
    ISOSCELES_BASE,
    IsoscelesConfig,
    LINE_BASE,
    LineConfig,
    RIGHT_TRIANGLE_BASE,
    RightTriangleConfig,
    TriangularLatticeConfig,
    grid_layout,
    isosceles_family,
    lattice_config_from_json,
    lattice_config_to_json,
    lattice_layout,
    lattice_trajectory,
    layout_from_json,
    layout_to_json,
    line_family,
    line_layout,
    line_trajectory,
    parameter_loop_trajectory,
    right_triangle_family,
    table1_lattice,
    triangle_layout,
)


def sorted_distances(layout):
    d = layout.distance_matrix()
    n = layout.n
    return np.sort(d[np.triu_indices(n, k=1)])


class TestLineLayout:
    def test_reference_gaps(self):
        layout = line_layout(LineConfig(*LINE_BASE))
        np.testing.assert_allclose(
            sorted_distances(layout), [1.59932, 5.1373, 6.73662], rtol=1e-15
        )

    def test_unit_gaps(self):
        layout = line_layout(LineConfig(1.0, 1.0))
        np.testing.assert_allclose(sorted_distances(layout), [1.0, 1.0, 2.0])

    def test_translation_leaves_distances(self):
        layout = line_layout(LineConfig(2.5, 0.75))
        moved = type(layout)(layout.positions + np.array([100.0, -40.0]))
        np.testing.assert_allclose(
            sorted_distances(moved), sorted_distances(layout), atol=1e-9
        )

    def test_invalid_gaps(self):
        with pytest.raises(ValueError):
            LineConfig(0.0, 1.0)


class TestTriangleLayout:
    def test_isosceles_legs(self):
        layout = triangle_layout(IsoscelesConfig(*ISOSCELES_BASE))
        dists = sorted_distances(layout)
        leg = np.hypot(ISOSCELES_BASE[0] / 2.0, ISOSCELES_BASE[1])
        np.testing.assert_allclose(dists[:2], [leg, leg], rtol=1e-15)
        assert dists[0] == pytest.approx(1.721079299110009, rel=1e-12)
        assert dists[2] == pytest.approx(ISOSCELES_BASE[0], rel=1e-15)

    def test_right_triangle_hypotenuse(self):
        layout = triangle_layout(RightTriangleConfig(*RIGHT_TRIANGLE_BASE))
        assert sorted_distances(layout)[-1] == pytest.approx(
            2.622875095653623, rel=1e-12
        )

    def test_three_four_five(self):
        layout = triangle_layout(RightTriangleConfig(3.0, 4.0))
        np.testing.assert_allclose(sorted_distances(layout), [3.0, 4.0, 5.0])

    def test_unsupported_config_type(self):
        with pytest.raises(TypeError):
            triangle_layout(GridConfig(2, 2, 1.0))


class TestGridLayout:
    def test_two_by_two(self):
        layout = grid_layout(GridConfig(2, 2, 1.0))
        assert layout.n == 4
        dists = sorted_distances(layout)
        np.testing.assert_allclose(dists, [1, 1, 1, 1, np.sqrt(2), np.sqrt(2)])

    def test_single(self):
        assert grid_layout(GridConfig(1, 1, 7.0)).n == 1

    def test_rect_min_distance(self):
        layout = grid_layout(GridConfig(3, 2, 4.1))
        assert layout.n == 6
        assert sorted_distances(layout)[0] == pytest.approx(4.1)

    def test_row_major_order(self):
        layout = grid_layout(GridConfig(2, 3, 2.0))
        expected = [(0, 0), (0, 2), (0, 4), (2, 0), (2, 2), (2, 4)]
        np.testing.assert_allclose(layout.positions, expected)

    def test_invalid(self):
        with pytest.raises(ValueError):
            GridConfig(0, 2, 1.0)
        with pytest.raises(ValueError):
            GridConfig(2, 2, 0.0)


class TestTable1Lattice:
    def test_published_coordinates(self):
        cfg = table1_lattice()
        np.testing.assert_array_equal(cfg.centers[1], [2.38, 4.12228])
        assert cfg.phases[1] == 1.24221
        np.testing.assert_array_equal(cfg.centers[14], [19.04, 0.0])
        assert cfg.phases[14] == 1.02783
        assert cfg.radius == 0.27

    def test_nearest_neighbor_spacing(self):
        cfg = table1_lattice()
        d = lattice_layout(cfg).distance_matrix()
        min_gap = d[~np.eye(15, dtype=bool)].min()
        # the published decimals are truncated, so neighbor gaps sit within
        # 5e-5 of the nominal spacing 4.76
        assert abs(min_gap - 4.76) < 5e-5
        assert d[0, 5] == pytest.approx(4.76, abs=1e-15)

    def test_radius_override(self):
        assert table1_lattice(radius=0.1).radius == 0.1

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            TriangularLatticeConfig(
                centers=np.zeros((14, 2)), phases=np.zeros(15)
            )


class TestLineTrajectory:
    def test_first_gap_exact_at_zero(self):
        # sin(0) = 0 pins the first gap at t = 0; the offset gap is exact a
        # phase-offset later (never both at once unless the radius is zero)
        traj = line_trajectory(5e-5)
        pos = traj(0.0).positions
        assert pos[1, 0] == LINE_BASE[0]
        assert pos[2, 0] - pos[1, 0] != LINE_BASE[1]

    def test_second_gap_unperturbed_at_offset(self):
        offset = 0.29
        traj = line_trajectory(5e-5, phase_offset=offset)
        pos = traj(offset).positions
        assert pos[2, 0] - pos[1, 0] == pytest.approx(LINE_BASE[1], abs=1e-14)
        assert pos[1, 0] != LINE_BASE[0]

    def test_alternate_offset_supported(self):
        traj = line_trajectory(5e-5, phase_offset=0.029)
        pos = traj(0.029).positions
        assert pos[2, 0] - pos[1, 0] == pytest.approx(LINE_BASE[1], abs=1e-14)

    def test_zero_radius_is_constant(self):
        traj = line_trajectory(0.0)
        np.testing.assert_array_equal(traj(0.37).positions, traj(0.0).positions)

    def test_exact_periodicity(self):
        traj = line_trajectory(5e-5)
        np.testing.assert_array_equal(traj(0.0).positions, traj(1.0).positions)

    def test_collision_radius_rejected(self):
        with pytest.raises(GeometryError):
            line_trajectory(1.6)
        with pytest.raises(GeometryError):
            line_trajectory(-1e-3)


class TestLatticeTrajectory:
    def test_zero_radius_gives_centers(self):
        cfg = table1_lattice(radius=0.0)
        traj = lattice_trajectory(cfg)
        np.testing.assert_array_equal(traj(0.42).positions, cfg.centers)

    def test_position_at_own_phase(self):
        cfg = table1_lattice()
        traj = lattice_trajectory(cfg)
        i = 3
        pos = traj(cfg.phases[i]).positions
        np.testing.assert_allclose(
            pos[i], cfg.centers[i] + [0.0, cfg.radius], atol=1e-15
        )

    def test_exact_periodicity(self):
        traj = lattice_trajectory(table1_lattice())
        np.testing.assert_array_equal(traj(0.0).positions, traj(1.0).positions)

    def test_collision_radius_rejected(self):
        with pytest.raises(GeometryError):
            lattice_trajectory(table1_lattice(radius=2.38))


class TestParameterLoop:
    def test_circle_at_quarter_offset(self):
        base = (4.0, 5.0)
        r = 0.25
        traj = parameter_loop_trajectory(line_family, base, r, phase_offset=0.25)
        pos = traj(0.25).positions
        assert pos[1, 0] == pytest.approx(base[0] + r, rel=1e-15)
        # second parameter is at its base value a quarter period later
        assert pos[2, 0] - pos[1, 0] == pytest.approx(base[1], abs=1e-15)

    def test_negative_radius_rejected(self):
        with pytest.raises(GeometryError):
            parameter_loop_trajectory(line_family, (2.0, 3.0), -0.1)

    def test_wraps_argument(self):
        traj = parameter_loop_trajectory(line_family, (2.0, 3.0), 0.1)
        np.testing.assert_array_equal(traj(1.25).positions, traj(0.25).positions)


def test_closed_trajectory_requires_layout_fn():
    with pytest.raises(TypeError):
        ClosedTrajectory(lambda t: t)


class TestFamilies:
    def test_line_family(self):
        layout = line_family((2.0, 3.0))
        np.testing.assert_allclose(layout.positions[:, 0], [0.0, 2.0, 5.0])

    def test_isosceles_family(self):
        layout = isosceles_family((2.0, 1.0))
        assert layout.n == 3
        assert sorted_distances(layout)[-1] == pytest.approx(2.0)

    def test_right_family(self):
        layout = right_triangle_family((3.0, 4.0))
        assert sorted_distances(layout)[-1] == pytest.approx(5.0)


class TestSerialization:
    def test_layout_round_trip(self):
        layout = line_layout(LineConfig(5.1373, 1.59932))
        restored = layout_from_json(layout_to_json(layout))
        np.testing.assert_array_equal(restored.positions, layout.positions)

    def test_layout_document_shape(self):
        data = json.loads(layout_to_json(grid_layout(GridConfig(2, 2, 1.5))))
        assert set(data) == {"positions"}
        assert len(data["positions"]) == 4

    def test_layout_missing_key(self):
        with pytest.raises(ValueError):
            layout_from_json('{"points": []}')

    def test_layout_bad_json(self):
        with pytest.raises(json.JSONDecodeError):
            layout_from_json("{not json")

    def test_lattice_round_trip(self):
        cfg = table1_lattice(radius=0.31)
        restored = lattice_config_from_json(lattice_config_to_json(cfg))
        np.testing.assert_array_equal(restored.centers, cfg.centers)
        np.testing.assert_array_equal(restored.phases, cfg.phases)
        assert restored.radius == cfg.radius

    def test_lattice_missing_key(self):
        with pytest.raises(ValueError):
            lattice_config_from_json('{"centers": []}')
