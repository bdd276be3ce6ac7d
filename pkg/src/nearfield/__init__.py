"""Near-field impedance matrices of small-dipole arrays.

Builds normalized mutual-impedance matrices for planar arrays of parallel
short dipoles under three coupling models, certifies singular (determinant
zero) configurations through winding numbers of determinant loops, and sweeps
grid arrays for determinant collapse.
"""

from .certification import (
    DeterminantCurve,
    RadiusScan,
    WindingCertificate,
    ZeroLocation,
    find_zero,
    sample_closed_curve,
    shrink_radius_scan,
    trace_curve,
    winding_number,
)
from .coupling import (
    FREE_SPACE_IMPEDANCE,
    MIN_ELECTRICAL_DISTANCE,
    CouplingModel,
    SelfImpedanceParams,
    coupling_value,
    phi,
    psi,
    self_impedance,
    wavenumber,
)
from .impedance import (
    CircuitError,
    CircuitParams,
    ElectricalLayout,
    GeometryError,
    build_matrix,
    determinant,
    is_diagonally_dominant,
    safe_distance_bound,
)
from .layouts import (
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
from .sweeps import (
    CollapseEntry,
    SizeSweep,
    SweepResult,
    SweepSpec,
    monotone_collapse_report,
    run_sweep,
    write_summary_csv,
    write_sweep_csv,
)

__version__ = "0.1.0"

__all__ = [
    "CircuitError",
    "CircuitParams",
    "ClosedTrajectory",
    "CollapseEntry",
    "CouplingModel",
    "DeterminantCurve",
    "ElectricalLayout",
    "FREE_SPACE_IMPEDANCE",
    "GeometryError",
    "GridConfig",
    "ISOSCELES_BASE",
    "IsoscelesConfig",
    "LINE_BASE",
    "LineConfig",
    "MIN_ELECTRICAL_DISTANCE",
    "RIGHT_TRIANGLE_BASE",
    "RadiusScan",
    "RightTriangleConfig",
    "SelfImpedanceParams",
    "SizeSweep",
    "SweepResult",
    "SweepSpec",
    "TriangularLatticeConfig",
    "WindingCertificate",
    "ZeroLocation",
    "build_matrix",
    "coupling_value",
    "determinant",
    "find_zero",
    "grid_layout",
    "is_diagonally_dominant",
    "isosceles_family",
    "lattice_config_from_json",
    "lattice_config_to_json",
    "lattice_layout",
    "lattice_trajectory",
    "layout_from_json",
    "layout_to_json",
    "line_family",
    "line_layout",
    "line_trajectory",
    "monotone_collapse_report",
    "parameter_loop_trajectory",
    "phi",
    "psi",
    "right_triangle_family",
    "run_sweep",
    "safe_distance_bound",
    "sample_closed_curve",
    "self_impedance",
    "shrink_radius_scan",
    "table1_lattice",
    "trace_curve",
    "triangle_layout",
    "wavenumber",
    "winding_number",
    "write_summary_csv",
    "write_sweep_csv",
]
