"""Command-line front end: det, certify, find-zero, sweep, safe-bound.

Distances are accepted in electrical units by default; pass ``--wavelength``
to give user-supplied distances in meters instead (converted at the boundary
via x = 2*pi*d/wavelength).  Every subcommand also accepts ``--config FILE``
with a JSON object whose keys mirror the long flag names; explicit flags
override config values, and fully-defaulted runs reproduce the bundled
reference experiments.

Exit codes: 0 success, 2 malformed input (JSON, ranges, arguments),
3 invalid geometry or collision-risk radius, 4 uncertifiable curve,
5 zero refinement did not converge.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .certification import find_zero, trace_curve, winding_number
from .coupling import CouplingModel, wavenumber
from .impedance import (
    CircuitParams,
    GeometryError,
    build_matrix,
    determinant,
    safe_distance_bound,
)
from .layouts import (
    GridConfig,
    ISOSCELES_BASE,
    LINE_BASE,
    RIGHT_TRIANGLE_BASE,
    grid_layout,
    isosceles_family,
    lattice_layout,
    lattice_trajectory,
    layout_from_json,
    line_family,
    line_trajectory,
    parameter_loop_trajectory,
    right_triangle_family,
    table1_lattice,
)
from .sweeps import (
    SweepSpec,
    monotone_collapse_report,
    run_sweep,
    write_summary_csv,
    write_sweep_csv,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GEOMETRY = 3
EXIT_UNCERTIFIABLE = 4
EXIT_NO_CONVERGENCE = 5

# (family, base parameters) of the two-parameter presets.
_FAMILIES = {
    "line": (line_family, LINE_BASE),
    "isosceles": (isosceles_family, ISOSCELES_BASE),
    "right": (right_triangle_family, RIGHT_TRIANGLE_BASE),
}

# Parameter flag names per two-parameter preset.
_PARAM_KEYS = {
    "line": ("x1", "x2"),
    "isosceles": ("base", "height"),
    "right": ("leg_x", "leg_y"),
}

# Model each preset is known to be critical under; used when --model is absent.
_PRESET_MODEL = {
    "line": "far",
    "isosceles": "far",
    "right": "far",
    "table1": "mid",
}

# Loop phase offsets reproducing the reference certificates.
_PRESET_PHASE_OFFSET = {"line": 0.29, "isosceles": 0.25, "right": 0.25}

_DISTANCE_KEYS = frozenset(
    {"x1", "x2", "base", "height", "leg_x", "leg_y", "spacing", "radius"}
)


def _load_config(path) -> dict:
    with open(path) as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError("config file must contain a JSON object")
    return data


def _resolve(args, defaults: dict):
    """Merge flag values, config values and defaults; flags win.

    Returns the resolved dict plus the set of user-supplied keys (only
    those are rescaled by ``--wavelength``; preset constants are already
    electrical).
    """
    config = _load_config(args.config) if getattr(args, "config", None) else {}
    unknown = set(config) - set(defaults) - {"wavelength"}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    resolved = {}
    user_keys = set()
    for key, default in defaults.items():
        flag = getattr(args, key, None)
        if flag is not None:
            resolved[key] = flag
            user_keys.add(key)
        elif key in config:
            resolved[key] = config[key]
            user_keys.add(key)
        else:
            resolved[key] = default
    wavelength = getattr(args, "wavelength", None)
    if wavelength is None:
        wavelength = config.get("wavelength")
    if wavelength is not None:
        scale = wavenumber(float(wavelength))
        for key in user_keys & _DISTANCE_KEYS:
            resolved[key] = float(resolved[key]) * scale
    return resolved, user_keys


def _model(value, preset=None) -> CouplingModel:
    if value is None:
        value = _PRESET_MODEL.get(preset, "hertzian")
    try:
        return CouplingModel(str(value).lower())
    except ValueError:
        raise ValueError(
            f"unknown model {value!r} (choose hertzian, mid or far)"
        ) from None


def _format_complex(z: complex) -> str:
    return f"{z.real:.6g}{z.imag:+.6g}j"


def _print_matrix(matrix: np.ndarray) -> None:
    cells = [[_format_complex(z) for z in row] for row in matrix]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print("  [ " + "  ".join(c.rjust(width) for c in row) + " ]")


def _det_layout(args):
    opts, _ = _resolve(
        args,
        {
            "preset": None,
            "layout": None,
            "x1": LINE_BASE[0],
            "x2": LINE_BASE[1],
            "base": ISOSCELES_BASE[0],
            "height": ISOSCELES_BASE[1],
            "leg_x": RIGHT_TRIANGLE_BASE[0],
            "leg_y": RIGHT_TRIANGLE_BASE[1],
            "m": 2,
            "m1": None,
            "m2": None,
            "spacing": 4.1,
            "model": None,
            "load_ratio": 0j,
        },
    )
    if opts["layout"] is not None:
        with open(opts["layout"]) as handle:
            layout = layout_from_json(handle.read())
        preset = None
    else:
        preset = opts["preset"] or "line"
        if preset in _FAMILIES:
            family, _ = _FAMILIES[preset]
            keys = _PARAM_KEYS[preset]
            layout = family((float(opts[keys[0]]), float(opts[keys[1]])))
        elif preset == "table1":
            layout = lattice_layout(table1_lattice())
        elif preset == "grid":
            m1 = int(opts["m"] if opts["m1"] is None else opts["m1"])
            m2 = int(opts["m"] if opts["m2"] is None else opts["m2"])
            layout = grid_layout(GridConfig(m1, m2, float(opts["spacing"])))
        else:
            raise ValueError(f"unknown preset {preset!r}")
    return layout, _model(opts["model"], preset), complex(opts["load_ratio"])


def _cmd_det(args) -> int:
    layout, model, load_ratio = _det_layout(args)
    matrix = build_matrix(layout, model, CircuitParams(load_ratio))
    det = determinant(matrix)
    print(f"Normalized matrix ({model.value}, {layout.n} antennas):")
    _print_matrix(matrix)
    print(f"det   = {det!r}")
    print(f"|det| = {abs(det)!r}")
    return EXIT_OK


def _certify_trajectory(preset, radius, phase_offset):
    if preset in _FAMILIES:
        family, base = _FAMILIES[preset]
        offset = (
            phase_offset
            if phase_offset is not None
            else _PRESET_PHASE_OFFSET[preset]
        )
        if preset == "line":
            return line_trajectory(radius, offset)
        if radius >= min(base):
            raise GeometryError(
                f"radius {radius} risks antenna collision for preset {preset}"
            )
        return parameter_loop_trajectory(family, base, radius, offset)
    if preset == "table1":
        return lattice_trajectory(table1_lattice(radius=radius))
    raise ValueError(f"unknown certify preset {preset!r}")


def _cmd_certify(args) -> int:
    opts, _ = _resolve(
        args,
        {
            "preset": "line",
            "model": None,
            "radius": None,
            "phase_offset": None,
            "samples": 64,
            "curve_csv": None,
            "cert_json": None,
        },
    )
    preset = opts["preset"]
    radius = opts["radius"]
    if radius is None:
        radius = 0.27 if preset == "table1" else 5e-5
    model = _model(opts["model"], preset)
    trajectory = _certify_trajectory(preset, float(radius), opts["phase_offset"])
    curve = trace_curve(trajectory, model, initial_samples=int(opts["samples"]))
    cert = winding_number(curve)
    if opts["curve_csv"]:
        curve.write_csv(opts["curve_csv"])
    if opts["cert_json"]:
        with open(opts["cert_json"], "w") as handle:
            handle.write(cert.to_json() + "\n")
    print(f"preset       = {preset} ({model.value}, radius {float(radius)!r})")
    print(f"winding      = {cert.winding}")
    print(f"min |det|    = {cert.min_modulus!r}")
    print(f"samples used = {cert.samples_used}")
    print(f"certified    = {str(cert.certified).lower()}")
    return EXIT_OK if cert.certified else EXIT_UNCERTIFIABLE


def _cmd_find_zero(args) -> int:
    opts, _ = _resolve(
        args,
        {
            "preset": "line",
            "model": None,
            "tol": 1e-12,
            "x1": None,
            "x2": None,
            "base": None,
            "height": None,
            "leg_x": None,
            "leg_y": None,
            "json": None,
        },
    )
    preset = opts["preset"]
    if preset not in _FAMILIES:
        raise ValueError(
            f"preset {preset!r} is not a two-parameter family "
            "(choose line, isosceles or right)"
        )
    family, base = _FAMILIES[preset]
    keys = _PARAM_KEYS[preset]
    start = tuple(
        float(opts[key]) if opts[key] is not None else float(default)
        for key, default in zip(keys, base)
    )
    model = _model(opts["model"], preset)
    result = find_zero(family, start, model, tol=float(opts["tol"]))
    if opts["json"]:
        with open(opts["json"], "w") as handle:
            handle.write(result.to_json() + "\n")
    names = ", ".join(keys)
    values = ", ".join(repr(float(p)) for p in result.parameters)
    print(f"preset     = {preset} ({model.value})")
    print(f"({names}) = ({values})")
    print(f"|det|      = {result.residual_modulus!r}")
    print(f"iterations = {result.iterations}")
    print(f"converged  = {str(result.converged).lower()}")
    return EXIT_OK if result.converged else EXIT_NO_CONVERGENCE


def _parse_sizes(text) -> tuple[tuple[int, int], ...]:
    sizes = []
    for token in str(text).split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo, hi = token.split("..", 1)
            for m in range(int(lo), int(hi) + 1):
                sizes.append((m, m))
        elif "x" in token:
            m1, m2 = token.split("x", 1)
            sizes.append((int(m1), int(m2)))
        else:
            sizes.append((int(token), int(token)))
    if not sizes:
        raise ValueError(f"no grid sizes in {text!r}")
    return tuple(sizes)


def _parse_range(text) -> tuple[float, float]:
    try:
        lo, hi = str(text).split(":", 1)
        return float(lo), float(hi)
    except ValueError:
        raise ValueError(f"range must look like LO:HI, got {text!r}") from None


def _cmd_sweep(args) -> int:
    opts, user_keys = _resolve(
        args,
        {
            "sizes": "2..8",
            "range": "3.5:4.5",
            "samples": 512,
            "model": None,
            "load_ratio": 0j,
            "csv": None,
            "summary_csv": None,
        },
    )
    x_range = _parse_range(opts["range"])
    wavelength = getattr(args, "wavelength", None)
    if wavelength is not None and "range" in user_keys:
        scale = wavenumber(float(wavelength))
        x_range = (x_range[0] * scale, x_range[1] * scale)
    spec = SweepSpec(
        sizes=_parse_sizes(opts["sizes"]),
        x_range=x_range,
        samples=int(opts["samples"]),
        model=_model(opts["model"]),
        circuit=CircuitParams(complex(opts["load_ratio"])),
    )
    result = run_sweep(spec)
    if opts["csv"]:
        write_sweep_csv(result, opts["csv"])
    if opts["summary_csv"]:
        write_summary_csv(result, opts["summary_csv"])
    print("grid      x_min      x_min/2pi   min|det|       ratio")
    if len(result.per_size) >= 2:
        rows = monotone_collapse_report(result)
        for entry in rows:
            ratio = "-" if entry.ratio is None else f"{entry.ratio:.4f}"
            print(
                f"{entry.rows}x{entry.cols:<6} {entry.x_min:<10.6f} "
                f"{entry.x_min / (2 * np.pi):<11.6f} {entry.min_abs_det:<14.6e} {ratio}"
            )
    else:
        entry = result.per_size[0]
        print(
            f"{entry.rows}x{entry.cols:<6} {entry.x_min:<10.6f} "
            f"{entry.x_min_wavelengths:<11.6f} {entry.min_abs_det:<14.6e} -"
        )
    return EXIT_OK


def _cmd_safe_bound(args) -> int:
    opts, _ = _resolve(args, {"n": None, "model": None})
    if opts["n"] is None:
        raise ValueError("safe-bound requires --n")
    n = int(opts["n"])
    models = (
        [_model(opts["model"])]
        if opts["model"] is not None
        else [CouplingModel.HERTZIAN, CouplingModel.MID, CouplingModel.FAR]
    )
    for model in models:
        bound = safe_distance_bound(n, model)
        print(
            f"{model.value:<9} n={n}: x > {bound!r} "
            f"(d > {bound / (2 * np.pi)!r} wavelengths)"
        )
    return EXIT_OK


def _add_common(parser) -> None:
    parser.add_argument("--config", help="JSON config file; flags override it")
    parser.add_argument(
        "--wavelength",
        type=float,
        help="interpret user-supplied distances as meters at this wavelength",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nearfield",
        description="Near-field impedance matrices, singularity certificates "
        "and determinant sweeps for small-dipole arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    det = sub.add_parser("det", help="print a normalized matrix and its determinant")
    det.add_argument("--preset", choices=["line", "isosceles", "right", "table1", "grid"])
    det.add_argument("--layout", help="layout JSON file: {\"positions\": [[x, y], ...]}")
    det.add_argument("--model", choices=["hertzian", "mid", "far"])
    det.add_argument("--load-ratio", dest="load_ratio", type=complex)
    det.add_argument("--x1", type=float)
    det.add_argument("--x2", type=float)
    det.add_argument("--base", type=float)
    det.add_argument("--height", type=float)
    det.add_argument("--leg-x", dest="leg_x", type=float)
    det.add_argument("--leg-y", dest="leg_y", type=float)
    det.add_argument("--m", type=int, help="square grid size")
    det.add_argument("--m1", type=int)
    det.add_argument("--m2", type=int)
    det.add_argument("--spacing", type=float)
    _add_common(det)
    det.set_defaults(handler=_cmd_det)

    certify = sub.add_parser(
        "certify", help="trace a determinant loop and certify origin enclosure"
    )
    certify.add_argument("--preset", choices=["line", "isosceles", "right", "table1"])
    certify.add_argument("--model", choices=["hertzian", "mid", "far"])
    certify.add_argument("--radius", type=float)
    certify.add_argument("--phase-offset", dest="phase_offset", type=float)
    certify.add_argument("--samples", type=int, help="initial curve samples")
    certify.add_argument("--curve-csv", dest="curve_csv")
    certify.add_argument("--cert-json", dest="cert_json")
    _add_common(certify)
    certify.set_defaults(handler=_cmd_certify)

    find = sub.add_parser(
        "find-zero", help="Newton-refine a two-parameter family to |det| ~ 0"
    )
    find.add_argument("--preset", choices=["line", "isosceles", "right"])
    find.add_argument("--model", choices=["hertzian", "mid", "far"])
    find.add_argument("--tol", type=float)
    find.add_argument("--x1", type=float)
    find.add_argument("--x2", type=float)
    find.add_argument("--base", type=float)
    find.add_argument("--height", type=float)
    find.add_argument("--leg-x", dest="leg_x", type=float)
    find.add_argument("--leg-y", dest="leg_y", type=float)
    find.add_argument("--json", help="write the refinement result as JSON")
    _add_common(find)
    find.set_defaults(handler=_cmd_find_zero)

    sweep = sub.add_parser("sweep", help="|det| sweep over grid spacing and size")
    sweep.add_argument("--sizes", help="e.g. 2..8, 3, 2x4 or comma combinations")
    sweep.add_argument("--range", help="spacing range LO:HI in electrical units")
    sweep.add_argument("--samples", type=int)
    sweep.add_argument("--model", choices=["hertzian", "mid", "far"])
    sweep.add_argument("--load-ratio", dest="load_ratio", type=complex)
    sweep.add_argument("--csv", help="write all samples as CSV")
    sweep.add_argument("--summary-csv", dest="summary_csv", help="write minima as CSV")
    _add_common(sweep)
    sweep.set_defaults(handler=_cmd_sweep)

    bound = sub.add_parser(
        "safe-bound", help="print separation guaranteeing a nonsingular matrix"
    )
    bound.add_argument("--n", type=int)
    bound.add_argument("--model", choices=["hertzian", "mid", "far"])
    _add_common(bound)
    bound.set_defaults(handler=_cmd_safe_bound)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
