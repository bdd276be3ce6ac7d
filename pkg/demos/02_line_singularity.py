"""The three-antennas-on-a-line configuration that kills the far model.

Three antennas with consecutive gaps x1 = 5.1373 and x2 = 1.59932 give a
normalized far-model impedance matrix whose determinant is ~4.5e-6, i.e.
numerically singular for any practical purpose.  Newton refinement then
walks the two gaps onto the exact zero, which sits within 5e-5 of the
rounded reference values.

Run:  python demos/02_line_singularity.py
"""

import numpy as np

from nearfield import (
    CouplingModel,
    LINE_BASE,
    LineConfig,
    build_matrix,
    determinant,
    find_zero,
    line_family,
    line_layout,
)

layout = line_layout(LineConfig(*LINE_BASE))
matrix = build_matrix(layout, CouplingModel.FAR)

print(f"line configuration: gaps {LINE_BASE[0]} and {LINE_BASE[1]}")
print("normalized far-model matrix:")
for row in matrix:
    print("   " + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))

det = determinant(matrix)
print(f"det   = {det}")
print(f"|det| = {abs(det):.6e}   (already ~0: the circuit equations are")
print("unsolvable in double precision for these gaps)")

# For comparison: the same geometry under the full model is far from
# singular, so the failure is a artifact of the far-field truncation.
full = determinant(build_matrix(layout, CouplingModel.HERTZIAN))
print(f"full-model |det| at the same gaps: {abs(full):.4f}")

# Newton refinement of the exact zero.
zero = find_zero(line_family, LINE_BASE, CouplingModel.FAR)
assert zero.converged
offsets = np.asarray(zero.parameters) - np.asarray(LINE_BASE)
print()
print(
    f"refined zero: x1 = {float(zero.parameters[0])!r}, "
    f"x2 = {float(zero.parameters[1])!r}"
)
print(f"offsets from the rounded reference: {offsets[0]:+.2e}, {offsets[1]:+.2e}")
print(f"residual |det| = {zero.residual_modulus:.3e} after {zero.iterations} steps")
print(f"residual history: {[f'{r:.2e}' for r in zero.residual_history]}")
