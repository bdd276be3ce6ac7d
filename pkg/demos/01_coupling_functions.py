"""Tour of the three coupling models.

Plots the real and imaginary parts of the full (Hertzian) coupling function
against its mid and far approximations, and checks the 1.5/x modulus envelope
that underlies the safe-separation bound.  The three curves agree well beyond
x ~ 2-3; below that the approximations diverge hard, which is exactly the
regime where singular matrices appear.

Run:  python demos/01_coupling_functions.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from nearfield import CouplingModel, coupling_value, phi, psi

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

x = np.linspace(0.3, 15.0, 2000)
values = {model: coupling_value(model, x) for model in CouplingModel}

fig, (ax_re, ax_im) = plt.subplots(1, 2, figsize=(11, 4))
for model, v in values.items():
    ax_re.plot(x, v.real, label=model.value)
    ax_im.plot(x, v.imag, label=model.value)
ax_re.set_title("real part of the coupling")
ax_im.set_title("imaginary part of the coupling")
for ax in (ax_re, ax_im):
    ax.set_xlabel("electrical distance x = k d")
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.legend()
ax_im.set_ylim(-1.5, 1.5)
fig.tight_layout()
fig.savefig(OUT / "coupling_functions.png", dpi=150)
print(f"wrote {OUT / 'coupling_functions.png'}")

# The modulus envelope: |f| <= 1.5/x for x >= 1 (exact equality for the far
# model), |f_mid| <= sqrt(2) * 1.5/x.  This is what guarantees diagonal
# dominance, hence solvability, at large separations.
xs = np.linspace(1.0, 50.0, 500)
assert np.all(np.abs(coupling_value(CouplingModel.HERTZIAN, xs)) <= 1.5 / xs)
assert np.all(
    np.abs(coupling_value(CouplingModel.MID, xs)) <= np.sqrt(2) * 1.5 / xs
)
print("envelope checks hold on [1, 50]")

# Spot values: the full coupling splits into psi + j*phi exactly.
for probe in (1.0, np.pi, 4.76, 5.1373):
    full = coupling_value(CouplingModel.HERTZIAN, probe)
    print(
        f"x = {probe:7.4f}: f = {full:+.6f}, "
        f"psi = {psi(probe):+.6f}, phi = {phi(probe):+.6f}"
    )
