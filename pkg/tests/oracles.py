"""Independent test oracles, kept separate from the library code paths."""

import numpy as np


def cofactor_determinant(matrix) -> complex:
    """Brute-force Laplace cofactor expansion; O(n!), for small n only."""
    a = np.asarray(matrix, dtype=complex)
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    total = 0j
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += (-1) ** j * a[0, j] * cofactor_determinant(minor)
    return total


def hertzian_coupling_derivative(x: float) -> complex:
    """Analytic derivative of the full coupling function.

    d/dx [ 1.5 e^{-jx} (j/x + 1/x^2 - j/x^3) ]
        = 1.5 e^{-jx} (1/x - 2j/x^2 - 3/x^3 + 3j/x^4)
    """
    return 1.5 * np.exp(-1j * x) * (1 / x - 2j / x**2 - 3 / x**3 + 3j / x**4)


def small_x_psi_series(x: float) -> float:
    """Taylor expansion of the coupling real part near x = 0:
    1 - x^2/5 + 3 x^4/280 + O(x^6)."""
    return 1.0 - x**2 / 5.0 + 3.0 * x**4 / 280.0
