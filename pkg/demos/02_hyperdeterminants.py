"""Hyperdeterminants and hyper-characteristic polynomials.

Shows the first hyperdeterminant collapsing to the ordinary determinant
on matrices, its multiplicativity on higher-order tensors, the quartic
second hyperdeterminant separating GHZ from W, and the exact
hyper-characteristic polynomial with its interpolation cross-check.
"""

import numpy as np

from hyperinv import (
    HyperMatrix,
    det222,
    hdet,
    hyper_charpoly,
    hyper_charpoly_interpolated,
    mode_multiply,
    paired_identity,
)

rng = np.random.default_rng(0)

# On two directions the first hyperdeterminant is the determinant.
M = rng.standard_normal((5, 5))
print("hdet vs det on a 5x5 matrix:", hdet(HyperMatrix(M)).real, np.linalg.det(M))

# On four directions it stays multiplicative under per-direction action.
A = HyperMatrix(rng.standard_normal((3, 3, 3, 3)))
B = rng.standard_normal((3, 3))
print("multiplicativity residue:",
      abs(hdet(mode_multiply(B, 2, A)) - np.linalg.det(B) * hdet(A)))
print()

# The quartic 2x2x2 hyperdeterminant detects genuine tripartite
# entanglement: 1/4 for GHZ, exactly 0 for W.
ghz = np.zeros((2, 2, 2))
ghz[0, 0, 0] = ghz[1, 1, 1] = 1 / np.sqrt(2)
w = np.zeros((2, 2, 2))
w[1, 0, 0] = w[0, 1, 0] = w[0, 0, 1] = 1 / np.sqrt(3)
print("det222(GHZ) =", det222(HyperMatrix(ghz)).real)
print("det222(W)   =", det222(HyperMatrix(w)).real)
print()

# hdet(lam * I_paired - A) as a polynomial in lam, computed exactly and
# cross-checked by interpolation at Chebyshev nodes.
T = HyperMatrix(rng.standard_normal((4, 4, 4, 4)))
exact = hyper_charpoly(T)
interp = hyper_charpoly_interpolated(T)
print("hyper-charpoly coefficients (ascending):")
print(np.round(exact.as_array(5).real, 6))
print("interpolation residue:",
      np.max(np.abs(exact.as_array(5) - interp.as_array(5))))
print("leading coefficient equals hdet of the paired identity:",
      exact.coefficient(4).real, "=", hdet(paired_identity(4, 4)).real)
