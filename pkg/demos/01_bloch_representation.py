"""Bloch hypermatrices: representing states and local operations.

Walks through representing a Bell state in the generalized Gell-Mann
basis, reconstructing it, and checking that local operations on the
state match matrix chains acting on its hypermatrix.
"""

import numpy as np

from hyperinv import (
    DensityState,
    apply_local,
    chain_multiply,
    induced_chain,
    induced_matrix,
    random_chain,
    reconstruct,
    represent,
)

# A Bell pair: the archetypal maximally entangled two-qubit state.
v = np.zeros(4)
v[0] = v[3] = 1 / np.sqrt(2)
bell = DensityState((2, 2), np.outer(v, v))

A = represent(bell)
print("Bell-state Bloch matrix (4x4, real up to rounding):")
print(np.round(A.data.real, 12))
print()

# The representation is lossless.
back = reconstruct(A, (2, 2))
print("round-trip residue:", np.max(np.abs(back.matrix - bell.matrix)))
print()

# Local operators act on the hypermatrix through their induced matrices.
H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
print("induced matrix of the Hadamard gate:")
print(np.round(induced_matrix(H).B, 12))
print()

chain = random_chain((2, 2), "unitary", seed=0)
lhs = represent(apply_local(bell, chain))
rhs = chain_multiply([im.B for im in induced_chain(chain)], A)
print("state-level vs hypermatrix-level action, residue:",
      np.max(np.abs(lhs.data - rhs.data)))
