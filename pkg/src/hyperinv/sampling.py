"""Seeded random states, local operators and basis rotations.

Every sampler takes a ``seed`` that may be an int, a sequence of ints or
an already constructed ``numpy.random.Generator``; fixed seeds give
byte-identical output across runs.
"""

from __future__ import annotations

import numpy as np

from .bloch import (
    SPECIAL_LINEAR,
    UNITARY,
    DensityState,
    LocalOperatorChain,
    PureState,
)
from .errors import ValidationError

MAX_RESAMPLE = 1000


def get_rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def ginibre(d, rng):
    """d x d matrix of iid standard complex Gaussians."""
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def random_unitary(d, seed):
    """Haar-random unitary: QR of a Ginibre matrix with phase-fixed diagonal."""
    rng = get_rng(seed)
    Q, R = np.linalg.qr(ginibre(d, rng))
    phases = np.diag(R).copy()
    phases /= np.abs(phases)
    return Q * phases


def random_sl(d, seed, cond_cap=20.0):
    """Random element of SL(d, C): Ginibre rescaled by a principal root of
    its determinant, resampled while the condition number exceeds
    ``cond_cap`` (separates genuine non-invariance from float loss)."""
    rng = get_rng(seed)
    for _ in range(MAX_RESAMPLE):
        G = ginibre(d, rng)
        det = np.linalg.det(G)
        if det == 0:
            continue
        A = G / det ** (1.0 / d)
        if np.linalg.cond(A) <= cond_cap:
            return A
    raise ValidationError(
        f"could not sample a condition-capped SL({d}) element in {MAX_RESAMPLE} tries"
    )


def random_chain(dims, group, seed, cond_cap=20.0):
    """Independent local operators, one per party, from the tagged group."""
    rng = get_rng(seed)
    if group == UNITARY:
        ops = [random_unitary(d, rng) for d in dims]
    elif group == SPECIAL_LINEAR:
        ops = [random_sl(d, rng, cond_cap=cond_cap) for d in dims]
    else:
        raise ValidationError(f"unknown chain group {group!r}")
    return LocalOperatorChain(ops, group=group)


def random_density(dims, rank, seed):
    """Random mixed state: sum of ``rank`` Gaussian outer products,
    normalized to unit trace."""
    if rank < 1:
        raise ValidationError("rank must be >= 1")
    rng = get_rng(seed)
    D = int(np.prod(dims))
    rho = np.zeros((D, D), dtype=np.complex128)
    for _ in range(rank):
        v = rng.standard_normal(D) + 1j * rng.standard_normal(D)
        rho += np.outer(v, v.conj())
    rho /= np.trace(rho).real
    return DensityState(dims, rho)


def random_pure(dims, seed):
    """Unit-norm Gaussian amplitude tensor."""
    rng = get_rng(seed)
    D = int(np.prod(dims))
    v = rng.standard_normal(D) + 1j * rng.standard_normal(D)
    v /= np.linalg.norm(v)
    return PureState(tuple(dims), v.reshape(tuple(dims)))


def random_basis_rotation(d, seed):
    """Random SO(d^2) matrix fixing index 0, for Bloch-basis rotations.

    The nontrivial (d^2-1)-block is a QR-orthogonalized real Ginibre
    matrix with the determinant sign absorbed into the last column.
    """
    rng = get_rng(seed)
    k = d * d - 1
    Q, R = np.linalg.qr(rng.standard_normal((k, k)))
    Q = Q * np.sign(np.diag(R))
    if np.linalg.det(Q) < 0:
        Q[:, -1] = -Q[:, -1]
    out = np.eye(k + 1)
    out[1:, 1:] = Q
    return out
