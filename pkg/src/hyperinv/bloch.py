"""Generalized Gell-Mann bases and Bloch hypermatrix representations.

A state on H_1 x ... x H_n is expanded in tensor products of Hermitian
basis operators sigma_0..sigma_{d^2-1} per party, with sigma_0 = I and
tr(sigma_i sigma_j) = d * delta_ij.  The expansion coefficients form the
Bloch hypermatrix of format d_1^2 x ... x d_n^2.  Local operators act on
that hypermatrix through real induced matrices of size d^2 x d^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ValidationError
from .hypermatrix import HyperMatrix, as_square, chain_multiply

HERMITIAN_TOL = 1e-10
IMAG_RESIDUE_TOL = 1e-12
UNITARY_TOL = 1e-10
SL_TOL = 1e-10

UNITARY = "unitary"
SPECIAL_LINEAR = "special-linear"
GENERAL_LINEAR = "general-linear"

# Convention tag recorded in fingerprints; bump when the basis ordering
# or normalization changes.
CONVENTION = "gellmann:tr=d.delta:sym-asym-diag@v1"


@dataclass(frozen=True, eq=False)
class BlochBasis:
    """d^2 Hermitian operators with sigma_0 = I and tr(s_i s_j) = d delta_ij."""

    d: int
    ops: np.ndarray  # shape (d^2, d, d), read-only

    def __post_init__(self):
        ops = np.ascontiguousarray(np.asarray(self.ops, dtype=np.complex128))
        if ops.shape != (self.d**2, self.d, self.d):
            raise ValidationError(
                f"basis for dimension {self.d} must have shape "
                f"({self.d ** 2}, {self.d}, {self.d}), got {ops.shape}"
            )
        if not np.array_equal(ops[0], np.eye(self.d)):
            raise ValidationError("sigma_0 must be the identity matrix exactly")
        if np.max(np.abs(ops - ops.conj().transpose(0, 2, 1))) > 1e-12:
            raise ValidationError("basis operators must be Hermitian")
        gram = np.einsum("iab,jba->ij", ops, ops)
        if np.max(np.abs(gram - self.d * np.eye(self.d**2))) > 1e-12:
            raise ValidationError("basis must satisfy tr(s_i s_j) = d * delta_ij")
        ops.flags.writeable = False
        object.__setattr__(self, "ops", ops)


@lru_cache(maxsize=None)
def gell_mann_basis(d):
    """Generalized Gell-Mann basis for local dimension d.

    Ordering: identity, then symmetric off-diagonal pairs (j, k) in
    lexicographic order, then the matching antisymmetric pairs, then the
    diagonal matrices.  The traceless operators are rescaled by
    sqrt(d/2) so that tr(s_i s_j) = d * delta_ij; at d = 2 this yields
    exactly the Pauli matrices I, X, Y, Z.
    """
    if d < 2:
        raise ValidationError(f"local dimension must be >= 2, got {d}")
    scale = np.sqrt(d / 2.0)
    ops = [np.eye(d, dtype=np.complex128)]
    sym, asym = [], []
    for j in range(d):
        for k in range(j + 1, d):
            s = np.zeros((d, d), dtype=np.complex128)
            s[j, k] = s[k, j] = 1.0
            sym.append(scale * s)
            a = np.zeros((d, d), dtype=np.complex128)
            a[j, k] = -1j
            a[k, j] = 1j
            asym.append(scale * a)
    diag = []
    for l in range(1, d):
        v = np.zeros(d)
        v[:l] = 1.0
        v[l] = -l
        v *= np.sqrt(2.0 / (l * (l + 1)))
        diag.append(scale * np.diag(v).astype(np.complex128))
    ops.extend(sym)
    ops.extend(asym)
    ops.extend(diag)
    return BlochBasis(d=d, ops=np.array(ops))


def _bases_for(dims, bases):
    if bases is None:
        return [gell_mann_basis(d) for d in dims]
    if len(bases) != len(dims):
        raise ValidationError(f"need {len(dims)} bases, got {len(bases)}")
    for b, d in zip(bases, dims):
        if b.d != d:
            raise ValidationError(f"basis dimension {b.d} does not match party dimension {d}")
    return list(bases)


def _product_basis(bases):
    """Stacked tensor products: array (prod d_k^2, D, D) of sigma_I."""
    acc = bases[0].ops
    for b in bases[1:]:
        acc = np.einsum("iab,jcd->ijacbd", acc, b.ops).reshape(
            acc.shape[0] * b.ops.shape[0],
            acc.shape[1] * b.d,
            acc.shape[2] * b.d,
        )
    return acc


@dataclass(frozen=True, eq=False)
class DensityState:
    """Hermitian operator on a tensor-product space.

    Positivity and unit trace are deliberately not required: invariants
    are defined on the (un-normalized) hypermatrix representation.
    """

    dims: tuple
    matrix: np.ndarray

    def __init__(self, dims, matrix):
        dims = tuple(int(d) for d in dims)
        D = int(np.prod(dims))
        matrix = np.ascontiguousarray(np.asarray(matrix, dtype=np.complex128))
        if matrix.shape != (D, D):
            raise ValidationError(
                f"matrix shape {matrix.shape} does not match dims {dims}"
            )
        if np.max(np.abs(matrix - matrix.conj().T)) > HERMITIAN_TOL:
            raise ValidationError("density matrix is not Hermitian")
        matrix.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", matrix)

    @property
    def nparties(self):
        return len(self.dims)


@dataclass(frozen=True, eq=False)
class PureState:
    """State vector stored as an amplitude hypermatrix of format dims."""

    dims: tuple
    amplitudes: HyperMatrix

    def __init__(self, dims, amplitudes):
        dims = tuple(int(d) for d in dims)
        if not isinstance(amplitudes, HyperMatrix):
            amplitudes = HyperMatrix(amplitudes, format=dims)
        if amplitudes.format != dims:
            raise ValidationError(
                f"amplitude format {amplitudes.format} does not match dims {dims}"
            )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def nparties(self):
        return len(self.dims)

    def to_density(self):
        v = self.amplitudes.entries
        return DensityState(self.dims, np.outer(v, v.conj()))


@dataclass(frozen=True, eq=False)
class LocalOperatorChain:
    """One operator per party, tagged by the group it is drawn from."""

    ops: tuple
    group: str = GENERAL_LINEAR

    def __init__(self, ops, group=GENERAL_LINEAR):
        ops = tuple(as_square(op) for op in ops)
        if group not in (UNITARY, SPECIAL_LINEAR, GENERAL_LINEAR):
            raise ValidationError(f"unknown group tag {group!r}")
        for op in ops:
            d = op.shape[0]
            if group == UNITARY:
                if np.max(np.abs(op @ op.conj().T - np.eye(d))) > UNITARY_TOL:
                    raise ValidationError("operator tagged unitary is not unitary")
            elif group == SPECIAL_LINEAR:
                if abs(np.linalg.det(op) - 1.0) > SL_TOL:
                    raise ValidationError("operator tagged special-linear has det != 1")
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "group", group)

    @property
    def dims(self):
        return tuple(op.shape[0] for op in self.ops)


@dataclass(frozen=True, eq=False)
class InducedMatrix:
    """Real d^2 x d^2 matrix of a local operator acting on the Bloch basis."""

    d: int
    B: np.ndarray

    def __post_init__(self):
        B = np.ascontiguousarray(np.asarray(self.B, dtype=np.float64))
        if B.shape != (self.d**2, self.d**2):
            raise ValidationError(f"induced matrix must be {self.d ** 2}x{self.d ** 2}")
        B.flags.writeable = False
        object.__setattr__(self, "B", B)


def represent(rho, bases=None):
    """Bloch hypermatrix of a density state: a_I = tr(rho sigma_I) / prod(d).

    Coefficients of a Hermitian operator in a Hermitian basis are real;
    an imaginary residue above 1e-12 is rejected, below it is silently
    dropped.
    """
    if isinstance(rho, PureState):
        rho = rho.to_density()
    bases = _bases_for(rho.dims, bases)
    sig = _product_basis(bases)
    coeff = np.einsum("kab,ba->k", sig, rho.matrix) / float(np.prod(rho.dims))
    residue = float(np.max(np.abs(coeff.imag)))
    if residue > IMAG_RESIDUE_TOL:
        raise ValidationError(
            f"imaginary residue {residue:.3e} in Bloch coefficients; "
            "input is not Hermitian enough"
        )
    fmt = tuple(d * d for d in rho.dims)
    return HyperMatrix(coeff.real.astype(np.complex128), format=fmt)


def reconstruct(A, dims, bases=None):
    """Inverse of :func:`represent`: rho = sum_I a_I sigma_I."""
    dims = tuple(int(d) for d in dims)
    if not isinstance(A, HyperMatrix):
        A = HyperMatrix(A)
    if A.format != tuple(d * d for d in dims):
        raise ValidationError(
            f"hypermatrix format {A.format} does not match dims {dims}"
        )
    bases = _bases_for(dims, bases)
    sig = _product_basis(bases)
    rho = np.tensordot(A.entries, sig, axes=([0], [0]))
    return DensityState(dims, rho)


def induced_matrix(A, basis=None):
    """Matrix of X -> A X A^dagger on the Bloch basis (column convention).

    B[i, j] = tr((A sigma_j A^dagger) sigma_i) / d, so that
    A sigma_j A^dagger = sum_i B[i, j] sigma_i.  Conjugation of a
    Hermitian operator stays Hermitian, so B is real; the construction
    residue is checked.
    """
    A = as_square(A)
    d = A.shape[0]
    if basis is None:
        basis = gell_mann_basis(d)
    elif basis.d != d:
        raise ValidationError(f"basis dimension {basis.d} does not match operator size {d}")
    moved = np.einsum("ab,jbc,dc->jad", A, basis.ops, A.conj())
    B = np.einsum("jad,ida->ij", moved, basis.ops) / d
    residue = float(np.max(np.abs(B.imag)))
    if residue > IMAG_RESIDUE_TOL:
        raise ValidationError(f"induced matrix has imaginary residue {residue:.3e}")
    return InducedMatrix(d=d, B=B.real)


def apply_local(rho, chain):
    """Transform rho -> (A_1 x ... x A_n) rho (A_1 x ... x A_n)^dagger."""
    if isinstance(rho, PureState):
        return _apply_local_pure(rho, chain)
    if chain.dims != rho.dims:
        raise ValidationError(
            f"chain dims {chain.dims} do not match state dims {rho.dims}"
        )
    g = chain.ops[0]
    for op in chain.ops[1:]:
        g = np.kron(g, op)
    out = g @ rho.matrix @ g.conj().T
    # round off the Hermiticity loss of the two-sided product
    out = 0.5 * (out + out.conj().T)
    return DensityState(rho.dims, out)


def _apply_local_pure(phi, chain):
    if chain.dims != phi.dims:
        raise ValidationError(
            f"chain dims {chain.dims} do not match state dims {phi.dims}"
        )
    out = chain_multiply(chain.ops, phi.amplitudes)
    return PureState(phi.dims, out)


def induced_chain(chain, bases=None):
    """Induced matrices of every operator in a local chain."""
    if bases is None:
        bases = [None] * len(chain.ops)
    return [induced_matrix(op, basis) for op, basis in zip(chain.ops, bases)]


def rotate_basis(basis, R):
    """New basis sigma'_i = sum_j R[i, j] sigma_j for real orthogonal R.

    R must fix index 0 (first row and column equal to e_0) so that
    sigma'_0 stays the identity; orthogonality preserves the Gram
    normalization.
    """
    R = np.asarray(R, dtype=np.float64)
    k = basis.d**2
    if R.shape != (k, k):
        raise ValidationError(f"rotation must be {k}x{k}, got {R.shape}")
    if np.max(np.abs(R.T @ R - np.eye(k))) > 1e-10:
        raise ValidationError("rotation matrix is not orthogonal")
    e0 = np.zeros(k)
    e0[0] = 1.0
    if np.max(np.abs(R[0] - e0)) > 1e-10 or np.max(np.abs(R[:, 0] - e0)) > 1e-10:
        raise ValidationError("rotation must fix basis index 0")
    ops = np.tensordot(R, basis.ops, axes=([1], [0]))
    ops[0] = np.eye(basis.d)  # exact identity after numerically trivial row
    return BlochBasis(d=basis.d, ops=ops)
