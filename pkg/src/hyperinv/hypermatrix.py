"""Dense hypermatrix arithmetic.

A hypermatrix of format f1 x ... x fn is a dense complex array with one
index per direction.  This module provides the mode-k product, chains of
mode products, multilinear form evaluation, column-stacking realignment,
Kronecker products and the paired Kronecker-delta identity tensor.

Indices are 0-based throughout.  Storage is row-major (C order, last
index fastest).
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

MAX_SIDE = 64  # format entries beyond this are rejected (dense storage only)


class HyperMatrix:
    """Immutable dense complex tensor of a declared format.

    Parameters
    ----------
    data : array-like
        Entries, either already shaped to ``format`` or flat row-major.
    format : sequence of int, optional
        Index range per direction.  Inferred from ``data.shape`` when
        omitted.
    """

    __slots__ = ("_data",)

    def __init__(self, data, format=None):
        arr = np.asarray(data, dtype=np.complex128)
        if format is not None:
            fmt = tuple(int(f) for f in format)
            if any(f < 1 for f in fmt):
                raise ValidationError(f"format entries must be positive, got {fmt}")
            if arr.size != int(np.prod(fmt)):
                raise ValidationError(
                    f"entry count {arr.size} does not match format {fmt}"
                )
            arr = arr.reshape(fmt)
        if arr.ndim == 0:
            raise ValidationError("a hypermatrix needs at least one direction")
        if any(f > MAX_SIDE for f in arr.shape):
            raise ValidationError(f"format entries above {MAX_SIDE} are unsupported")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self._data = arr

    @property
    def format(self):
        """Index range per direction, as a tuple."""
        return self._data.shape

    @property
    def ndir(self):
        """Number of directions."""
        return self._data.ndim

    @property
    def data(self):
        """Read-only ndarray view of the entries, shaped to the format."""
        return self._data

    @property
    def entries(self):
        """Flat row-major entry vector (read-only view)."""
        return self._data.reshape(-1)

    def __getitem__(self, idx):
        return self._data[idx]

    def __add__(self, other):
        other = _coerce(other, self.format)
        return HyperMatrix(self._data + other)

    def __sub__(self, other):
        other = _coerce(other, self.format)
        return HyperMatrix(self._data - other)

    def __mul__(self, scalar):
        return HyperMatrix(self._data * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self):
        return HyperMatrix(-self._data)

    def __repr__(self):
        fmt = "x".join(str(f) for f in self.format)
        return f"HyperMatrix(format={fmt})"

    def allclose(self, other, rtol=1e-12, atol=1e-12):
        other = _coerce(other, self.format)
        return np.allclose(self._data, other, rtol=rtol, atol=atol)


def _coerce(x, fmt):
    arr = x.data if isinstance(x, HyperMatrix) else np.asarray(x, dtype=np.complex128)
    if arr.shape != tuple(fmt):
        raise ValidationError(f"format mismatch: {arr.shape} vs {tuple(fmt)}")
    return arr


def as_square(B, dim=None):
    """Validate ``B`` as a square complex matrix and return it as ndarray."""
    B = np.asarray(B, dtype=np.complex128)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {B.shape}")
    if dim is not None and B.shape[0] != dim:
        raise ValidationError(f"expected a {dim}x{dim} matrix, got {B.shape[0]}x{B.shape[0]}")
    return B


def mode_multiply(B, k, A):
    """Mode-k product: C[i1..in] = sum_j B[i_k, j] * A[i1.. j ..in].

    ``k`` is the 0-based direction index.  For a matrix A this gives
    ``B @ A`` at k=0 and ``A @ B.T`` at k=1.
    """
    if not isinstance(A, HyperMatrix):
        A = HyperMatrix(A)
    if not 0 <= k < A.ndir:
        raise ValidationError(f"direction {k} out of range for {A.ndir} directions")
    B = as_square(B, A.format[k])
    C = np.tensordot(B, A.data, axes=([1], [k]))
    C = np.moveaxis(C, 0, k)
    return HyperMatrix(C)


def chain_multiply(Bs, A):
    """Apply one mode product per direction: (B1 *_1 ... Bn *_n) A."""
    if not isinstance(A, HyperMatrix):
        A = HyperMatrix(A)
    if len(Bs) != A.ndir:
        raise ValidationError(
            f"need {A.ndir} matrices for {A.ndir} directions, got {len(Bs)}"
        )
    out = A
    for k, B in enumerate(Bs):
        out = mode_multiply(B, k, out)
    return out


def evaluate_form(A, xs):
    """Evaluate the multilinear form: sum_I A[I] * x1[i1] * ... * xn[in]."""
    if not isinstance(A, HyperMatrix):
        A = HyperMatrix(A)
    if len(xs) != A.ndir:
        raise ValidationError(f"need {A.ndir} vectors, got {len(xs)}")
    acc = A.data
    for x in xs:
        x = np.asarray(x, dtype=np.complex128)
        if x.ndim != 1 or x.shape[0] != acc.shape[0]:
            raise ValidationError(
                f"vector of length {x.shape} does not match direction size {acc.shape[0]}"
            )
        acc = np.tensordot(x, acc, axes=([0], [0]))
    return complex(acc)


def vec_realign(B):
    """Column-stacking realignment v(B) = [b11,...,bm1, b12,...,bmn]^t."""
    B = np.asarray(B, dtype=np.complex128)
    if B.ndim != 2:
        raise ValidationError(f"expected a matrix, got shape {B.shape}")
    return B.reshape(-1, order="F")


def kronecker(A, C):
    """Kronecker product with block (i, j) equal to A[i, j] * C."""
    return np.kron(np.asarray(A, dtype=np.complex128), np.asarray(C, dtype=np.complex128))


def paired_identity(N, m):
    """Identity tensor of format N^m with entries prod_k delta(i_{2k}, i_{2k+1}).

    Consecutive directions are paired, so m must be even.  For m=2 this
    is the ordinary identity matrix.
    """
    N = int(N)
    m = int(m)
    if N < 1:
        raise ValidationError("side length must be positive")
    if m < 2 or m % 2 != 0:
        raise ValidationError(f"number of directions must be even and >= 2, got {m}")
    eye = np.eye(N, dtype=np.complex128)
    out = eye
    for _ in range(m // 2 - 1):
        out = np.multiply.outer(out, eye)
    return HyperMatrix(out)
