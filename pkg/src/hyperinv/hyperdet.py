"""Hyperdeterminants and characteristic polynomials.

Implements the first hyperdeterminant (signed permutation sum over an
even number of directions, evaluated by a pruned depth-first search),
the explicit quartic second hyperdeterminant of format 2x2x2 in two
independent transcriptions, hyper-characteristic polynomials, and
Faddeev-LeVerrier characteristic polynomial coefficients.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BudgetError, ValidationError
from .hypermatrix import HyperMatrix, as_square, paired_identity

DEFAULT_BUDGET = 1_000_000_000
BUDGET_ENV = "HYPERINV_BUDGET"


def leaf_budget():
    """Configured limit on permutation-sum leaf products."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(float(raw))
    except ValueError as exc:
        raise ValidationError(f"bad {BUDGET_ENV} value {raw!r}") from exc
    if value < 1:
        raise ValidationError(f"{BUDGET_ENV} must be positive")
    return value


@dataclass(frozen=True)
class LambdaPolynomial:
    """Univariate polynomial p(lam) = sum_k coeffs[k] * lam**k.

    Coefficients are stored in ascending order with trailing zeros
    trimmed; the zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple

    def __init__(self, coeffs):
        cs = [complex(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, lam):
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def coefficient(self, k):
        """Coefficient of lam**k (0 beyond the stored degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    def as_array(self, length=None):
        n = len(self.coeffs) if length is None else length
        out = np.zeros(n, dtype=np.complex128)
        for k, c in enumerate(self.coeffs[:n]):
            out[k] = c
        return out


def _check_cubical_even(A):
    if not isinstance(A, HyperMatrix):
        A = HyperMatrix(A)
    fmt = A.format
    N = fmt[0]
    if any(f != N for f in fmt):
        raise ValidationError(f"hdet needs a cubical format, got {fmt}")
    m = len(fmt)
    if m % 2 != 0:
        raise ValidationError(f"hdet needs an even number of directions, got {m}")
    return A, N, m


def _check_budget(N, m):
    leaves = math.factorial(N) ** (m - 1)
    budget = leaf_budget()
    if leaves > budget:
        raise BudgetError(
            f"permutation sum for side {N} with {m} directions needs "
            f"{leaves} leaf products, budget is {budget}"
        )


def _csr_nonzeros(T):
    """Per-first-index-slice nonzero candidates in CSR layout."""
    N = T.shape[0]
    K = T.ndim - 1
    js_parts, val_parts = [], []
    ptr = np.zeros(N + 1, dtype=np.int64)
    for i in range(N):
        sl = T[i]
        nz = np.argwhere(sl != 0)
        ptr[i + 1] = ptr[i] + len(nz)
        js_parts.append(nz.astype(np.int64).reshape(-1, K))
        val_parts.append(sl[tuple(nz.T)] if len(nz) else np.zeros(0, np.complex128))
    js = np.vstack(js_parts) if js_parts else np.zeros((0, K), np.int64)
    vals = np.concatenate(val_parts) if val_parts else np.zeros(0, np.complex128)
    return js, vals, ptr


def _pairwise_sum(values):
    """Sum in a fixed pairwise order (deterministic for a fixed split)."""
    vals = list(values)
    if not vals:
        return 0j
    while len(vals) > 1:
        vals = [
            vals[i] + vals[i + 1] if i + 1 < len(vals) else vals[i]
            for i in range(0, len(vals), 2)
        ]
    return vals[0]


def hdet(A, *, threads=1):
    """First hyperdeterminant of a cubical hypermatrix with even directions.

    Evaluates the reduced permutation sum (first permutation fixed to the
    identity, which absorbs the 1/N! normalization; valid because the
    direction count is even) by a DFS with zero-product pruning.  With
    ``threads > 1`` the root-level candidates are partitioned across a
    thread pool and the partial sums combined in fixed pairwise order.
    """
    A, N, m = _check_cubical_even(A)
    _check_budget(N, m)
    js, vals, ptr = _csr_nonzeros(A.data)
    K = m - 1
    if threads <= 1:
        used = np.zeros(K, dtype=np.int64)
        return complex(_kernels.hdet_dfs(0, 1.0 + 0j, N, K, js, vals, ptr, used))
    bounds = np.linspace(ptr[0], ptr[1], threads + 1).astype(np.int64)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(
                _kernels.hdet_root_range,
                bounds[t],
                bounds[t + 1],
                N,
                K,
                js,
                vals,
                ptr,
                np.zeros(K, dtype=np.int64),
            )
            for t in range(threads)
        ]
        partials = [complex(f.result()) for f in futures]
    return _pairwise_sum(partials)


def hdet_bruteforce(A):
    """Unreduced permutation sum over all m-tuples of permutations.

    Independent oracle for :func:`hdet`: sums sgn(s1)...sgn(sm) times the
    diagonal product over every tuple in S_N^m and divides by N!.  Only
    feasible for tiny formats; guarded accordingly.
    """
    A, N, m = _check_cubical_even(A)
    perms = list(itertools.permutations(range(N)))
    M = len(perms)
    if M**m > 50_000_000:
        raise BudgetError(
            f"brute-force sum needs {M ** m} tuples; use hdet() instead"
        )
    P = np.array(perms, dtype=np.intp)
    signs = np.empty(M)
    for p, perm in enumerate(perms):
        inv = sum(
            1 for a in range(N) for b in range(a + 1, N) if perm[a] > perm[b]
        )
        signs[p] = -1.0 if inv % 2 else 1.0
    T = np.ones((M,) * m, dtype=np.complex128)
    for i in range(N):
        T = T * A.data[np.ix_(*([P[:, i]] * m))]
    for _ in range(m):
        T = np.tensordot(signs, T, axes=([0], [0]))
    return complex(T) / math.factorial(N)


def _check_222(A):
    if not isinstance(A, HyperMatrix):
        A = HyperMatrix(A)
    if A.format != (2, 2, 2):
        raise ValidationError(f"expected format 2x2x2, got {A.format}")
    return A.data


def det222(A):
    """Second hyperdeterminant of a 2x2x2 hypermatrix (explicit quartic)."""
    a = _check_222(A)
    return complex(
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
        - 2 * a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1]
        - 2 * a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
        - 2 * a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 1]
        - 2 * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
        - 2 * a[0, 0, 1] * a[0, 1, 1] * a[1, 1, 0] * a[1, 0, 0]
        - 2 * a[0, 1, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 0, 0]
        + 4 * a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0]
        + 4 * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1]
    )


_EPS2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def det222_epsilon(A):
    """Second hyperdeterminant via the Levi-Civita contraction form.

    b_kn = (1/2) eps^il eps^jm a_ijk a_lmn, then
    Det = -2 eps^il eps^jm b_ij b_lm.  Independent transcription used as
    a differential check against :func:`det222`; the -2 prefactor (not
    1/2) is fixed by requiring agreement with the explicit quartic,
    whose normalization gives the GHZ tensor the value 1/4.
    """
    a = _check_222(A)
    b = 0.5 * np.einsum("il,jm,ijk,lmn->kn", _EPS2, _EPS2, a, a)
    return complex(-2.0 * np.einsum("il,jm,ij,lm->", _EPS2, _EPS2, b, b))


def hyper_charpoly(A, *, threads=1):
    """Coefficients of hdet(lam * I_paired - A) as a polynomial in lam.

    Computed exactly: each DFS position contributes a degree-<=1 factor
    whose coefficient pair is convolved into the partial coefficient
    vector, so no interpolation is involved.  The leading coefficient
    equals hdet of the paired identity tensor.
    """
    del threads  # accepted for interface symmetry; accumulation is serial
    A, N, m = _check_cubical_even(A)
    _check_budget(N, m)
    Ip = paired_identity(N, m).data
    mask = (A.data != 0) | (Ip != 0)
    K = m - 1
    js_parts, a_parts, d_parts = [], [], []
    ptr = np.zeros(N + 1, dtype=np.int64)
    for i in range(N):
        nz = np.argwhere(mask[i])
        ptr[i + 1] = ptr[i] + len(nz)
        js_parts.append(nz.astype(np.int64).reshape(-1, K))
        idx = tuple(nz.T)
        a_parts.append(A.data[i][idx] if len(nz) else np.zeros(0, np.complex128))
        d_parts.append(Ip[i][idx] if len(nz) else np.zeros(0, np.complex128))
    js = np.vstack(js_parts)
    avals = np.concatenate(a_parts)
    dvals = np.concatenate(d_parts)
    used = np.zeros(K, dtype=np.int64)
    acc = np.zeros(N + 1, dtype=np.complex128)
    start = np.zeros(N + 1, dtype=np.complex128)
    start[0] = 1.0
    _kernels.charpoly_dfs(0, start, N, K, js, avals, dvals, ptr, used, acc)
    return LambdaPolynomial(acc)


def hyper_charpoly_interpolated(A):
    """Cross-check: fit hdet(lam_j * I_paired - A) at N+1 Chebyshev points.

    Sample points are Chebyshev nodes scaled by (1 + max|A|) to keep the
    Vandermonde system well conditioned at small degrees.
    """
    A, N, m = _check_cubical_even(A)
    Ip = paired_identity(N, m)
    scale = 1.0 + float(np.max(np.abs(A.data)))
    lams = np.cos(np.pi * np.arange(N + 1) / N) * scale
    vals = np.array([hdet(lam * Ip - A) for lam in lams])
    coeffs = np.polynomial.polynomial.polyfit(lams, vals, N)
    return LambdaPolynomial(coeffs)


def charpoly_coeffs(A):
    """Characteristic polynomial det(lam*I - A) via Faddeev-LeVerrier.

    Uses only traces and matrix products, so each coefficient is a
    polynomial in the entries of A.  Returns ascending coefficients; the
    leading one is 1.
    """
    A = as_square(A)
    n = A.shape[0]
    cs = np.zeros(n + 1, dtype=np.complex128)
    cs[n] = 1.0
    M = np.zeros_like(A)
    c = 1.0 + 0j
    for k in range(1, n + 1):
        M = A @ M + c * np.eye(n, dtype=np.complex128)
        c = -np.trace(A @ M) / k
        cs[n - k] = c
    return LambdaPolynomial(cs)


def principal_minor_sum(A, k):
    """Sum of all k x k principal minors of a square matrix."""
    A = as_square(A)
    n = A.shape[0]
    if not 1 <= k <= n:
        raise ValidationError(f"minor order {k} out of range 1..{n}")
    total = 0j
    for rows in itertools.combinations(range(n), k):
        sub = A[np.ix_(rows, rows)]
        total += np.linalg.det(sub)
    return complex(total)
