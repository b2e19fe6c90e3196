"""Numba kernels for the permutation-sum depth-first searches.

The DFS walks positions i = 0..N-1 of the first direction.  At each
position it picks one stored candidate entry whose remaining indices are
still unused in their directions, accumulating the permutation signs via
inversion-count parity.  The branch is cut as soon as a partial product
vanishes.  Used-index sets are per-direction bitmasks, which restricts
side lengths to 63 (far beyond any budget-feasible size).
"""

import numpy as np
from numba import njit


@njit(nogil=True)
def hdet_dfs(level, coef, N, K, js, vals, ptr, used):
    """Recursive signed permutation-sum with the first permutation fixed.

    js/vals/ptr form a CSR layout of the nonzero entries per first-index
    slice: candidate c has remaining indices js[c, :] and value vals[c].
    """
    if level == N:
        return coef
    total = 0.0 + 0.0j
    for c in range(ptr[level], ptr[level + 1]):
        par = 0
        ok = True
        for k in range(K):
            j = js[c, k]
            b = np.int64(1) << j
            if used[k] & b:
                ok = False
                break
            u = used[k] >> (j + 1)
            while u:
                u &= u - 1
                par ^= 1
        if not ok:
            continue
        sub = coef * vals[c]
        if sub == 0:
            continue
        if par:
            sub = -sub
        for k in range(K):
            used[k] |= np.int64(1) << js[c, k]
        total += hdet_dfs(level + 1, sub, N, K, js, vals, ptr, used)
        for k in range(K):
            used[k] &= ~(np.int64(1) << js[c, k])
    return total


@njit(nogil=True)
def hdet_root_range(c_lo, c_hi, N, K, js, vals, ptr, used):
    """Evaluate the DFS restricted to root candidates [c_lo, c_hi)."""
    total = 0.0 + 0.0j
    for c in range(c_lo, c_hi):
        par = 0
        ok = True
        for k in range(K):
            j = js[c, k]
            b = np.int64(1) << j
            if used[k] & b:
                ok = False
                break
            u = used[k] >> (j + 1)
            while u:
                u &= u - 1
                par ^= 1
        if not ok:
            continue
        sub = vals[c]
        if sub == 0:
            continue
        if par:
            sub = -sub
        for k in range(K):
            used[k] |= np.int64(1) << js[c, k]
        total += hdet_dfs(1, sub, N, K, js, vals, ptr, used)
        for k in range(K):
            used[k] &= ~(np.int64(1) << js[c, k])
    return total


@njit(nogil=True)
def charpoly_dfs(level, coeffs, N, K, js, avals, dvals, ptr, used, acc):
    """DFS accumulating polynomial coefficients of hdet(lam*Ip - A).

    Each candidate contributes the degree-<=1 factor (dvals[c]*lam -
    avals[c]); coefficient vectors of length N+1 are convolved on the
    way down and added into ``acc`` at the leaves.
    """
    if level == N:
        for t in range(N + 1):
            acc[t] += coeffs[t]
        return
    for c in range(ptr[level], ptr[level + 1]):
        par = 0
        ok = True
        for k in range(K):
            j = js[c, k]
            b = np.int64(1) << j
            if used[k] & b:
                ok = False
                break
            u = used[k] >> (j + 1)
            while u:
                u &= u - 1
                par ^= 1
        if not ok:
            continue
        a = avals[c]
        d = dvals[c]
        new = np.zeros(N + 1, dtype=np.complex128)
        nonzero = False
        for t in range(level + 1):
            v = coeffs[t]
            if v != 0:
                new[t] -= a * v
                new[t + 1] += d * v
                nonzero = True
        if not nonzero:
            continue
        if par:
            for t in range(level + 2):
                new[t] = -new[t]
        for k in range(K):
            used[k] |= np.int64(1) << js[c, k]
        charpoly_dfs(level + 1, new, N, K, js, avals, dvals, ptr, used, acc)
        for k in range(K):
            used[k] &= ~(np.int64(1) << js[c, k])
