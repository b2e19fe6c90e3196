"""Named invariant fingerprints of quantum states.

A fingerprint is an ordered list of (name, value) pairs computed from a
state's Bloch hypermatrix (mixed states) or amplitude hypermatrix (pure
states).  Matching fingerprints never prove equivalence; a mismatch
proves inequivalence.

Names are versioned strings so that golden files survive convention
changes.  Entries flagged ``constant`` are state-independent (e.g. the
leading hyper-characteristic coefficient) or guaranteed-invariant under
the tagged symmetry group; only those entries are compared in
``guaranteed_only`` mode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import CONVENTION, DensityState, PureState, represent
from .errors import ValidationError
from .hyperdet import (
    charpoly_coeffs,
    det222,
    hdet,
    hyper_charpoly,
    principal_minor_sum,
)

NECESSARILY_INEQUIVALENT = "NECESSARILY_INEQUIVALENT"
CONSISTENT = "CONSISTENT"

ABS_FLOOR = 1e-12


@dataclass(frozen=True)
class FingerprintEntry:
    name: str
    value: complex
    constant: bool = False  # state-independent by construction
    guaranteed: bool = True  # invariance is mathematically forced


@dataclass(frozen=True, eq=False)
class InvariantFingerprint:
    kind: str  # "density" or "pure"
    dims: tuple
    convention: str
    entries: tuple  # of FingerprintEntry

    def __post_init__(self):
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            raise ValidationError("fingerprint entry names must be unique")

    def names(self):
        return [e.name for e in self.entries]

    def value(self, name):
        for e in self.entries:
            if e.name == name:
                return e.value
        raise KeyError(name)

    def restricted(self, guaranteed_only):
        if not guaranteed_only:
            return self
        kept = tuple(e for e in self.entries if e.guaranteed)
        return InvariantFingerprint(self.kind, self.dims, self.convention, kept)


def bipartite_fingerprint(rho, bases=None):
    """Charpoly coefficients of the square Bloch matrix of a d x d state.

    Emits F_1..F_{d^2} from det(lam*I - A) = sum lam^{d^2-i} F_i, and for
    d = 2 the principal-minor aliases tr(A), sum of 2x2 minors, sum of
    3x3 minors and det(A).

    Only det(A) is mathematically forced to be invariant (under LU and
    same-rotation basis changes); the middle coefficients are emitted
    for empirical audit.
    """
    rho = _as_density(rho)
    if rho.nparties != 2 or rho.dims[0] != rho.dims[1]:
        raise ValidationError(
            "bipartite_fingerprint needs two parties of equal dimension; "
            "use rectangular_fingerprint for unequal dimensions"
        )
    d = rho.dims[0]
    A = represent(rho, bases=bases).data
    poly = charpoly_coeffs(A)
    n = d * d
    entries = [
        FingerprintEntry(
            f"charpoly.F{i}@v1",
            poly.coefficient(n - i),
            guaranteed=(i == n),
        )
        for i in range(1, n + 1)
    ]
    if d == 2:
        entries.extend(
            [
                FingerprintEntry("alias.trace@v1", np.trace(A), guaranteed=False),
                FingerprintEntry(
                    "alias.minor2.sum@v1", principal_minor_sum(A, 2), guaranteed=False
                ),
                FingerprintEntry(
                    "alias.minor3.sum@v1", principal_minor_sum(A, 3), guaranteed=False
                ),
                FingerprintEntry("alias.det@v1", np.linalg.det(A)),
            ]
        )
    return InvariantFingerprint("density", rho.dims, CONVENTION, tuple(entries))


def rectangular_fingerprint(rho, bases=None):
    """det(A A^t) and det(A^t A) of the rectangular Bloch matrix."""
    rho = _as_density(rho)
    if rho.nparties != 2:
        raise ValidationError("rectangular_fingerprint needs exactly two parties")
    A = represent(rho, bases=bases).data
    entries = (
        FingerprintEntry("det.AAt@v1", np.linalg.det(A @ A.T)),
        FingerprintEntry("det.AtA@v1", np.linalg.det(A.T @ A)),
    )
    return InvariantFingerprint("density", rho.dims, CONVENTION, entries)


def even_partite_fingerprint(rho, bases=None, constant_only=False, threads=1):
    """Hyper-characteristic polynomial coefficients of an even-partite state.

    For 2n parties of equal dimension d, emits the coefficients
    c_0..c_{d^2} of hdet(lam * I_paired - [rho]).  The leading
    coefficient is state-independent and flagged constant.  Only the
    constant term c_0 = (-1)^{d^2} hdet([rho]) is guaranteed invariant;
    with ``constant_only`` the polynomial accumulation is skipped and
    c_0 is computed directly from hdet.
    """
    rho = _as_density(rho)
    dims = rho.dims
    if len(dims) % 2 != 0:
        raise ValidationError("even_partite_fingerprint needs an even party count")
    if len(set(dims)) != 1:
        raise ValidationError("even_partite_fingerprint needs equal local dimensions")
    N = dims[0] ** 2
    A = represent(rho, bases=bases)
    if constant_only:
        c0 = (-1) ** N * hdet(A, threads=threads)
        entries = (FingerprintEntry("hdet.c0@v1", c0),)
    else:
        poly = hyper_charpoly(A, threads=threads)
        entries = tuple(
            FingerprintEntry(
                f"hdet.c{k}@v1",
                poly.coefficient(k),
                constant=(k == N),
                guaranteed=(k in (0, N)),
            )
            for k in range(N + 1)
        )
    return InvariantFingerprint("density", dims, CONVENTION, entries)


def pure_bipartite_det(phi):
    """Determinant of the amplitude matrix of a bipartite d x d pure state."""
    phi = _as_pure(phi)
    if phi.nparties != 2 or phi.dims[0] != phi.dims[1]:
        raise ValidationError("pure_bipartite_det needs a square amplitude matrix")
    return complex(np.linalg.det(phi.amplitudes.data))


def pure_three_qubit_det(phi):
    """Second hyperdeterminant of a three-qubit amplitude tensor."""
    phi = _as_pure(phi)
    if phi.dims != (2, 2, 2):
        raise ValidationError(f"pure_three_qubit_det needs dims (2,2,2), got {phi.dims}")
    return det222(phi.amplitudes)


def pure_fingerprint(phi):
    """Fingerprint of a pure state, dispatched by amplitude format."""
    phi = _as_pure(phi)
    if phi.dims == (2, 2, 2):
        D = pure_three_qubit_det(phi)
        entries = (
            FingerprintEntry("det222@v1", D),
            FingerprintEntry("tangle3@v1", 4.0 * abs(D)),
        )
    elif phi.nparties == 2 and phi.dims[0] == phi.dims[1]:
        det = pure_bipartite_det(phi)
        entries = (
            FingerprintEntry("pure.det@v1", det, guaranteed=False),
            FingerprintEntry("pure.absdet@v1", abs(det)),
        )
    else:
        raise ValidationError(f"no pure-state invariant set for dims {phi.dims}")
    return InvariantFingerprint("pure", phi.dims, CONVENTION, entries)


def fingerprint_state(state, bases=None, guaranteed_only=False, threads=1):
    """Dispatch to the invariant set matching the state's shape."""
    if isinstance(state, PureState):
        fp = pure_fingerprint(state)
    elif isinstance(state, DensityState):
        if state.nparties == 2:
            if state.dims[0] == state.dims[1]:
                fp = bipartite_fingerprint(state, bases=bases)
            else:
                fp = rectangular_fingerprint(state, bases=bases)
        elif state.nparties % 2 == 0 and len(set(state.dims)) == 1:
            fp = even_partite_fingerprint(
                state, bases=bases, constant_only=guaranteed_only, threads=threads
            )
        else:
            raise ValidationError(
                f"no invariant set for a mixed state with dims {state.dims}"
            )
    else:
        raise ValidationError(f"unsupported state type {type(state).__name__}")
    return fp.restricted(guaranteed_only)


def relative_difference(v1, v2):
    """|v1 - v2| relative to the larger magnitude, floored at 1e-12."""
    diff = abs(v1 - v2)
    scale = max(abs(v1), abs(v2))
    if scale < ABS_FLOOR:
        return diff
    return diff / scale


@dataclass(frozen=True)
class ComparisonResult:
    verdict: str
    differing: tuple  # names of entries exceeding the tolerance
    max_difference: float


def compare_fingerprints(f1, f2, tol=1e-8):
    """Compare fingerprints of identically shaped states.

    Returns NECESSARILY_INEQUIVALENT if any shared non-constant entry
    differs by more than ``tol`` (relative, floored at absolute 1e-12),
    CONSISTENT otherwise.  Consistency never implies equivalence.
    """
    if (f1.kind, f1.dims, f1.convention) != (f2.kind, f2.dims, f2.convention):
        raise ValidationError(
            "fingerprints have different shape or convention tags and "
            "cannot be compared"
        )
    if f1.names() != f2.names():
        raise ValidationError("fingerprints list different invariants")
    differing = []
    worst = 0.0
    for e1, e2 in zip(f1.entries, f2.entries):
        if e1.constant:
            continue
        diff = relative_difference(e1.value, e2.value)
        worst = max(worst, diff)
        if diff > tol:
            differing.append(e1.name)
    verdict = NECESSARILY_INEQUIVALENT if differing else CONSISTENT
    return ComparisonResult(verdict, tuple(differing), worst)


def _as_density(state):
    if isinstance(state, DensityState):
        return state
    raise ValidationError(f"expected a density state, got {type(state).__name__}")


def _as_pure(state):
    if isinstance(state, PureState):
        return state
    raise ValidationError(f"expected a pure state, got {type(state).__name__}")
