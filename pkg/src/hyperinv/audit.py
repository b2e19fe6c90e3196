"""Empirical invariance audits under randomly sampled local operations.

Each trial samples a symmetry element (local unitaries, local SL
operators, or a Bloch-basis rotation), transforms the state or its
representation, recomputes the invariant fingerprint and records the
per-invariant deviation.  Verdicts threshold the deviation statistics;
they are evidence, not proof.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bloch import (
    SPECIAL_LINEAR,
    UNITARY,
    PureState,
    apply_local,
    gell_mann_basis,
    rotate_basis,
)
from .errors import ValidationError
from .invariants import ABS_FLOOR, fingerprint_state
from .sampling import get_rng, random_basis_rotation, random_chain

GROUP_LU = "LU"
GROUP_SLOCC = "SLOCC"
GROUP_BASIS = "BASIS_ROTATION"

INVARIANT = "INVARIANT"
NOT_INVARIANT = "NOT_INVARIANT"
INCONCLUSIVE = "INCONCLUSIVE"

_CHAIN_GROUPS = {GROUP_LU: UNITARY, GROUP_SLOCC: SPECIAL_LINEAR}


@dataclass(frozen=True)
class AuditReport:
    invariant: str
    group: str
    trials: int
    max_relative_deviation: float
    median_relative_deviation: float
    verdict: str
    seed: int
    cond_cap: float

    def as_dict(self):
        return {
            "invariant": self.invariant,
            "group": self.group,
            "trials": self.trials,
            "max_relative_deviation": self.max_relative_deviation,
            "median_relative_deviation": self.median_relative_deviation,
            "verdict": self.verdict,
            "seed": self.seed,
            "cond_cap": self.cond_cap,
        }


def deviation(reference, transformed):
    """Relative deviation; near-zero references are compared absolutely."""
    diff = abs(transformed - reference)
    if abs(reference) < ABS_FLOOR:
        return diff
    return diff / abs(reference)


def _verdict(max_dev, median_dev, tol):
    if max_dev < tol:
        return INVARIANT
    if median_dev > 100.0 * tol:
        return NOT_INVARIANT
    return INCONCLUSIVE


def audit(
    state,
    group,
    trials,
    tol,
    seed,
    fingerprint_fn=None,
    cond_cap=20.0,
):
    """Audit every fingerprint entry of ``state`` under a symmetry group.

    ``fingerprint_fn(state, bases=None)`` defaults to
    :func:`hyperinv.invariants.fingerprint_state`.  Trial t derives its
    own generator from (seed, t), so serial and parallel runs agree.
    Returns one :class:`AuditReport` per invariant name.
    """
    if fingerprint_fn is None:
        fingerprint_fn = fingerprint_state
    if trials < 1:
        raise ValidationError("need at least one trial")
    if group not in (GROUP_LU, GROUP_SLOCC, GROUP_BASIS):
        raise ValidationError(f"unknown audit group {group!r}")
    if group == GROUP_BASIS and isinstance(state, PureState):
        raise ValidationError(
            "basis-rotation audits apply to density-state representations only"
        )
    reference = fingerprint_fn(state)
    devs = {e.name: [] for e in reference.entries}
    for t in range(trials):
        rng = get_rng([int(seed), t])
        if group in _CHAIN_GROUPS:
            chain = random_chain(
                state.dims, _CHAIN_GROUPS[group], rng, cond_cap=cond_cap
            )
            transformed = fingerprint_fn(apply_local(state, chain))
        else:
            rot_by_dim = {
                d: random_basis_rotation(d, rng) for d in sorted(set(state.dims))
            }
            bases = [
                rotate_basis(gell_mann_basis(d), rot_by_dim[d]) for d in state.dims
            ]
            transformed = fingerprint_fn(state, bases=bases)
        for ref_e, new_e in zip(reference.entries, transformed.entries):
            devs[ref_e.name].append(deviation(ref_e.value, new_e.value))
    reports = []
    for e in reference.entries:
        ds = devs[e.name]
        reports.append(
            AuditReport(
                invariant=e.name,
                group=group,
                trials=trials,
                max_relative_deviation=float(np.max(ds)),
                median_relative_deviation=float(np.median(ds)),
                verdict=_verdict(float(np.max(ds)), float(np.median(ds)), tol),
                seed=int(seed),
                cond_cap=float(cond_cap),
            )
        )
    return reports


def format_reports(reports):
    """Fixed-layout text table, deterministic for fixed inputs."""
    header = (
        f"{'invariant':<24} {'group':<15} {'trials':>6} "
        f"{'max_rel_dev':>24} {'median_rel_dev':>24} {'verdict':<14} seed"
    )
    lines = [header, "-" * len(header)]
    for r in reports:
        lines.append(
            f"{r.invariant:<24} {r.group:<15} {r.trials:>6} "
            f"{r.max_relative_deviation:>24.17g} "
            f"{r.median_relative_deviation:>24.17g} {r.verdict:<14} {r.seed}"
        )
    return "\n".join(lines)


def claims_experiment(seed, trials=20, tol=1e-8):
    """Standing experiment on the literature-claimed but unproven invariances.

    Audits the middle characteristic-polynomial coefficients of bipartite
    mixed states under local unitaries, and the middle
    hyper-characteristic coefficients of 4-qubit mixed states under
    local SL operations, alongside the basis-rotation control where full
    invariance is expected.  Output is documentation, not a test gate.
    """
    from .sampling import random_density

    sections = []
    rho2q = random_density((2, 2), rank=3, seed=[int(seed), 101])
    sections.append(
        (
            "bipartite 2-qubit charpoly coefficients under LU "
            "(middle coefficients are the audited claim)",
            audit(rho2q, GROUP_LU, trials, tol, seed),
        )
    )
    sections.append(
        (
            "bipartite 2-qubit charpoly coefficients under basis rotation "
            "(full invariance expected: similarity transform)",
            audit(rho2q, GROUP_BASIS, trials, tol, seed),
        )
    )
    rho4q = random_density((2, 2, 2, 2), rank=2, seed=[int(seed), 202])
    sections.append(
        (
            "4-qubit hyper-characteristic coefficients under SLOCC "
            "(only c0 and the constant leading term are guaranteed)",
            audit(rho4q, GROUP_SLOCC, trials, max(tol, 1e-6), seed),
        )
    )
    sections.append(
        (
            "4-qubit hyper-characteristic coefficients under basis rotation "
            "(full invariance expected: paired identity is fixed)",
            audit(rho4q, GROUP_BASIS, trials, max(tol, 1e-6), seed),
        )
    )
    return sections
