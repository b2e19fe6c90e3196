"""Hypermatrix invariants of multipartite quantum states.

Bloch hypermatrix representations in generalized Gell-Mann bases,
Cayley hyperdeterminants, hyper-characteristic polynomials, invariant
fingerprints and randomized invariance audits.
"""

from .bloch import (
    BlochBasis,
    DensityState,
    InducedMatrix,
    LocalOperatorChain,
    PureState,
    apply_local,
    gell_mann_basis,
    induced_chain,
    induced_matrix,
    reconstruct,
    represent,
    rotate_basis,
)
from .errors import BudgetError, ValidationError
from .hyperdet import (
    LambdaPolynomial,
    charpoly_coeffs,
    det222,
    det222_epsilon,
    hdet,
    hdet_bruteforce,
    hyper_charpoly,
    hyper_charpoly_interpolated,
    leaf_budget,
    principal_minor_sum,
)
from .hypermatrix import (
    HyperMatrix,
    chain_multiply,
    evaluate_form,
    kronecker,
    mode_multiply,
    paired_identity,
    vec_realign,
)
from .invariants import (
    CONSISTENT,
    NECESSARILY_INEQUIVALENT,
    InvariantFingerprint,
    bipartite_fingerprint,
    compare_fingerprints,
    even_partite_fingerprint,
    fingerprint_state,
    pure_bipartite_det,
    pure_three_qubit_det,
    rectangular_fingerprint,
)
from .audit import (
    INCONCLUSIVE,
    INVARIANT,
    NOT_INVARIANT,
    AuditReport,
    audit,
    claims_experiment,
    format_reports,
)
from .sampling import (
    random_basis_rotation,
    random_chain,
    random_density,
    random_pure,
    random_sl,
    random_unitary,
)

__version__ = "0.1.0"
