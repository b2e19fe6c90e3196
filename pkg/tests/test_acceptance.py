"""End-to-end acceptance checks.

Each test exercises one advertised capability at its stated tolerance
and prints a single PASS/FAIL line (run with ``pytest -s`` to see them
inline).  Run the whole file with::

    pytest tests/test_acceptance.py -s
"""

import numpy as np
import pytest

from hyperinv import (
    CONSISTENT,
    INVARIANT,
    NECESSARILY_INEQUIVALENT,
    HyperMatrix,
    apply_local,
    audit,
    claims_experiment,
    compare_fingerprints,
    det222,
    det222_epsilon,
    even_partite_fingerprint,
    fingerprint_state,
    hdet,
    hyper_charpoly,
    hyper_charpoly_interpolated,
    induced_matrix,
    kronecker,
    mode_multiply,
    random_basis_rotation,
    random_chain,
    random_density,
    random_sl,
    reconstruct,
    represent,
    rotate_basis,
)
from hyperinv.audit import GROUP_SLOCC
from hyperinv.bloch import DensityState, PureState, gell_mann_basis
from hyperinv.statefile import load_state

from conftest import STATES_DIR, rel_err


def report(number, name, ok):
    print(f"\nACCEPTANCE {number:02d} [{name}]: {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def test_01_hdet_matches_determinant_on_matrices():
    rng = np.random.default_rng(1001)
    worst = 0.0
    for n in (4, 9):
        for _ in range(50):
            M = random_complex(rng, (n, n))
            worst = max(worst, rel_err(hdet(HyperMatrix(M)), np.linalg.det(M)))
    report(1, "hdet == det on 100 random matrices", worst < 1e-10)


def test_02_hdet_multiplicativity_per_direction():
    rng = np.random.default_rng(1002)
    worst = 0.0
    for t in range(50):
        A = HyperMatrix(random_complex(rng, (4, 4, 4, 4)))
        B = random_complex(rng, (4, 4))
        k = t % 4
        worst = max(
            worst,
            rel_err(hdet(mode_multiply(B, k, A)), np.linalg.det(B) * hdet(A)),
        )
    report(2, "hdet multiplicativity under direction multiplication", worst < 1e-8)


def test_03_second_hyperdeterminant_identities():
    rng = np.random.default_rng(1003)
    ok = True
    for _ in range(1000):
        A = HyperMatrix(random_complex(rng, (2, 2, 2)))
        d = det222(A)
        ok &= abs(d - det222_epsilon(A)) <= 1e-12 * max(1.0, abs(d))
    for t in range(100):
        A = HyperMatrix(random_complex(rng, (2, 2, 2)))
        B = random_complex(rng, (2, 2))
        k = t % 3
        ok &= (
            rel_err(det222(mode_multiply(B, k, A)), np.linalg.det(B) ** 2 * det222(A))
            < 1e-10
        )
    ghz = np.zeros((2, 2, 2))
    ghz[0, 0, 0] = ghz[1, 1, 1] = 1 / np.sqrt(2)
    w = np.zeros((2, 2, 2))
    w[1, 0, 0] = w[0, 1, 0] = w[0, 0, 1] = 1 / np.sqrt(3)
    ok &= abs(det222(HyperMatrix(ghz)) - 0.25) < 1e-12
    ok &= abs(det222(HyperMatrix(w))) < 1e-12
    report(3, "second hyperdeterminant transcriptions and benchmark values", ok)


def test_04_bloch_round_trip_and_induced_action():
    rng = np.random.default_rng(1004)
    ok = True
    for dims in [(2,), (3,), (2, 2), (2, 3), (3, 3), (2, 2, 2), (3, 2, 3)]:
        D = int(np.prod(dims))
        H = random_complex(rng, (D, D))
        rho = DensityState(dims, H + H.conj().T)
        back = reconstruct(represent(rho), dims)
        ok &= np.max(np.abs(back.matrix - rho.matrix)) < 1e-12 * max(
            1.0, np.max(np.abs(rho.matrix))
        )
    rho = random_density((2, 2), 3, seed=1004)
    for t in range(50):
        chain = random_chain((2, 2), "special-linear", seed=[1004, t])
        lhs = represent(apply_local(rho, chain)).data
        Bs = [induced_matrix(op).B for op in chain.ops]
        rhs = Bs[0] @ represent(rho).data @ Bs[1].T
        ok &= np.max(np.abs(lhs - rhs)) < 1e-10 * max(1.0, np.max(np.abs(rhs)))
    report(4, "Bloch round trip and induced-matrix consistency", ok)


def test_05_induced_determinants():
    ok = True
    for d, count in ((2, 100), (3, 50)):
        for t in range(count):
            B = induced_matrix(random_sl(d, seed=[1005, d, t])).B
            ok &= abs(np.linalg.det(B) - 1.0) < 1e-8
    rng = np.random.default_rng(1005)
    for m in (2, 3, 4):
        for n in (2, 3, 4):
            A = random_complex(rng, (m, m))
            C = random_complex(rng, (n, n))
            lhs = np.linalg.det(kronecker(C.T, A))
            rhs = np.linalg.det(A) ** n * np.linalg.det(C) ** m
            ok &= rel_err(lhs, rhs) < 1e-10
    report(5, "unit induced determinants and sandwich determinant law", ok)


def test_06_slocc_invariance_of_constant_coefficient():
    ok = True
    worst = 0.0
    for s in range(10):
        rho = random_density((2, 2, 2, 2), rank=1 + s % 3, seed=[1006, s])
        c0 = even_partite_fingerprint(rho, constant_only=True).value("hdet.c0@v1")
        for t in range(20):
            chain = random_chain((2, 2, 2, 2), "special-linear", seed=[1006, s, t])
            c0p = even_partite_fingerprint(
                apply_local(rho, chain), constant_only=True
            ).value("hdet.c0@v1")
            worst = max(worst, rel_err(c0p, c0))
    ok &= worst < 1e-6
    reports = audit(
        random_density((2, 2, 2, 2), 2, seed=[1006, 99]),
        GROUP_SLOCC,
        trials=20,
        tol=1e-6,
        seed=1006,
        fingerprint_fn=lambda s, bases=None: fingerprint_state(
            s, bases=bases, guaranteed_only=True
        ),
    )
    ok &= all(r.verdict == INVARIANT for r in reports)
    report(6, "SLOCC invariance of the constant hyper-charpoly coefficient", ok)


def test_07_hyper_charpoly_cross_checks():
    rng = np.random.default_rng(1007)
    ok = True
    for _ in range(20):
        A = HyperMatrix(random_complex(rng, (4, 4, 4, 4)))
        exact = hyper_charpoly(A)
        interp = hyper_charpoly_interpolated(A)
        scale = float(np.max(np.abs(exact.as_array(5))))
        ok &= np.max(np.abs(exact.as_array(5) - interp.as_array(5))) < 1e-8 * scale
        ok &= rel_err(exact.coefficient(0), (-1) ** 4 * hdet(A)) < 1e-12
    report(7, "hyper-charpoly exact vs interpolated and constant term", ok)


def test_08_basis_rotation_invariance():
    states = [
        load_state(STATES_DIR / "bell.json"),
        random_density((2, 2), 3, seed=1008),
        load_state(STATES_DIR / "mixed4q_rank2.json"),
    ]
    worst = 0.0
    for rho in states:
        ref = fingerprint_state(rho)
        for t in range(20):
            rot_by_dim = {
                d: random_basis_rotation(d, seed=[1008, t, d])
                for d in sorted(set(rho.dims))
            }
            bases = [
                rotate_basis(gell_mann_basis(d), rot_by_dim[d]) for d in rho.dims
            ]
            new = fingerprint_state(rho, bases=bases)
            for name in ref.names():
                worst = max(worst, rel_err(new.value(name), ref.value(name)))
    report(8, "fingerprint invariance under shared basis rotations", worst < 1e-8)


def test_09_fingerprint_comparison_verdicts():
    ghz = load_state(STATES_DIR / "ghz3.json")
    w = load_state(STATES_DIR / "w3.json")
    result = compare_fingerprints(fingerprint_state(ghz), fingerprint_state(w))
    ok = result.verdict == NECESSARILY_INEQUIVALENT and "det222@v1" in result.differing
    rho = random_density((2, 2, 2, 2), 2, seed=1009)
    chain = random_chain((2, 2, 2, 2), "special-linear", seed=[1009, 1])
    r2 = compare_fingerprints(
        fingerprint_state(rho, guaranteed_only=True),
        fingerprint_state(apply_local(rho, chain), guaranteed_only=True),
        tol=1e-6,
    )
    ok &= r2.verdict == CONSISTENT
    report(9, "comparison verdicts separate and relate states correctly", ok)


def test_10_standing_claims_experiment():
    sections = claims_experiment(seed=1010, trials=10, tol=1e-8)
    ok = len(sections) == 4
    for label, reports in sections:
        ok &= isinstance(label, str) and len(reports) >= 1
        ok &= all(r.seed == 1010 and r.trials == 10 for r in reports)
    by_name = {r.invariant: r for r in sections[0][1]}
    ok &= by_name["alias.det@v1"].verdict == INVARIANT
    ok &= all(r.verdict == INVARIANT for r in sections[1][1])
    ok &= {r.invariant: r for r in sections[2][1]}["hdet.c0@v1"].verdict == INVARIANT
    ok &= all(r.verdict == INVARIANT for r in sections[3][1])
    report(10, "standing audit of literature invariance claims", ok)
