"""Randomized invariance audits of the fingerprint invariants.

Fingerprints a mixed two-qubit state and a mixed four-qubit state, then
audits which entries survive random local unitaries, random local SL
operators, and shared Bloch-basis rotations.  The printed verdicts show
the expected split: determinant-type entries are invariant, the middle
characteristic coefficients are not (except under basis rotations,
where everything is).
"""

from hyperinv import audit, fingerprint_state, format_reports, random_density
from hyperinv.audit import GROUP_BASIS, GROUP_LU, GROUP_SLOCC

rho2 = random_density((2, 2), rank=3, seed=11)
print("two-qubit fingerprint:")
for e in fingerprint_state(rho2).entries:
    flag = "guaranteed" if e.guaranteed else "audited"
    print(f"  {e.name:<22} {e.value.real:+.6f}  ({flag})")
print()

for group in (GROUP_LU, GROUP_BASIS):
    print(f"audit under {group}:")
    print(format_reports(audit(rho2, group, trials=20, tol=1e-8, seed=0)))
    print()

rho4 = random_density((2, 2, 2, 2), rank=2, seed=12)
print("four-qubit audit under SLOCC (only c0 and the constant leading")
print("coefficient are expected to hold):")
print(format_reports(audit(rho4, GROUP_SLOCC, trials=10, tol=1e-6, seed=0)))
