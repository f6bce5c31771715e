# Two scalable families and their single-qubit marginals.
#
# Run: python demos/03_scalable_families.py   (a few seconds)

from fractions import Fraction
from math import comb

from pcgdavn import generate, reduced_density, verify_davn

# The marginal of phi_n follows from counting components with qubit 1 in |0>:
# 1 + C(n-1, 2) of the C(n, 2) + 1 components.
print("phi_n: |0..0> minus every weight-2 vector")
for n in range(4, 9):
    state = generate("phi_n", n)
    report = verify_davn(state)
    print(f"  n={n}  outcomes={len(report.records):3d}  DAVN={report.davn}  "
          f"rho={reduced_density(state, 1)}  "
          f"counted: ({Fraction(comb(n, 2) - n + 2, comb(n, 2) + 1)}, {Fraction(n - 1, comb(n, 2) + 1)})")

print("phi_2n3: |0..0> minus every weight-(2n+2) vector on 2n+3 qubits")
for n in range(1, 4):
    state = generate("phi_2n3", n)
    report = verify_davn(state)
    print(f"  qubits={state.n}  outcomes={len(report.records):3d}  DAVN={report.davn}  "
          f"rho={reduced_density(state, 1)}")
