# Three-qubit pigeonhole paradox from (|000> - |011> - |101> - |110>)/2.
#
# Run: python demos/01_ghz_pigeonhole.py

from pcgdavn import (build_pcg, check_colorable, derive_conditions, generate,
                     lhv_consistent_assignments, outcome_support)
from pcgdavn.state import outcome_to_bits

state = generate("ghz3")

# Measuring Z on all three qubits gives four outcomes, each with probability 1/4.
for outcome, p in outcome_support(state):
    print(outcome_to_bits(outcome), p)

# Given Z1 = Z2 = Z3 = +1, every pair of X outcomes must disagree.
cs = derive_conditions(state, (1, 1, 1))
for c in cs.conditions:
    print(" ", c.describe())

# Three pigeons, two boxes, every pair in different boxes: the PCG is a red
# triangle and no coloring exists.  The certificate lists the edges whose
# parity equations add up to 0 = 1.
pcg = build_pcg(cs.outcome, cs)
print(check_colorable(pcg))

# The other three outcomes also give paradoxes, so no deterministic local
# model survives any run.
print("consistent LHV assignments:", lhv_consistent_assignments(state).count)
