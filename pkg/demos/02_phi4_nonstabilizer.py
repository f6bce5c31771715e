# A four-qubit DAVN proof from a state that is not a stabilizer state.
#
# Run: python demos/02_phi4_nonstabilizer.py

from pcgdavn import certify_nonstabilizer, generate, reduced_density, verify_davn

state = generate("phi4")  # (|0000> - sum of the six weight-2 vectors)/sqrt(7)

# Single-qubit marginals are biased, and the state is fully entangled,
# so it cannot be a stabilizer state.
print("rho_1 =", reduced_density(state, 1))
print(certify_nonstabilizer(state))

report = verify_davn(state, with_lhv=True)
for r in report.records:
    kind = "paradox" if r.paradox else "colorable"
    edges = ", ".join(f"{set(v)}{'R' if w < 0 else 'G'}" for v, w in r.pcg.edges)
    print(f"{''.join('0' if m == 1 else '1' for m in r.outcome)}  {r.probability}  {kind}  {edges}")
print("DAVN:", report.davn, " success probability:", report.success_probability,
      " LHV-consistent:", report.lhv_consistent_count)

# Two more four-qubit states with six components each.
for name in ("phi4_prime", "phi4_double_prime"):
    r = verify_davn(generate(name))
    print(name, "DAVN:", r.davn, "outcomes:", len(r.records))
