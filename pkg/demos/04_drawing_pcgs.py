# Write one DOT file per outcome PCG.  Render with e.g.
#   dot -Tpng pcgs/phi5_01111.dot -o phi5_01111.png
#
# Run: python demos/04_drawing_pcgs.py [outdir]

import sys
from pathlib import Path

from pcgdavn import export_dot, generate, verify_davn
from pcgdavn.state import outcome_to_bits

out = Path(sys.argv[1] if len(sys.argv) > 1 else "pcgs")
out.mkdir(exist_ok=True)

for name in ("ghz3", "phi4", "phi5", "fig1a", "fig1c"):
    report = verify_davn(generate(name))
    for r in report.records:
        path = out / f"{name}_{outcome_to_bits(r.outcome)}.dot"
        path.write_text(export_dot(r.pcg, name=f"{name}_{outcome_to_bits(r.outcome)}"))
    print(f"{name}: {len(report.records)} PCGs, {report.paradox_count} un-colorable")

# Filled vertices are Z = +1, hollow are Z = -1; red edges demand an odd
# number of red vertices, green edges an even number.  Hyperedges are drawn
# as a small dot joined to their members.
