# Frobenius on the cycle space of the dual graph, at p = 7 and p = 13.
# At p = 7, -1 is not a square, so the two components over s1 are swapped.

from pathlib import Path

import numpy as np

from supergal import CurveInput, assemble_report
from supergal.graph import perm_orbits

data = Path(__file__).parent / "data"

for name in ["example1.json", "example1_p13.json"]:
    rep = assemble_report(CurveInput.from_json((data / name).read_text()))
    h1 = rep.h1_action
    m = np.array(h1.frobenius_matrix)
    moved = [o for o in perm_orbits(rep.graph.frobenius_vertex_perm) if len(o) > 1]
    print(f"p = {rep.input.p}: swapped vertices {[[rep.graph.vertices[k] for k in o] for o in moved]}")
    print(f"  order {h1.order}, trace {np.trace(m)}, eigenvalues {np.round(np.linalg.eigvals(m).real, 6)}")
    print(f"  cyclotomic factors of the characteristic polynomial: {h1.eigenvalue_multiplicities}")
