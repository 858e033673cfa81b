# Components over each cluster, the dual graph, and the genus bookkeeping.

from pathlib import Path

from supergal import CurveInput, assemble_report, to_dot

data = Path(__file__).parent / "data"

for name in ["example1.json", "example2.json", "two_clusters.json"]:
    rep = assemble_report(CurveInput.from_json((data / name).read_text()))
    print(name)
    for cid, fam in rep.families.items():
        print(f"  s{cid}: {fam.equation():40s} {fam.d} component(s) of genus {fam.genus_each}")
    g = rep.graph
    print(f"  |V| = {len(g.vertices)}  |E| = {len(g.edges)}  toric rank = {rep.toric_rank}")
    print(f"  {rep.abelian_genus_sum} + {rep.toric_rank} = {rep.curve_genus}")

# the smallest graph as Graphviz source
print(to_dot(rep.graph, rep.families))
