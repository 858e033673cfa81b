# Clusters of the roots of f and the triples that see them.
# Run from the repository root: python demos/cluster_picture.py

from pathlib import Path

from supergal import CurveInput, build_cluster_picture, content_valuation, enumerate_classes, to_latex

data = Path(__file__).parent / "data"
curve = CurveInput.from_json((data / "example1.json").read_text())
pic = build_cluster_picture(curve)

print(f"y^{curve.n} = f(x) over Q_{curve.p}, {curve.degree} roots, infinity branched: {curve.has_infinity}")
for s in pic:
    roots = ", ".join(str(curve.roots[i]) for i in sorted(s.members))
    print(f"  s{s.id}: depth {s.depth}, e_t = {content_valuation(s, pic)}, {{{roots}}}")

# each class of triples (a, b, c) picks out one cluster D(a, v(a - b))
for c in enumerate_classes(pic):
    rep = ", ".join(str(x) for x in c.representative)
    print(f"  class of ({rep}), {c.size} triples -> s{c.cluster_id}")

print()
print(to_latex(pic))
