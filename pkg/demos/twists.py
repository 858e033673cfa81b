# d-new pieces of each component and the ramified characters acting on them.

from pathlib import Path

from supergal import CurveInput, assemble_report, dnew_genera

data = Path(__file__).parent / "data"
rep = assemble_report(CurveInput.from_json((data / "example1.json").read_text()))

print("whole curve:", {d: gn for d, (_, gn) in dnew_genera(6, 9).items()})
for cid, rows in rep.dnew_rows.items():
    fam = rep.families[cid]
    for row in rows:
        r = row.to_dict()
        print(f"  s{cid} (e_t = {fam.e_t}) d = {row.divisor}: new genus {row.genus_d_new}, inertia {r['inertia']}")
print("over K, graph part:", rep.inertia_over_K["status"])
