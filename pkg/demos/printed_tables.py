"""Walk the printed base-case tables: which rows fail as printed and what the repair changed."""

from splitstar import base
from splitstar.data.printed_tables import PRINTED
from splitstar.permutation import format_perm

doc = base.load_document()

for table in (1, 2, 3):
    print(f"table {table}, second-cycle targets {', '.join(doc['tables'][str(table)]['targets'])}")
    for ell in range(3, 13):
        row = doc["tables"][str(table)]["rows"][str(ell)]
        if row["status"] == "printed":
            continue
        printed_c1, printed_c2 = (base.parse_cycle(t) for t in PRINTED[table][ell])
        print(f"  ell={ell}: {len(row['errata'])} problems, e.g. {row['errata'][0]}")
        if [format_perm(x) for x in printed_c1] != row["c1"]:
            print(f"    c1 printed  {' '.join(map(format_perm, printed_c1))}")
            print(f"    c1 repaired {' '.join(row['c1'])}")
        changed = sum(a != b for a, b in zip(map(format_perm, printed_c2), row["c2"]))
        print(f"    c2 positions changed: {changed} of {len(row['c2'])}")

# covers for v in subnetworks 1 and 3 are not printed; they come from the exhaustive search
print("\ngenerated covers for", ", ".join(sorted(doc["generated"])))
