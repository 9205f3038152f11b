"""Regenerate src/splitstar/data/base_covers.json from the printed tables and the oracle.

Run from the repository root:  python tools/build_base_tables.py
"""

import json
import sys
from pathlib import Path

from splitstar.base import DATA_FILE, build_document

OUT = Path(__file__).resolve().parent.parent / "src" / "splitstar" / "data" / DATA_FILE


def main():
    doc = build_document()
    OUT.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    for table, body in doc["tables"].items():
        for ell, row in body["rows"].items():
            if row["status"] != "printed":
                print(f"table {table} row {ell}: {row['status']} ({len(row['errata'])} violations)")
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
