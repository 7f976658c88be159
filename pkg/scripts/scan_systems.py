#!/usr/bin/env python3
"""Ground-state sweeps N = 2..8 for the three nonrelativistic systems.

One CSV per (system, phi) in results/, with the same columns as
``envelope scan``. The phi values are the genuine one and the improved
value quoted for each system.
"""

import csv
from pathlib import Path

from envelope_theory.cli import SCAN_COLUMNS, fmt, scan_rows
from envelope_theory.refdata import QUOTED_PHI, preset

OUT = Path(__file__).resolve().parent.parent / "results"


def main():
    OUT.mkdir(exist_ok=True)
    # sgb also at phi = 1, which is exact for two bodies
    runs = [(name, phi) for name in ("wib", "sgb", "cb") for phi in (2.0, QUOTED_PHI[name])]
    runs.append(("sgb", 1.0))
    for name, phi in runs:
        rows = scan_rows(lambda n: preset(name, n), 2, 8, phi, None, add_cm=(name == "cb"))
        path = OUT / f"scan_{name}_phi{phi:g}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(SCAN_COLUMNS)
            w.writerows([fmt(v) for v in row] for row in rows)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
