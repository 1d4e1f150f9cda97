"""Small-scale versions of the three rate sweeps, written as CSV.

Runs 50 realizations per point (the full experiments use 1000), prints
the aggregated means, and writes the same CSV files the command-line
tool produces so the plots package can render them:

    python3 demos/05_rate_sweeps.py
    cd plots && npm run build && node dist/cli.js sweep \
        --input ../demos/out/sweep_duration_T.csv --out rate_vs_T.svg
"""

from pathlib import Path

import numpy as np

from matraj.cli import main as matraj_cli

OUT = Path(__file__).parent / "out"
REAL = "50"

sweeps = [
    ("duration_T", "0.5,1,2"),
    ("num_paths", "1,2,3,4,5,6,7,8"),
    ("v_max", "0.06,0.12,0.18,0.24"),
]

for variable, values in sweeps:
    status = matraj_cli(["sweep", "--variable", variable, "--values", values,
                         "--realizations", REAL, "--duration", "2",
                         "--seed", "42", "--out-dir", str(OUT)])
    assert status == 0
    print(f"wrote {OUT / f'sweep_{variable}.csv'}")

# also a trajectory trace for the panel figure
status = matraj_cli(["trace", "--duration", "1", "--seed", "42",
                     "--out-dir", str(OUT)])
assert status == 0
print(f"wrote {OUT}/trajectory_<scheme>.csv and {OUT}/gain_landscape.csv")

print("\nduration sweep means (bit/s/Hz):")
rows = (OUT / "sweep_duration_T.csv").read_text().strip().splitlines()[1:]
for row in rows:
    name, value, scheme, mean, std, n, seed = row.split(",")
    print(f"  T = {float(value):3.1f} s  {scheme:<12} {float(mean):7.3f} "
          f"(std {float(std):.3f})")
