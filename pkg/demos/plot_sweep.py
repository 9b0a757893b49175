"""Plot a sweep CSV written by the CLI.

    ghz-turbulence sweep --out sweep.csv
    python demos/plot_sweep.py sweep.csv sweep.png

Needs matplotlib (``pip install .[demos]``).
"""
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def main(src, dst):
    with open(src, newline="") as f:
        rows = list(csv.DictReader(line for line in f if not line.startswith("#")))
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    for arms in sorted({r["arms"] for r in rows}, key=len):
        sel = [r for r in rows if r["arms"] == arms]
        theta = [float(r["theta"]) for r in sel]
        left.plot(theta, [float(r["entropy"]) for r in sel], label=f"arms {arms}")
        right.plot(theta, [float(r["tangle"]) for r in sel], label=f"arms {arms}")
    left.set(xlabel="theta", ylabel="linear entropy")
    right.set(xlabel="theta", ylabel="three-tangle estimate")
    left.legend()
    fig.tight_layout()
    fig.savefig(dst, dpi=120)
    print(f"wrote {dst}")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
