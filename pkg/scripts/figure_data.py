"""Write the data bundles for both figures and print the headline numbers.

    python3 scripts/figure_data.py [out_dir]

Produces ``<out>/ellipse_fig1`` and ``<out>/redmond_fig2`` via the CLI and
reads back the quantities worth eyeballing: where the t = 0 density peaks,
the semi-axes of the centre and classical paths, the Bz column of the wave
scenario and the radiated-to-kinetic energy ratio.
"""

import csv
import json
import sys
from pathlib import Path

import numpy as np

from dirac_rdi import cli

ROOT = Path(__file__).resolve().parents[1]


def table(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return np.array(rows[1:], float)


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "out")
    for cfg in ("ellipse_fig1", "redmond_fig2"):
        code = cli.main(["run", str(ROOT / "configs" / f"{cfg}.toml"), "--out", str(out / cfg)])
        if code:
            raise SystemExit(code)

    ell = out / "ellipse_fig1"
    d = table(ell / "density.csv")
    first = d[d[:, 0] == 0.0]
    peak = first[np.argmax(first[:, 4])]
    c = table(ell / "trajectory_center.csv")
    b = table(ell / "trajectory_classical_0.csv")
    man = json.loads((ell / "manifest.json").read_text())
    print("\nellipse: t=0 density peak at x={:.4g} m, y={:.3g} m".format(peak[1], peak[2]))
    print("ellipse: centre semi-axes {:.4g} m, {:.4g} m".format(np.ptp(c[:, 1]) / 2, np.ptp(c[:, 2]) / 2))
    print("ellipse: classical semi-axes {:.4g} m, {:.4g} m".format(np.ptp(b[:, 1]) / 2, np.ptp(b[:, 2]) / 2))
    lar = man["larmor"]
    print("ellipse: radiated {:.3g} J per period, kinetic {:.3g} J, ratio {:.2g}".format(
        lar["radiated_J"], lar["kinetic_J"], lar["ratio"]))
    print("ellipse: b = eB/(m w) = {:.6g}, beta1 = {:.6g}".format(man["scaled"]["b"], man["scaled"]["beta1"]))

    red = out / "redmond_fig2"
    f = table(red / "fields.csv")
    man = json.loads((red / "manifest.json").read_text())
    print("wave: Bz in [{:.6g}, {:.6g}] critical units, -eB = {:.6g}".format(
        f[:, 9].min(), f[:, 9].max(), -man["scaled"]["eB_internal"]))
    for note in man["notes"]:
        print("wave note:", {k: v for k, v in note.items() if k != "message"})


if __name__ == "__main__":
    main()
