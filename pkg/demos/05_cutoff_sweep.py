"""How the symmetric equilibrium cut-off moves with cost and crowding.

For n equal-cost nodes uniform on the disk the equilibrium cut-off has the
closed form R * sqrt(1 - (c/(1+c))^(1/(n-1))).  Costlier failures deter
transmission, and so does a more crowded network; the cut-off falls in both
directions.  Writes the same CSV the `ragame cutoff-sweep` command emits.
"""

from pathlib import Path

import numpy as np

from ragame import solve_symmetric_uniform

R = 12.0
OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    ns = (2, 3, 5, 10)
    cs = [float(c) for c in np.linspace(0.1, 10.0, 100)]

    path = OUT / "cutoff_sweep.csv"
    with open(path, "w") as fh:
        fh.write("n,c,d_star\n")
        for n in ns:
            for c in cs:
                fh.write(f"{n},{c!r},{solve_symmetric_uniform(n, c, R)!r}\n")
    print(f"-> {path}\n")

    print("cut-off d* (radius 12):\n")
    header = "      c  " + "".join(f"   n={n:<3d}" for n in ns)
    print(header)
    for c in (0.1, 0.3, 1.0, 3.0, 10.0):
        row = f"  {c:5.1f}  " + "".join(f"  {solve_symmetric_uniform(n, c, R):6.3f}" for n in ns)
        print(row)
    print(
        "\nreading the table: down a column the cost grows and the cut-off\n"
        "shrinks; across a row the crowd grows and the cut-off shrinks; as\n"
        "c -> 0 every cut-off climbs back toward the full radius."
    )


if __name__ == "__main__":
    main()
