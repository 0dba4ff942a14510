"""Print the eta and xi tables for s=2,3,4 next to the composite binary images."""

import argparse

from modgray import graymaps as gm


def fmt(t):
    return "".join(str(x) for x in t)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=4)
    args = ap.parse_args()
    for s in range(2, args.max_s + 1):
        eta = gm.eta(s)
        comp = gm.compose_modular(s)
        xi = gm.xi(s) if s in gm.XI_SIZES else None
        print(f"Z_{2**s} -> Z_{2**(s - 1)}^2")
        for u in range(2**s):
            row = f"  {u:>3}  eta {fmt(eta(u)):>4}"
            if xi is not None:
                row += f"  xi {fmt(xi(u)):>4}"
            row += f"  binary {fmt(comp(u))}"
            print(row)


if __name__ == "__main__":
    main()
