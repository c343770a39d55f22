#!/usr/bin/env python3
"""Print the diamond catalog with theoremhood and the (*)/(**) flags."""
from s4adm.catalog import evaluate_catalog


def main():
    print(f"{'#':>2}  {'thm':5} {'*':5} {'**':5} {'cm':>3}  formula")
    for e in evaluate_catalog():
        cm = "-" if e.countermodel is None else len(e.countermodel.worlds)
        print(f"{e.number:>2}  {e.theorem!s:5} {e.star!s:5} {e.star_star!s:5} {cm:>3}  {e.formula}")


if __name__ == "__main__":
    main()
