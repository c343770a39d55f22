#!/usr/bin/env python3
"""Admissibility verdicts for a few small rules, with witnesses and extensions."""
from s4adm.decide import is_admissible, is_valid_rule, reflexive_extension
from s4adm.rnf import Disjunct, rule_from_text

RULES = ["<>p1 / p1", "<>p1, p1 <-> []p1 / p1", "p1 / []p1", "p1 / p1", "[]p1 / p1", "<>[]p1 / []p1"]


def show(n, ids):
    return "{" + ", ".join(str(Disjunct.from_id(n, i)) for i in sorted(ids)) + "}"


def main():
    for text in RULES:
        r = rule_from_text(text)
        ok, W = is_admissible(r)
        line = f"{text:28} n={r.n} valid={is_valid_rule(r)!s:5} admissible={ok!s:5}"
        if W is not None:
            line += f" witness={show(r.n, W)}"
        print(line)
        if not is_valid_rule(r):
            ext = reflexive_extension(r)
            print(f"{'':28} reflexive extension admissible={is_admissible(ext)[0]}")


if __name__ == "__main__":
    main()
