#!/usr/bin/env python3
"""Replay an index-level chain of decomposition steps and print each stage.

Usage: replay_decomposition.py [STEP ...]   (default: +2 -2 +3 s +4 s)
"""
import sys

from s4adm.sdecomp import RuleSystem, replay_step

ROOT = RuleSystem.of(None, [({1, 2, 3, 4, 10, 12}, {1})])


def main(steps):
    systems = [ROOT]
    print("start:", " u ".join(map(str, systems)))
    for step in steps:
        systems = replay_step(systems, step)
        print(f"{step:>5}:", " u ".join(map(str, systems)))


if __name__ == "__main__":
    main(sys.argv[1:] or ["+2", "-2", "+3", "s", "+4", "s"])
