"""Command-line front end.

Exit codes: 0 when a verdict was reached, 2 on malformed input, 3 when a
resource cap stopped the computation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .catalog import evaluate_catalog
from .config import Limits
from .decide import invalidity_witness, is_admissible, joint_inadmissible, rejects
from .formula import ParseError, parse
from .rnf import Disjunct, RnfRule, parse_rule, to_rnf, to_rnf_joint
from .sdecomp import DEFAULT_STEP_CAP, RuleSystem, decompose
from .sequent import Derivation, DerivationError, verify_derivation
from .supp import DEFAULT_SUBSET_CAP, MEET, STRICT, SuppConstraint, find_supp2_witness, in_supp1, in_supp2, parse_ids
from .tableau import DEFAULT_NODE_CAP, ResourceLimitExceeded, is_theorem

EXIT_OK, EXIT_INPUT, EXIT_LIMIT = 0, 2, 3


class InputError(ValueError):
    pass


def _ids(xs) -> list:
    return None if xs is None else sorted(xs)


def _rnf_json(r: RnfRule) -> dict:
    out = r.to_json()
    out["premise_disjuncts"] = [str(Disjunct.from_id(r.n, i)) for i in sorted(r.premise)]
    return out


def _arity_for(ids) -> int:
    top = max(ids, default=0)
    n = 1
    while 4 ** n <= top:
        n += 1
    return n


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})") from None


def _load_rules(paths: List[str]) -> List[RnfRule]:
    """Rule files hold either rule texts (one per line) or RnfRule JSON."""
    texts, given = [], []
    for path in paths:
        body = Path(path).read_text(encoding="utf-8").strip()
        if body.startswith(("{", "[")):
            obj = _read_json(path)
            given.extend(RnfRule.from_json(o) for o in (obj if isinstance(obj, list) else [obj]))
        else:
            texts.extend(ln for ln in body.splitlines() if ln.strip() and not ln.lstrip().startswith("#"))
    if texts and given:
        raise InputError("mixing rule texts and RnfRule JSON is not supported")
    if given:
        return given
    if not texts:
        raise InputError("no rules given")
    return to_rnf_joint([parse_rule(t) for t in texts])


# ---------------------------------------------------------------------------
# subcommands; each returns a JSON-ready dict


def cmd_prove(a) -> dict:
    f = parse(a.formula)
    thm, cm = is_theorem(f, a.limits.node_cap)
    return {"formula": str(f), "theorem": thm, "countermodel": None if cm is None else cm.to_json()}


def cmd_check_proof(a) -> dict:
    d = Derivation.from_json(_read_json(a.file))
    try:
        verify_derivation(d)
    except DerivationError as e:
        return {"valid": False, "error": {"path": list(e.path), "rule": e.rule, "reason": e.reason}}
    return {"valid": True, "error": None}


def cmd_to_rnf(a) -> dict:
    prems, concl = parse_rule(a.rule)
    return _rnf_json(to_rnf(prems, concl))


def cmd_valid(a) -> dict:
    r = to_rnf(*parse_rule(a.rule))
    W = invalidity_witness([r])
    return {"valid": W is None, "witness": _ids(W), "rnf": _rnf_json(r)}


def cmd_admissible(a) -> dict:
    r = to_rnf(*parse_rule(a.rule))
    ok, W = is_admissible(r, a.limits.subset_cap)
    return {"verdict": "admissible" if ok else "inadmissible", "admissible": ok,
            "witness": _ids(W), "rnf": _rnf_json(r)}


def cmd_joint(a) -> dict:
    rules = _load_rules(a.files)
    bad, W = joint_inadmissible(rules, a.limits.subset_cap)
    return {"jointly_inadmissible": bad, "witness": _ids(W), "rnf": [_rnf_json(r) for r in rules]}


def cmd_rejects(a) -> dict:
    sigma = {}
    for item in a.sub:
        key, sep, val = item.partition("=")
        if not sep or not key.strip().startswith("p") or not key.strip()[1:].isdigit():
            raise InputError(f"substitution must look like p1=FORMULA, got {item!r}")
        sigma[int(key.strip()[1:])] = parse(val)
    prems, concl = parse_rule(a.rule)
    return {"rejects": rejects(sigma, prems, concl, a.limits.node_cap)}


def _member(a, test) -> dict:
    ids = parse_ids(a.ids)
    return {"n": a.n, "ids": sorted(ids), "member": test(a.n, ids)}


def cmd_supp1(a) -> dict:
    return _member(a, in_supp1)


def cmd_supp2(a) -> dict:
    return _member(a, in_supp2)


def cmd_witness(a) -> dict:
    obj = _read_json(a.file)
    c = SuppConstraint.from_json(obj, MEET if a.meet else STRICT)
    n = a.arity or _arity_for(i for u, lo in c.pairs for i in u | lo)
    W = find_supp2_witness(n, c, a.limits.subset_cap)
    return {"n": n, "mode": c.mode, "witness": _ids(W)}


def cmd_decompose(a) -> dict:
    system = RuleSystem.from_json(_read_json(a.file), a.arity)
    d = decompose(system, a.limits.step_cap, a.limits.subset_cap)
    out = {"n": system.n}
    out.update(d.to_json())
    return out


def cmd_catalog(a) -> dict:
    return {"catalog": [e.to_json() for e in evaluate_catalog(a.limits.node_cap)]}


# ---------------------------------------------------------------------------


def _human(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="s4adm", description="S4 theoremhood, rule admissibility and rejecting-substitution algebra.")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP, help="tableau node cap")
    p.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP, help="decomposition action cap")
    p.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP, help="subset search cap")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("prove", help="decide S4 theoremhood")
    s.add_argument("formula")
    s.set_defaults(fn=cmd_prove)

    s = sub.add_parser("check-proof", help="check a G1s derivation in JSON")
    s.add_argument("file")
    s.set_defaults(fn=cmd_check_proof)

    for name, fn, helptext in (("to-rnf", cmd_to_rnf, "translate a rule to reduced normal form"),
                               ("valid", cmd_valid, "decide rule validity"),
                               ("admissible", cmd_admissible, "decide rule admissibility")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("rule", help='"f1, f2, ... / g"')
        s.set_defaults(fn=fn)

    s = sub.add_parser("joint", help="decide whether one substitution rejects all given rules")
    s.add_argument("files", nargs="+")
    s.set_defaults(fn=cmd_joint)

    s = sub.add_parser("rejects", help="check that a substitution rejects a rule")
    s.add_argument("rule")
    s.add_argument("--sub", action="append", default=[], metavar="pK=FORMULA", required=True)
    s.set_defaults(fn=cmd_rejects)

    for name, fn in (("supp1", cmd_supp1), ("supp2", cmd_supp2)):
        s = sub.add_parser(name, help=f"test membership in {name.capitalize()}")
        s.add_argument("n", type=int)
        s.add_argument("ids", help='disjunct ids, e.g. "[2,3]"')
        s.set_defaults(fn=fn)

    s = sub.add_parser("witness", help="smallest Supp2 set meeting constraints [{upper, lower}, ...]")
    s.add_argument("file")
    s.add_argument("--arity", type=int, default=None)
    s.add_argument("--meet", action="store_true", help="require W not inside lower instead of lower < W")
    s.set_defaults(fn=cmd_witness)

    s = sub.add_parser("decompose", help="decompose a rule system [{W, J}, ...]")
    s.add_argument("file")
    s.add_argument("--arity", type=int, default=None, help="variable count; omit for abstract ids")
    s.set_defaults(fn=cmd_decompose)

    s = sub.add_parser("catalog", help="evaluate the diamond catalog")
    s.set_defaults(fn=cmd_catalog)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        args.limits = Limits(args.node_cap, args.step_cap, args.subset_cap)
        result = args.fn(args)
    except ResourceLimitExceeded as e:
        print(f"s4adm: resource limit: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, InputError, ValueError, KeyError, TypeError, OSError) as e:
        print(f"s4adm: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(result, ensure_ascii=False))
    else:
        print(_human(result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
