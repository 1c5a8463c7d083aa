"""Command line front end.

Exit codes: 0 success, 1 syntax error, 2 arity error, 3 failed or
undecided checks.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .abelian import abelianize
from .cospan import DEFAULT_BUDGET
from .dsl import parse, to_text
from .errors import ArityMismatch, InvalidGroupTable, NotALink, TangleSyntaxError, UnknownBuiltin
from .finite import BUILTIN_GROUPS, FiniteGroup, builtin_group, count_homs
from .gamma import gamma_eval, knot_group
from .tangle import BUILTIN_NAMES, arity, builtin_source, connectivity
from .verify import check_abelianization_theorem, check_all_relations, random_expr

EXIT_OK, EXIT_SYNTAX, EXIT_ARITY, EXIT_CHECK = 0, 1, 2, 3


def _read_expression(args):
    if args.builtin:
        return builtin_source(args.builtin)
    if args.file:
        return Path(args.file).read_text(encoding="utf-8")
    if args.expr is None:
        raise SystemExit("error: give an expression, --file or --builtin")
    return args.expr


def _groups(args):
    out = [builtin_group(name) for name in (args.homs or [])]
    if args.group_file:
        data = json.loads(Path(args.group_file).read_text(encoding="utf-8"))
        out.append(FiniteGroup.from_json(data, name=Path(args.group_file).stem))
    return out


def _emit(doc: dict, as_json: bool, out):
    if as_json:
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    for key, value in doc.items():
        if isinstance(value, dict):
            out.write(f"{key}:\n")
            for k, v in value.items():
                out.write(f"  {k}: {_fmt(v)}\n")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for item in value:
                out.write("  " + "  ".join(f"{k}={_fmt(v)}" for k, v in item.items()) + "\n")
        else:
            out.write(f"{key}: {_fmt(value)}\n")


def _fmt(v):
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def _document(text, args):
    start = time.perf_counter()
    e = parse(text)
    a = arity(e)
    conn = connectivity(e)
    raw = gamma_eval(e, simplify_every_node=args.simplify_every_node)
    simple = raw.simplify().relabeled("x")
    inv = abelianize(simple.middle)
    doc = {
        "expression": to_text(e),
        "arity": [a.m, a.n],
        "loops": conn.loops,
        "raw_size": list(raw.middle.size()),
        "simplified_size": list(simple.middle.size()),
        "middle": simple.middle.to_text(),
        "abelianization": {"free_rank": inv.free_rank, "torsion": list(inv.torsion)},
    }
    doc["left"] = [str(w) for w in simple.left.images]
    doc["right"] = [str(w) for w in simple.right.images]
    groups = _groups(args)
    if groups:
        doc["homs"] = {g.name: count_homs(simple.middle, g) for g in groups}
    if args.timing:
        doc["elapsed"] = round(time.perf_counter() - start, 6)
    return doc


def cmd_eval(args, out):
    _emit(_document(_read_expression(args), args), args.json, out)
    return EXIT_OK


def cmd_knot_group(args, out):
    e = parse(_read_expression(args))
    g = knot_group(e, simplify_every_node=args.simplify_every_node)
    doc = {"expression": to_text(e), "knot_group": g.to_text(), "presentation": g.to_json()}
    _emit(doc, args.json, out)
    return EXIT_OK


def cmd_abelianize(args, out):
    e = parse(_read_expression(args))
    holds, rep = check_abelianization_theorem(e)
    doc = {
        "expression": to_text(e),
        "arity": [rep.m, rep.n],
        "loops": rep.loops,
        "abelianization": {"free_rank": rep.invariants.free_rank, "torsion": list(rep.invariants.torsion)},
        "expected_rank": rep.expected_rank,
        "rank_theorem": holds,
    }
    _emit(doc, args.json, out)
    return EXIT_OK


def cmd_homs(args, out):
    if not args.homs and not args.group_file:
        args.homs = list(BUILTIN_GROUPS)
    e = parse(_read_expression(args))
    mid = gamma_eval(e, simplify_every_node=args.simplify_every_node, simplify=True).middle
    doc = {"expression": to_text(e), "homs": {g.name: count_homs(mid, g) for g in _groups(args)}}
    _emit(doc, args.json, out)
    return EXIT_OK


def cmd_parse(args, out):
    e = parse(_read_expression(args))
    _emit({"expression": to_text(e)}, args.json, out)
    return EXIT_OK


def cmd_check(args, out):
    run_rel = args.relations or not args.rank_theorem
    run_rank = args.rank_theorem or not args.relations
    doc = {}
    failed = []
    if run_rel:
        reports = check_all_relations(args.budget)
        doc["relations"] = [r.to_json(timing=args.timing) for r in reports]
        passed = sum(r.passed for r in reports)
        doc["relations_passed"] = f"{passed}/{len(reports)}"
        failed += [r.case_id for r in reports if not r.passed]
    if run_rank:
        bad = []
        for seed in range(args.seeds):
            holds, rep = check_abelianization_theorem(random_expr(seed, args.max_nodes))
            if not holds:
                bad.append(seed)
        doc["rank_theorem"] = {
            "seeds": args.seeds,
            "max_nodes": args.max_nodes,
            "passed": f"{args.seeds - len(bad)}/{args.seeds}",
            "failing_seeds": bad,
        }
        failed += [f"rank-theorem seed {s}" for s in bad]
    doc["failed"] = failed
    _emit(doc, args.json, out)
    return EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tangle-gamma", description="Evaluate the tangle group functor.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.add_argument("--timing", action="store_true", help="include wall-clock timings")
        if inputs:
            p.add_argument("expr", nargs="?", help="tangle expression, e.g. 'cup ; cap'")
            p.add_argument("-f", "--file", help="read the expression from a UTF-8 file")
            p.add_argument("--builtin", choices=BUILTIN_NAMES, help="use a built-in closed braid")
            p.add_argument("--simplify-every-node", action="store_true")
            p.add_argument("--homs", action="append", metavar="GROUP",
                           help=f"count homs into a group ({', '.join(BUILTIN_GROUPS)}); repeatable")
            p.add_argument("--group-file", help='JSON {"order": k, "table": [[...]]}')

    for name, fn, text in (
        ("eval", cmd_eval, "evaluate Gamma and summarize the cospan"),
        ("knot-group", cmd_knot_group, "simplified group of a closed tangle"),
        ("abelianize", cmd_abelianize, "abelian invariants and the rank formula"),
        ("homs", cmd_homs, "homomorphism counts into finite groups"),
        ("parse", cmd_parse, "syntax check; print the canonical form"),
    ):
        p = sub.add_parser(name, help=text)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("check", help="run the verification suite")
    common(p, inputs=False)
    p.add_argument("--relations", action="store_true", help="check the tangle relations")
    p.add_argument("--rank-theorem", action="store_true", help="check the rank formula on random tangles")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="witness word length bound")
    p.add_argument("--seeds", type=int, default=200)
    p.add_argument("--max-nodes", type=int, default=12)
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except TangleSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (ArityMismatch, NotALink) as exc:
        print(f"arity error: {exc}", file=sys.stderr)
        return EXIT_ARITY
    except (UnknownBuiltin, InvalidGroupTable, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX


if __name__ == "__main__":
    sys.exit(main())
