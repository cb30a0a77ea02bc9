"""Command line front end.

Four subcommands: construct (emit a catalog instance as a group file
plus a JSON sidecar), stats (b, B, H, I, len with certificates), rc
(relational complexity, exact or the height bound), and verify (run
registered checks and write JSON/CSV/figure reports).

Groups are named by catalog id or given as group files.  Exit codes:
0 success, 1 a verify run had failing checks, 2 bad input or
environment.  GRPSTAT_NODE_BUDGET caps search nodes when --budget is
not given.
"""

import argparse
import json
import os
import sys

from .actions import ActionsError
from .catalog import CatalogError, build, catalog
from .checks import CHECK_IDS, SuiteConfig, run_suite
from .group import PermGroup
from .perm import PermError, format_group_text, parse_group_text
from .rc import RcError, rc_exact, rc_upper
from .stats import StatsError, stat_B, stat_H, stat_I, stat_b, stat_len

STAT_NAMES = ("b", "B", "H", "I", "len")
_STAT_FN = {"b": stat_b, "B": stat_B, "H": stat_H, "I": stat_I}


class CliError(Exception):
    pass


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((_jsonable(v) for v in x), key=repr)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _load_group(name_or_path):
    """Resolve a positional group argument.

    An existing file is parsed as the group exchange format; anything
    else must be a catalog id.  Returns (name, PermGroup).
    """
    if os.path.exists(name_or_path):
        with open(name_or_path) as fh:
            degree, gens = parse_group_text(fh.read())
        name = os.path.splitext(os.path.basename(name_or_path))[0]
        return name, PermGroup(degree, gens)
    return name_or_path, build(name_or_path).group()


def _write_json(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_construct(args):
    if args.list:
        for e in catalog(args.tags):
            print("%-22s %s" % (e.id, " ".join(sorted(e.tags))))
        return 0
    if not args.name:
        raise CliError("construct needs an instance name (or --list)")
    inst = build(args.name, validate=args.validate)
    text = format_group_text(inst.degree, inst.generators, comment=inst.name)
    sidecar = {
        "schema": 1,
        "name": inst.name,
        "degree": inst.degree,
        "labels": [_jsonable(l) for l in inst.labels],
        "meta": _jsonable(inst.meta),
    }
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        json_path = args.json or os.path.splitext(args.out)[0] + ".json"
        _write_json(json_path, sidecar)
        print("wrote %s and %s" % (args.out, json_path))
    else:
        sys.stdout.write(text)
        if args.json:
            _write_json(args.json, sidecar)
    return 0


def cmd_stats(args):
    name, G = _load_group(args.group)
    wanted = STAT_NAMES if args.stat == "all" else (args.stat,)
    payload = {"schema": 1, "input": name, "degree": G.degree,
               "order": G.order, "stats": {}}
    for s in wanted:
        if s == "len":
            res = stat_len(G)
            tail = "" if res.status == "exact" else " (upper bound)"
            print("len = %d%s  [%s]" % (res.value, tail, res.method))
            payload["stats"]["len"] = {"value": res.value,
                                       "status": res.status,
                                       "method": res.method}
            continue
        cert = _STAT_FN[s](G, args.budget)
        if cert.exhaustive:
            print("%s = %d" % (s, cert.value))
        else:
            print("%s in [%d, %d]  (budget exhausted after %d nodes)"
                  % (s, cert.lower, cert.upper, cert.nodes))
        payload["stats"][s] = cert.to_dict()
    if args.json:
        _write_json(args.json, payload)
    return 0


def cmd_rc(args):
    name, G = _load_group(args.group)
    payload = {"schema": 1, "input": name, "degree": G.degree,
               "order": G.order}
    if args.upper:
        bound = rc_upper(G, args.budget)
        print("RC <= %d" % bound)
        payload["rc"] = {"value": bound, "status": "upper_bound"}
    else:
        res = rc_exact(G, n_cap=args.ncap, budget=args.budget)
        if res.status == "exact":
            print("RC = %d" % res.value)
        else:
            print("RC in [%d, %d]  (budget exhausted)" % (res.lower, res.upper))
        payload["rc"] = res.to_dict()
    if args.json:
        _write_json(args.json, payload)
    return 0


def cmd_verify(args):
    config = SuiteConfig(
        suite=args.suite,
        include_slow="slow" in (args.include or ()),
        checks=args.check or None,
        out=args.out,
        budget=args.budget,
        figures=not args.no_figures,
    )
    report = run_suite(config)
    per_check = {}
    for row in report["results"]:
        agg = per_check.setdefault(row["check_id"], [0, 0, 0])
        agg[0 if row["pass"] else 1] += 1
    for row in report["skipped"]:
        per_check.setdefault(row["check_id"], [0, 0, 0])[2] += 1
    for cid in report["config"]["checks"]:
        if cid in per_check:
            ok, bad, skip = per_check[cid]
            print("%-14s pass=%-3d fail=%-3d skipped=%d" % (cid, ok, bad, skip))
        else:
            print("%-14s no rows in this tier" % cid)
    s = report["summary"]
    print("total: %d rows, %d passed, %d failed, %d skipped"
          % (s["rows"], s["passed"], s["failed"], s["skipped"]))
    for fid in s["failed_rows"]:
        print("FAILED %s" % fid)
    print("report: %s" % args.out)
    return 1 if s["failed"] else 0


def _parser():
    p = argparse.ArgumentParser(
        prog="grpstat",
        description="Permutation group statistics with certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a catalog instance as a group file")
    c.add_argument("name", nargs="?", help="catalog instance id")
    c.add_argument("-o", "--out", help="group file path (default: stdout)")
    c.add_argument("--json", help="sidecar path (default: out path with .json)")
    c.add_argument("--validate", action="store_true",
                   help="recompute the instance's meta claims first")
    c.add_argument("--list", action="store_true", help="list catalog ids")
    c.add_argument("--tags", help="comma separated tag filter for --list")
    c.set_defaults(fn=cmd_construct)

    s = sub.add_parser("stats", help="compute b, B, H, I, len")
    s.add_argument("group", help="group file or catalog id")
    s.add_argument("--stat", choices=STAT_NAMES + ("all",), default="all")
    s.add_argument("--budget", type=int, help="search node budget")
    s.add_argument("--json", help="write certificates to this path")
    s.set_defaults(fn=cmd_stats)

    r = sub.add_parser("rc", help="relational complexity")
    r.add_argument("group", help="group file or catalog id")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", default=True,
                   help="exact value (default)")
    g.add_argument("--upper", action="store_true",
                   help="certified upper bound H + 1 only")
    r.add_argument("--ncap", type=int, help="cap on counterexample tuple length")
    r.add_argument("--budget", type=int, help="search node budget")
    r.add_argument("--json", help="write the result to this path")
    r.set_defaults(fn=cmd_rc)

    v = sub.add_parser("verify", help="run registered checks, write reports")
    v.add_argument("--suite", choices=("default", "all"), default="default")
    v.add_argument("--include", action="append", choices=("slow",),
                   help="pull in the slow tier")
    v.add_argument("--check", action="append", metavar="ID",
                   help="restrict to these check ids (%s)" % ", ".join(CHECK_IDS))
    v.add_argument("--out", default="report.json", help="JSON report path")
    v.add_argument("--budget", type=int, help="per-statistic node budget")
    v.add_argument("--no-figures", action="store_true",
                   help="skip the PNG figures next to the report")
    v.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, CatalogError, ActionsError, PermError, StatsError,
            RcError, ValueError) as exc:
        print("grpstat: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("grpstat: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
