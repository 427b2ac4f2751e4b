"""Command-line frontend.

Subcommands: classify-ccp, poincare, kumar, chart.  Exit codes: 0 ok,
1 computation failure, 2 golden-file mismatch, 64 usage error.  All
output is deterministic (sorted rows, sorted JSON keys).
"""

import argparse
import json
import sys
from fractions import Fraction

from .rootdata import build_affine_datum
from .admissible import make_ecd
from .poincare import (
    classify_ccp,
    classification_report,
    poincare_polynomial,
    rspss_screen,
)
from . import kumar as kumar_mod
from . import charts as charts_mod

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _family(s):
    """Accept B, Bt, B~ and the like for the affine families."""
    s = s.strip().rstrip("~").rstrip("0123456789")
    if len(s) == 2 and s[1] in "tT":
        s = s[0]
    s = s.upper()
    if s not in "ABCDEFG" or len(s) != 1:
        raise UsageError("unknown family %r" % s)
    return s


def _int_list(s):
    return tuple(int(x) for x in s.split(",") if x.strip() != "")


def _frac_list(s):
    return tuple(Fraction(x) for x in s.split(",") if x.strip() != "")


# -- classify-ccp -------------------------------------------------------------


def _markdown_table(rows):
    out = []
    head = "| family | rank | lambda | K~ | components | pattern |"
    sep = "|---|---|---|---|---|---|"
    for title, key in (("Irreducible cases", "irreducible"),
                       ("Reducible cases", "reducible")):
        out.append("## %s" % title)
        out.append(head)
        out.append(sep)
        for r in rows[key]:
            out.append("| %s | %d | (%s) | {%s} | %d | %s |" % (
                r["family"], r["rank"], ",".join(r["lambda"]),
                ",".join(str(k) for k in r["k"]),
                r["extreme_count"], r["pattern"]))
        out.append("")
    return "\n".join(out)


def cmd_classify(args):
    rows = classify_ccp(args.max_rank)
    if args.family:
        fam = _family(args.family)
        rows = [r for r in rows if r.family == fam]
    report = classification_report(rows)
    if args.check:
        with open(args.check) as fh:
            golden = json.load(fh)
        if golden != report:
            sys.stderr.write("classification differs from %s\n" % args.check)
            return EXIT_MISMATCH
        print("ok: classification matches %s" % args.check)
        return EXIT_OK
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    elif args.format == "markdown":
        print(_markdown_table(report))
    else:
        for key in ("irreducible", "reducible"):
            for r in report[key]:
                print("%s %s %d lambda=(%s) K={%s} components=%d pattern=%s" % (
                    key, r["family"], r["rank"], ",".join(r["lambda"]),
                    ",".join(str(k) for k in r["k"]),
                    r["extreme_count"], r["pattern"]))
    return EXIT_OK


# -- poincare ------------------------------------------------------------------


def cmd_poincare(args):
    fam = _family(args.family)
    datum = build_affine_datum(fam, args.rank)
    lam = datum.coweight_from_eps(_frac_list(args.lam))
    ecd = make_ecd(fam, args.rank, lam, _int_list(args.k))
    poly = poincare_polynomial(ecd)
    print("%s, %s" % (poly, "symmetric" if poly.is_symmetric() else "asymmetric"))
    if args.screen:
        print(rspss_screen(ecd))
    return EXIT_OK


# -- kumar ---------------------------------------------------------------------


def cmd_kumar(args):
    W, w, dual = kumar_mod.case_element(args.case, args.n)
    print(kumar_mod.kumar_test(W, w, dual=dual))
    return EXIT_OK


# -- chart ---------------------------------------------------------------------


def _chart_json(case, params, nf):
    return {
        "case": case,
        "params": params,
        "verdict": nf.verdict,
        "relation": nf.relation,
        "m": nf.m,
        "eliminated": nf.substitution,
    }


def cmd_chart(args):
    if args.table:
        report = charts_mod.classify_semistable_table(args.table)
        if args.format == "json":
            print(json.dumps(report, sort_keys=True, indent=2))
        else:
            for row in report:
                print("%s %s %s m=%d" % (
                    row["case"], json.dumps(row["params"], sort_keys=True),
                    row["verdict"], row["m"]))
        return EXIT_OK
    if not args.case:
        raise UsageError("--case (or --table) is required")
    params = {"n": args.n}
    if args.case == "gl":
        params["r"] = args.r if args.r is not None else 1
        if args.kappa is not None:
            params["kappa"] = args.kappa
    nf = charts_mod.run_case(args.case, **params)
    if args.format == "json":
        print(json.dumps(_chart_json(args.case, params, nf), sort_keys=True,
                         indent=2))
    elif nf.verdict == "SemiStable":
        print("SemiStable m=%d" % nf.m)
    elif nf.verdict == "Smooth":
        print("Smooth{%d}" % nf.components)
    else:
        print("NotNormalCrossings: %s" % nf.witness)
    return EXIT_OK


# -- driver --------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="weylab")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify-ccp", help="CCP classification table")
    c.add_argument("--max-rank", type=int, default=6)
    c.add_argument("--format", choices=("text", "json", "markdown"),
                   default="markdown")
    c.add_argument("--check", metavar="GOLDEN_JSON")
    c.add_argument("--family")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_classify)

    q = sub.add_parser("poincare", help="truncated-interval polynomial")
    q.add_argument("--family", required=True)
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--lambda", dest="lam", required=True,
                   metavar="EPS_COORDS")
    q.add_argument("--k", required=True, metavar="NODES")
    q.add_argument("--screen", action="store_true",
                   help="also run the symmetry screen on all components")
    q.set_defaults(func=cmd_poincare)

    k = sub.add_parser("kumar", help="smoothness criterion for a table case")
    k.add_argument("--case", choices=("1b", "2b", "3b"), required=True)
    k.add_argument("--n", type=int, required=True)
    k.set_defaults(func=cmd_kumar)

    ch = sub.add_parser("chart", help="certified chart normal form")
    ch.add_argument("--case", choices=sorted(charts_mod._CASES))
    ch.add_argument("--n", type=int, default=3)
    ch.add_argument("--r", type=int)
    ch.add_argument("--kappa", type=int)
    ch.add_argument("--table", type=int, metavar="MAX_N",
                    help="run the whole semi-stability table up to MAX_N")
    ch.add_argument("--format", choices=("text", "json"), default="text")
    ch.set_defaults(func=cmd_chart)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EXIT_USAGE
    except (ValueError, KeyError, RuntimeError) as exc:
        sys.stderr.write("%s: %s\n" % (type(exc).__name__, exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
