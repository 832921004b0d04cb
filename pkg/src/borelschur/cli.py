"""borelschur command line.

Exit codes: 0 success, 2 a verification failed, 3 budget exceeded, 4 usage.
With --out DIR the output is also written under DIR with a manifest.json.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, fixtures
from .algebra import (AlgebraError, BasisElement, BorelSchurAlgebra, DimensionBudgetExceeded,
                      NotACoideal, basis_dimension, canonicalize_pair, gabriel_arrows,
                      is_coideal, truncate_idempotent)
from .ar import (ProjectiveSimple, ar_sequence, socle_report, socle_table_tsv,
                 truncation_functors, verify_ar)
from .crosscheck import CHECKS, pushdown_suite, run_all
from .reptype import extract_relations, rep_type
from .scalars import Field
from .weights import WeightError

EXIT_OK, EXIT_VERIFY, EXIT_BUDGET, EXIT_USAGE = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- parsing helpers -----------------------------------------------------------

def parse_weight(text, n=None, r=None):
    try:
        lam = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight {text!r}: expected comma-separated integers")
    if any(x < 0 for x in lam):
        raise UsageError(f"bad weight {text!r}: negative part")
    if n is not None and len(lam) != n:
        raise UsageError(f"weight {text!r} has {len(lam)} parts, expected {n}")
    if r is not None and sum(lam) != r:
        raise UsageError(f"weight {text!r} sums to {sum(lam)}, expected {r}")
    return lam


def parse_element(text, n, r):
    """'1,1,2:1,2,2' -> xi_{(1,1,2),(1,2,2)}."""
    try:
        i, j = text.split(":")
        i = tuple(int(x) for x in i.split(","))
        j = tuple(int(x) for x in j.split(","))
    except ValueError:
        raise UsageError(f"bad element {text!r}: expected i1,...,ir:j1,...,jr")
    if len(i) != r or len(j) != r or not all(1 <= v <= n for v in i + j):
        raise UsageError(f"element {text!r} is not a pair of multi-indices in I({n},{r})")
    x = canonicalize_pair(i, j)
    if not all(a <= b for a, b in zip(x.i, x.j)):
        raise UsageError(f"element {text!r} is not in the Borel-Schur algebra (need i <= j)")
    return x


def element_json(x: BasisElement):
    return {"i": list(x.i), "j": list(x.j)}


def combination_json(lc: dict):
    return [{"coeff": str(c), "element": element_json(x)} for x, c in sorted(lc.items())]


def _algebra(args):
    if args.n < 1 or args.r < 0:
        raise UsageError("need --n >= 1 and --r >= 0")
    if basis_dimension(args.n, args.r) > args.budget:
        raise DimensionBudgetExceeded(f"dim S(B+,{args.n},{args.r}) exceeds budget {args.budget}")
    try:
        return BorelSchurAlgebra(args.n, args.r, args.char)
    except ValueError as e:
        raise UsageError(str(e))


# --- commands ----------------------------------------------------------------------

def cmd_basis(args):
    A = _algebra(args)
    B = A.basis
    if args.weight:
        lam = parse_weight(args.weight, args.n, args.r)
        B = [x for x in B if A.rw(x) == lam]
    return {"n": args.n, "r": args.r, "dim": len(B), "basis": [element_json(x) for x in B]}, EXIT_OK


def cmd_mult(args):
    A = _algebra(args)
    x = parse_element(args.x, args.n, args.r)
    y = parse_element(args.y, args.n, args.r)
    return {"x": element_json(x), "y": element_json(y), "char": A.p,
            "product": combination_json(A.multiply(x, y))}, EXIT_OK


def cmd_quiver(args):
    A = _algebra(args)
    Q, _ = extract_relations(A)
    if args.format == "dot":
        return Q.to_dot(), EXIT_OK
    return Q.to_json(), EXIT_OK


def cmd_socle(args):
    _algebra(args)
    rows = socle_report(args.n, args.r, args.char)
    code = EXIT_VERIFY if any(r.verdict == "VIOLATION" for r in rows) else EXIT_OK
    if args.format == "json":
        return [{"lambda": list(r.lam), "multiplicity": r.multiplicity,
                 "verdict": r.verdict, "rule": r.rule} for r in rows], code
    return socle_table_tsv(rows), code


def _lambda_required(args):
    if not args.lam:
        raise UsageError("--lambda is required")
    return parse_weight(args.lam, args.n, args.r)


def cmd_arseq(args):
    A = _algebra(args)
    lam = _lambda_required(args)
    try:
        rep = verify_ar(ar_sequence(lam, A), seed=args.seed).as_dict()
    except ProjectiveSimple as e:
        raise UsageError(str(e))
    return rep, EXIT_OK if rep["verified"]["passed"] else EXIT_VERIFY


def cmd_verify_ar(args):
    A = _algebra(args)
    out = []
    for lam in A.weights:
        try:
            out.append(verify_ar(ar_sequence(lam, A), seed=args.seed).as_dict())
        except ProjectiveSimple:
            continue
    ok = all(r["verified"]["passed"] for r in out)
    return {"n": args.n, "r": args.r, "char": args.char, "sequences": out, "all_passed": ok}, \
        EXIT_OK if ok else EXIT_VERIFY


def cmd_reptype(args):
    if args.n < 1 or args.r < 0:
        raise UsageError("need --n >= 1 and --r >= 0")
    try:
        Field(args.char)
    except ValueError as e:
        raise UsageError(str(e))
    rt = rep_type(args.n, args.r, args.char, certify=args.certify)
    if args.format == "json":
        return rt.as_dict(), EXIT_OK
    return str(rt) + "\n", EXIT_OK


def cmd_truncate(args):
    A = _algebra(args)
    if args.sub_n:
        if not 1 <= args.sub_n <= args.n:
            raise UsageError("--sub-n must lie between 1 and --n")
        S = [w for w in A.weights if not any(w[args.sub_n:])]
    elif args.weights:
        S = [parse_weight(t, args.n, args.r) for t in args.weights.split(";")]
    else:
        raise UsageError("give --sub-n or --weights")
    if not is_coideal(A.weights, S):
        raise NotACoideal("the chosen weights are not upward closed under dominance")
    B = truncate_idempotent(A, S)
    out = {"weights": [list(w) for w in B.weights], "dim": B.dim,
           "gabriel_arrows": [[list(a.source), list(a.target)] for a in gabriel_arrows(B)]}
    code = EXIT_OK
    if args.lam:
        lam = parse_weight(args.lam, args.n, args.r)
        if lam not in B.weights:
            raise UsageError("--lambda must lie in the truncated weight set")
        T = truncation_functors(A, S)
        try:
            iso, small, big = T.ariff_check(lam)
        except ProjectiveSimple as e:
            raise UsageError(str(e))
        out["ar_translate"] = {"G_tau_small_iso_tau_big": iso, "dim_small": small.dim,
                               "dim_big": big.dim, "FG_identity": T.FG_is_identity(small)}
        if not out["ar_translate"]["FG_identity"]:
            code = EXIT_VERIFY
    return out, code


def cmd_pushdown(args):
    ok, detail = pushdown_suite()
    if args.cover:
        if args.cover not in detail:
            raise UsageError(f"unknown cover {args.cover!r}; choose from {sorted(detail)}")
        detail = {args.cover: detail[args.cover]}
        ok = all(all(v for k, v in row.items() if k != "rep") for row in detail[args.cover]["reps"])
    return {"passed": ok, "covers": detail}, EXIT_OK if ok else EXIT_VERIFY


def cmd_crosscheck(args):
    only = None
    if args.only:
        try:
            only = {int(x) for x in args.only.split(",")}
        except ValueError:
            raise UsageError("--only expects comma-separated check numbers")
        if not only <= {k for k, _, _ in CHECKS}:
            raise UsageError(f"checks are numbered 1..{len(CHECKS)}")
    results = run_all(quick=args.quick, only=only)
    for res in results:
        print(res.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    payload = {"passed": ok, "checks": [{"number": r.number, "name": r.name, "passed": r.passed,
                                         "detail": r.detail} for r in results]}
    return payload, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "basis": cmd_basis, "mult": cmd_mult, "quiver": cmd_quiver, "socle": cmd_socle,
    "arseq": cmd_arseq, "verify-ar": cmd_verify_ar, "reptype": cmd_reptype,
    "truncate": cmd_truncate, "pushdown": cmd_pushdown, "crosscheck": cmd_crosscheck,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="run directory for output files and manifest.json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=50000, help="maximal algebra dimension")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--n", type=int, required=True)
    alg.add_argument("--r", type=int, required=True)
    alg.add_argument("--char", type=int, default=0)

    p = _Parser(prog="borelschur", description="Borel-Schur algebra computations")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("basis", parents=[common, alg], help="list basis elements")
    s.add_argument("--weight", help="only elements xi_{i,j} with j of this weight")
    s = sub.add_parser("mult", parents=[common, alg], help="multiply two basis elements")
    s.add_argument("--x", required=True, help="i1,...,ir:j1,...,jr")
    s.add_argument("--y", required=True)
    s = sub.add_parser("quiver", parents=[common, alg], help="bound quiver with relations")
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s = sub.add_parser("socle", parents=[common, alg], help="socle multiplicities of the regular module")
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s = sub.add_parser("arseq", parents=[common, alg], help="almost split sequence ending in K_lambda")
    s.add_argument("--lambda", dest="lam")
    sub.add_parser("verify-ar", parents=[common, alg], help="almost split sequences for all weights")
    s = sub.add_parser("reptype", parents=[common, alg], help="representation type")
    s.add_argument("--certify", action="store_true")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s = sub.add_parser("truncate", parents=[common, alg], help="idempotent truncation by a coideal")
    s.add_argument("--sub-n", type=int, help="the coideal of weights supported on the first m parts")
    s.add_argument("--weights", help="explicit coideal, weights separated by ';'")
    s.add_argument("--lambda", dest="lam", help="compare AR translates over both algebras")
    s = sub.add_parser("pushdown", parents=[common], help="pushdown suite for the cover fixtures")
    s.add_argument("--cover", help=", ".join(fixtures.covering_fixtures()))
    s = sub.add_parser("crosscheck", parents=[common], help="run the oracle suite")
    s.add_argument("--quick", action="store_true")
    s.add_argument("--only", help="comma-separated check numbers")
    return p


def _render(payload):
    if isinstance(payload, str):
        return payload if payload.endswith("\n") else payload + "\n"
    return json.dumps(payload, indent=2, sort_keys=False, default=str) + "\n"


def _write_run(args, text):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    fmt = getattr(args, "format", "json")
    ext = {"tsv": "tsv", "dot": "dot", "text": "txt"}.get(fmt, "json")
    fname = f"{args.command}.{ext}"
    (out / fname).write_text(text)
    params = {k: v for k, v in vars(args).items() if k not in ("out",)}
    manifest = {"tool": "borelschur", "version": __version__, "command": args.command,
                "parameters": params, "files": [fname]}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, default=str) + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = COMMANDS[args.command](args)
    except DimensionBudgetExceeded as e:
        print(f"borelschur: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, WeightError, NotACoideal, AlgebraError) as e:
        print(f"borelschur: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(payload)
    sys.stdout.write(text)
    if args.out:
        _write_run(args, text)
    return code


if __name__ == "__main__":
    sys.exit(main())
