"""Command-line interface: ``aasg analyze | classify | apery | construct | verify | bench``.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Dict, List, Optional

from . import apery, classify, construct, invariants, oracle, verify
from .arith import InternalInconsistency
from .bench import CSV_HEADER, run_bench
from .rodseth import AAParams, l_shape, rodseth_data, rodseth_data_fast


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _params(args) -> AAParams:
    if args.a < 2:
        raise UsageError(f"--a must be >= 2 (got {args.a})")
    for name in ("d", "k", "c"):
        if getattr(args, name) < 1:
            raise UsageError(f"--{name} must be >= 1 (got {getattr(args, name)})")
    try:
        return AAParams(args.a, args.d, args.k, args.c)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from exc


def _classification_fields(cl: classify.Classification) -> Dict:
    return {
        "symmetric": cl.symmetric,
        "pseudo_symmetric": cl.pseudo_symmetric,
        "irreducible": cl.irreducible,
        "case_tag": cl.case_tag,
        "reduction_factor": cl.reduction_factor,
        "verdict": cl.verdict,
    }


def analyze_record(p: AAParams, with_apery: bool = False) -> Dict:
    timing = {}
    t0 = time.perf_counter()
    prof = invariants.profile(p, with_apery=with_apery)
    timing["profile"] = round((time.perf_counter() - t0) * 1e6, 1)
    rec = {
        "a": p.a, "d": p.d, "k": p.k, "c": p.c,
        "g": prof.g, "N": prof.N, "delta": prof.delta,
        "type": prof.type_, "pf": list(prof.pseudo_frobenius),
        "timing_us": timing,
    }
    rec.update(_classification_fields(prof.classification))
    if with_apery:
        if prof.apery is None:
            rec["apery"] = None  # Apery set w.r.t. a needs gcd(a, d) = 1
        else:
            rec["apery"] = list(prof.apery.values)
    return rec


def classify_record(p: AAParams) -> Dict:
    t0 = time.perf_counter()
    cl = classify.classify(p)
    rec = {"a": p.a, "d": p.d, "k": p.k, "c": p.c,
           "timing_us": {"classify": round((time.perf_counter() - t0) * 1e6, 1)}}
    rec.update(_classification_fields(cl))
    return rec


def _print_table(rec: Dict, out) -> None:
    for key in ("a", "d", "k", "c", "g", "N", "delta", "type", "pf", "apery",
                "verdict", "reduction_factor"):
        if key in rec:
            val = rec[key]
            if isinstance(val, list):
                val = " ".join(map(str, val))
            print(f"{key:<17}{val}", file=out)


def cmd_analyze(args, out) -> int:
    rec = analyze_record(_params(args), with_apery=args.apery)
    if args.json:
        print(dumps(rec), file=out)
    else:
        _print_table(rec, out)
    return 0


def cmd_classify(args, out) -> int:
    rec = classify_record(_params(args))
    print(dumps(rec) if args.json else rec["verdict"], file=out)
    return 0


def cmd_apery(args, out) -> int:
    p = _params(args)
    if classify.gcd(p.a, p.d) != 1:
        raise UsageError("apery needs gcd(a, d) = 1")
    L = l_shape(rodseth_data(p))
    ap = apery.apery_set(p, L)
    if args.plot:
        from .plotting import plot_lshape

        plot_lshape(p, L, invariants._pf_from(p, ap, L), args.plot)
    if args.json:
        print(dumps({"a": p.a, "d": p.d, "k": p.k, "c": p.c, "apery": list(ap.values),
                     "L": {"A": list(L.A), "B": list(L.B)}}), file=out)
    else:
        print(" ".join(map(str, ap.values)), file=out)
    return 0


def cmd_construct(args, out) -> int:
    if args.k < 2:
        raise UsageError(f"--k must be >= 2 for construction (got {args.k})")
    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    status = 0
    for rec in construct.enumerate_recipes(args.case, args.k, args.bound):
        p = rec.result
        line = {"case": rec.case, "params": rec.params, "a": p.a, "d": p.d, "k": p.k, "c": p.c}
        if args.verify:
            ns = oracle.naive_build(p.generators)
            ok = oracle.naive_is_pseudo_symmetric(ns)
            line["oracle"] = "ok" if ok else "fail"
            status = status if ok else 1
        print(dumps(line), file=out)
    return status


def cmd_verify(args, out) -> int:
    params = verify.sweep_params(args.max_a, args.max_d, args.max_k, args.max_c, min_a=args.min_a)
    summary = verify.run_sweep(params)
    if summary.first_mismatch is not None:
        bad = summary.first_mismatch
        print(f"MISMATCH after {summary.checked} instances at {bad.params.as_tuple()}: "
              + "; ".join(bad.mismatches), file=out)
        return 1
    print(f"OK, {summary.checked} instances", file=out)
    return 0


def _parse_sizes(text: str) -> List[int]:
    try:
        return [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --sizes {text!r}") from exc


def cmd_bench(args, out) -> int:
    rows = run_bench(_parse_sizes(args.sizes), repeat=args.repeat)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r[h] for h in CSV_HEADER])
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot)
    if not all(r["agree"] for r in rows):
        print("bench: routes disagree on at least one instance", file=sys.stderr)
        return 1
    return 0


def _add_abcd(sp):
    for name in ("a", "d", "k", "c"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--json", action="store_true", help="emit one JSON object")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aasg", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="all invariants of one semigroup")
    _add_abcd(sp)
    sp.add_argument("--apery", action="store_true", help="include the Apery set")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("classify", help="symmetric / pseudo-symmetric / reducible")
    _add_abcd(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("apery", help="Apery set with respect to a")
    _add_abcd(sp)
    sp.add_argument("--plot", metavar="FILE", help="write the L-shape figure")
    sp.set_defaults(func=cmd_apery)

    sp = sub.add_parser("construct", help="enumerate pseudo-symmetric families")
    sp.add_argument("--case", choices=construct.CONSTRUCTION_CASES, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="oracle-check every result")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="exhaustive fast-vs-oracle sweep")
    sp.add_argument("--max-a", type=int, required=True)
    sp.add_argument("--max-d", type=int, required=True)
    sp.add_argument("--max-k", type=int, required=True)
    sp.add_argument("--max-c", type=int, required=True)
    sp.add_argument("--min-a", type=int, default=2)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="CSV timings: boundary data vs Apery set vs oracle")
    sp.add_argument("--sizes", required=True, help="comma-separated magnitudes of a, e.g. 1e3,1e6")
    sp.add_argument("--repeat", type=int, default=3)
    sp.add_argument("--plot", metavar="FILE", help="write a log-log timing figure")
    sp.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, OverflowError, classify.KRequirement, oracle.OracleCapExceeded) as exc:
        print(f"aasg {args.command}: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistency as exc:
        print(f"aasg {args.command}: internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
