"""Command-line front end.

Subcommands: analyze, construct {trinomial, concat, add-quadratic},
verify-table1, property-suite, spectrum.  Reports are JSON on stdout with a
fixed key order, so identical inputs (and seed) produce byte-identical
output; timings are only included under --timings since they are not
reproducible.  Errors print a machine-readable object on stderr and exit
with a distinct code per failure kind: 2 parse, 3 precondition, 4 budget,
5 internal inconsistency.

PBENT_THREADS (default 1) sets the worker-thread count used to verify
catalog entries and run property batteries concurrently; results merge in
canonical order either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .catalog import list_catalog, verify_entry
from .constructions import (ConcatenationFamily, TrinomialParams,
                            add_quadratic, bent_concatenation,
                            trinomial_bent)
from .derivanalysis import cubic_like_certificate, wr_identity_check
from .errors import (BudgetError, InternalInconsistency, ParseError,
                     PreconditionError)
from .funcrep import (PFunction, parse_function_spec, to_relative_trace_form)
from .gf import FieldError, get_field
from .suite import run_suite
from .walsh import classify, extract_certificate, walsh_fast, walsh_naive

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 5

DEFAULT_SPECTRUM_BUDGET = 3 ** 12


def _check_budget(q: int, budget: int) -> None:
    if q > budget:
        raise BudgetError(
            "field size %d exceeds the spectrum budget %d "
            "(raise it with --max-points)" % (q, budget))


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def analyze_function(f: PFunction, use_naive: bool = False, certify: bool = False,
                     dual_form: bool = False, seed: int = 0) -> dict:
    """Assemble the analysis report dict (ordered, JSON-ready)."""
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    spectrum = walsh_naive(f) if use_naive else walsh_fast(f)
    timings["walsh_s"] = time.perf_counter() - t0
    cls = classify(f, spectrum)
    report = {
        "p": f.ctx.p,
        "n": f.ctx.n,
        "bent": cls.bent,
        "classification": cls.to_json(),
        "algebraic_degree": f.algebraic_degree(),
        "provenance": spectrum.provenance,
    }
    if cls.bent:
        cert = extract_certificate(spectrum)
        report["sign_histogram"] = cert.sign_histogram()
        report["dual_degree"] = cert.dual.algebraic_degree()
        report["dual_bent"] = (True if cls.variant in ("regular", "weakly_regular")
                               else cls.dual_bent)
        if dual_form:
            dform = to_relative_trace_form(cert.dual)
            f.ctx.ensure_tables()
            report["dual_relative_trace_form"] = {
                "nonlinear_terms": dform.nonlinear_term_count(),
                "entries": [[j, "g^%d" % f.ctx.log_table[a.index]]
                            for j, a in dform.entries],
                "top_coeff": dform.top_coeff,
            }
    if certify:
        t1 = time.perf_counter()
        cert3 = cubic_like_certificate(f)
        report["cubic_like"] = cert3.to_json()
        report["cubic_like"]["implies_bent"] = cert3.complete
        timings["cubic_like_s"] = time.perf_counter() - t1
        if cls.bent:
            t2 = time.perf_counter()
            wr = wr_identity_check(f, seed=seed)
            report["wr_identities"] = wr.to_json()
            timings["wr_identities_s"] = time.perf_counter() - t2
    report["_timings"] = timings
    return report


def cmd_analyze(args) -> int:
    ctx, tf = parse_function_spec(args.spec)
    _check_budget(ctx.q, args.max_points)
    f = tf.truth_table()
    report = analyze_function(f, use_naive=args.naive, certify=args.certify,
                              dual_form=args.dual_form, seed=args.seed)
    out = {"input": args.spec}
    out.update(report)
    if not args.timings:
        out.pop("_timings", None)
    _emit(out)
    return 0


def cmd_spectrum(args) -> int:
    ctx, tf = parse_function_spec(args.spec)
    _check_budget(ctx.q, args.max_points)
    f = tf.truth_table()
    spectrum = walsh_naive(f) if args.naive else walsh_fast(f)
    width = ctx.p - 1
    sys.stdout.write("index," + ",".join("c%d" % i for i in range(width)) + "\n")
    for idx, v in enumerate(spectrum.values):
        sys.stdout.write("%d,%s\n" % (idx, ",".join(str(c) for c in v.coords)))
    return 0


def cmd_construct_trinomial(args) -> int:
    params = TrinomialParams(args.k, args.j, args.t)
    ctx = params.context()
    _check_budget(ctx.q, args.max_points)
    tf = trinomial_bent(params, ctx)
    out = {
        "family": "trinomial",
        "k": args.k, "j": args.j, "t": args.t,
        "p": 3, "n": params.n,
        "field": ctx.spec_string(),
        "function": tf.spec_string(),
    }
    if args.analyze:
        f = tf.truth_table()
        report = analyze_function(f, certify=args.certify, seed=args.seed)
        report.pop("_timings", None)
        out["analysis"] = report
    _emit(out)
    return 0


def _parse_slice_file(path: str):
    ctxs = []
    slices = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            ctx, tf = parse_function_spec(line)
            ctxs.append(ctx)
            slices.append(tf.truth_table())
    if not slices:
        raise ParseError("slice file %s contains no function specs" % path)
    if any(c is not ctxs[0] for c in ctxs):
        raise ParseError("all slices must share one field spec")
    return ctxs[0], slices


def cmd_construct_concat(args) -> int:
    inner_ctx, slices = _parse_slice_file(args.slices)
    if args.pi:
        with open(args.pi) as fh:
            pi = json.load(fh)
        from .constructions import mm_special_form
        import math
        d = round(math.log(len(pi), inner_ctx.p))
        if inner_ctx.p ** d != len(pi) or len(slices) != len(pi):
            raise PreconditionError("permutation length must be p^d and match slice count")
        f, rep = mm_special_form(slices, pi, inner_ctx, d)
        mode = "special_form"
    else:
        import math
        m = round(math.log(len(slices), inner_ctx.p))
        if inner_ctx.p ** m != len(slices):
            raise PreconditionError("slice count must be a power of p")
        outer_ctx = get_field(inner_ctx.p, m)
        f, rep = bent_concatenation(ConcatenationFamily(inner_ctx, outer_ctx, slices))
        mode = "concatenation"
    out = {"construction": mode, "p": f.ctx.p, "n": f.ctx.n,
           "report": {k: (v if not isinstance(v, PFunction) else "function(%d points)" % f.ctx.q)
                      for k, v in rep.items()}}
    if args.analyze:
        report = analyze_function(f, seed=args.seed)
        report.pop("_timings", None)
        out["analysis"] = report
    _emit(out)
    return 0


def cmd_construct_add_quadratic(args) -> int:
    ctx, tf = parse_function_spec(args.f)
    _check_budget(ctx.q, args.max_points)
    f = tf.truth_table()
    coeff_tokens = args.coeffs.split(",")
    if len(coeff_tokens) != ctx.n:
        raise ParseError("need exactly n=%d quadratic coefficients" % ctx.n)
    coeffs = []
    for tok in coeff_tokens:
        tok = tok.strip()
        if tok.startswith("g^"):
            coeffs.append(ctx.gen_power(int(tok[2:])))
        else:
            coeffs.append(ctx.scalar(int(tok)))
    g, rep = add_quadratic(f, coeffs)
    out = {"construction": "add_quadratic", "p": ctx.p, "n": ctx.n,
           "condition_holds": rep["condition_holds"],
           "spectrally_bent": rep["spectrally_bent"]}
    if args.analyze:
        report = analyze_function(g, seed=args.seed)
        report.pop("_timings", None)
        out["analysis"] = report
    _emit(out)
    return 0


def _thread_count() -> int:
    raw = os.environ.get("PBENT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify_table1(args) -> int:
    entries = [e for e in list_catalog() if e.label.startswith("sporadic_")]
    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda e: verify_entry(e, search=not args.no_search), entries))
    else:
        results = [verify_entry(e, search=not args.no_search) for e in entries]
    rows = []
    ok = True
    for entry, res in zip(entries, results):
        ok = ok and res["status"] != "mismatch"
        rows.append({
            "label": entry.label,
            "spec": entry.spec,
            "status": res["status"],
            "primitive_exponent": res["exponent"],
            "classification": res["classification"].to_json(),
        })
    out = {"all_reproduced": ok, "rows": rows}
    if args.json:
        _emit(out)
    else:
        for row in rows:
            sys.stdout.write("%-28s %-20s exponent=%d %s\n" % (
                row["label"], row["status"], row["primitive_exponent"],
                json.dumps(row["classification"])))
        sys.stdout.write("all_reproduced=%s\n" % ok)
    return 0 if ok else EXIT_INTERNAL


def cmd_property_suite(args) -> int:
    names = args.only.split(",") if args.only else None
    workers = _thread_count()
    if workers > 1 and not names:
        from .suite import ALL_CHECKS
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futs = [(name, pool.submit(
                lambda fn=fn: fn(args.seed, args.level))) for name, fn in ALL_CHECKS]
        records = []
        for name, fut in futs:
            try:
                passed, detail = fut.result()
            except Exception as exc:
                passed, detail = False, "%s: %s" % (type(exc).__name__, exc)
            records.append({"name": name, "passed": passed, "detail": detail})
    else:
        records = run_suite(seed=args.seed, level=args.level, names=names)
    ok = all(r["passed"] for r in records)
    _emit({"seed": args.seed, "level": args.level, "all_passed": ok,
           "checks": records})
    return 0 if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pbent",
        description="Exact Walsh-spectrum analysis of p-ary functions")
    ap.add_argument("--max-points", type=int, default=DEFAULT_SPECTRUM_BUDGET,
                    help="largest field size p^n a spectrum may use")
    sub = ap.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="classify a function given in the spec grammar")
    p_an.add_argument("spec", help='e.g. "p=3 n=3 f=Tr(x^8+x^14)"')
    p_an.add_argument("--naive", action="store_true", help="use the direct transform")
    p_an.add_argument("--certify", action="store_true",
                      help="add cubic-like and derivative-identity reports")
    p_an.add_argument("--dual-form", action="store_true",
                      help="include the dual's relative trace form")
    p_an.add_argument("--seed", type=int, default=0)
    p_an.add_argument("--timings", action="store_true")
    p_an.set_defaults(fn=cmd_analyze)

    p_sp = sub.add_parser("spectrum", help="dump the exact spectrum as CSV")
    p_sp.add_argument("spec")
    p_sp.add_argument("--naive", action="store_true")
    p_sp.set_defaults(fn=cmd_spectrum)

    p_c = sub.add_parser("construct", help="generate functions from the built-in families")
    csub = p_c.add_subparsers(dest="family", required=True)

    p_tri = csub.add_parser("trinomial", help="the cubic non-weakly regular family")
    p_tri.add_argument("--k", type=int, required=True)
    p_tri.add_argument("--j", type=int, required=True)
    p_tri.add_argument("--t", type=int, required=True)
    p_tri.add_argument("--analyze", action="store_true")
    p_tri.add_argument("--certify", action="store_true")
    p_tri.add_argument("--seed", type=int, default=0)
    p_tri.set_defaults(fn=cmd_construct_trinomial)

    p_cc = csub.add_parser("concat", help="bent concatenation from a slice file")
    p_cc.add_argument("--slices", required=True,
                      help="file with one function spec per line")
    p_cc.add_argument("--pi", help="JSON permutation file; selects the special form")
    p_cc.add_argument("--analyze", action="store_true")
    p_cc.add_argument("--seed", type=int, default=0)
    p_cc.set_defaults(fn=cmd_construct_concat)

    p_aq = csub.add_parser("add-quadratic", help="add a pure quadratic to a bent function")
    p_aq.add_argument("--f", required=True, help="function spec of the base function")
    p_aq.add_argument("--coeffs", required=True,
                      help='n comma-separated coefficients, e.g. "1,0" or "g^3,0"')
    p_aq.add_argument("--analyze", action="store_true")
    p_aq.add_argument("--seed", type=int, default=0)
    p_aq.set_defaults(fn=cmd_construct_add_quadratic)

    p_vt = sub.add_parser("verify-table1", help="reproduce the sporadic example table")
    p_vt.add_argument("--json", action="store_true")
    p_vt.add_argument("--no-search", action="store_true",
                      help="only try each entry's pinned realization")
    p_vt.set_defaults(fn=cmd_verify_table1)

    p_ps = sub.add_parser("property-suite", help="run the invariant batteries")
    p_ps.add_argument("--seed", type=int, default=0)
    p_ps.add_argument("--level", choices=("quick", "full"), default="quick")
    p_ps.add_argument("--only", help="comma-separated check names")
    p_ps.set_defaults(fn=cmd_property_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.fn(args)
    except ParseError as exc:
        _fail("parse_error", exc)
        return EXIT_PARSE
    except FieldError as exc:
        _fail("parse_error", exc)
        return EXIT_PARSE
    except PreconditionError as exc:
        _fail("precondition_error", exc)
        return EXIT_PRECONDITION
    except BudgetError as exc:
        _fail("budget_error", exc)
        return EXIT_BUDGET
    except InternalInconsistency as exc:
        _fail("internal_inconsistency", exc)
        return EXIT_INTERNAL


def _fail(kind: str, exc: Exception) -> None:
    json.dump({"error": {"kind": kind, "message": str(exc)}}, sys.stderr)
    sys.stderr.write("\n")


if __name__ == "__main__":
    sys.exit(main())
