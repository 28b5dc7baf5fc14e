"""Command-line interface: generation, verdicts, family tables, and scans.

Commands:

* ``gen``           exact terms of one sequence
* ``check``         completeness verdict with certificate (JSON)
* ``oracle-check``  subset-sum ground-truth verdict (JSON)
* ``family-table``  closed-form bounds vs. engine search (CSV)
* ``scan-2l1``      exhaustive counterexample hunt for the 2L-1 window rule
* ``min-root``      least principal root among incomplete vectors vs. the
                    lambda threshold
* ``dense``         root sweep of the sparse family toward 2 (CSV)

Exit codes: 0 a verdict/report was produced (of any kind), 2 input error,
3 no definite answer within budget while --require-definite was set,
4 a scan surfaced a counterexample (never silently ignored).

Output goes to stdout unless --out is given.  JSON outputs embed the
effective configuration under "config"; CSV outputs carry it as a leading
``#`` comment; plain outputs echo it to stderr.  The only environment
variable consulted is NO_COLOR.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional

from . import analytic, brown, families, oracle
from .core import Coefficients, InvalidCoefficients, generate_terms, validate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EXHAUSTED = 3
EXIT_COUNTEREXAMPLE = 4


class _InputError(ValueError):
    # ValueError subclass so argparse `type=` callbacks convert cleanly
    # into usage errors instead of tracebacks.
    pass


def _parse_coefficients(text: str) -> Coefficients:
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts if p != ""]
    except ValueError:
        raise _InputError(f"coefficients must be comma-separated integers, got {text!r}")
    if not values:
        raise _InputError("empty coefficient vector")
    try:
        return validate(values)
    except InvalidCoefficients as exc:
        raise _InputError(str(exc))


def _parse_range(text: str) -> range:
    # "3" or "1..6", inclusive.
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise _InputError(f"expected N or A..B, got {text!r}")


_parse_range.__name__ = "range"  # argparse uses this in usage errors


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _color(word: str, kind: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return word
    codes = {brown.COMPLETE: "32", brown.INCOMPLETE: "31", brown.UNKNOWN: "33"}
    return f"\x1b[{codes.get(kind, '0')}m{word}\x1b[0m"


def _verdict_payload(verdict: brown.Verdict, config: dict) -> dict:
    payload = verdict.to_json_dict()
    payload["config"] = config
    return payload


def _render_verdict(verdict: brown.Verdict, config: dict, fmt: str, out: Optional[str]) -> None:
    if fmt == "plain":
        cert = verdict.certificate
        bits = [str(verdict.coefficients), _color(verdict.kind, verdict.kind),
                f"certificate={cert.tag()}"]
        if cert.index is not None:
            bits.append(f"index={cert.index}")
        if verdict.conjectural:
            bits.append("conjectural")
        if verdict.note:
            bits.append(f"({verdict.note})")
        _emit(" ".join(bits), out)
        print(f"# config: {json.dumps(config, sort_keys=True)}", file=sys.stderr)
    elif fmt == "csv":
        payload = _verdict_payload(verdict, config)
        head = "coefficients,kind,certificate,index,conjectural,horizon_used"
        row = ";".join(str(v) for v in verdict.coefficients.values)
        line = (
            f"{row},{payload['kind']},{payload['certificate']},"
            f"{payload['index'] if payload['index'] is not None else ''},"
            f"{str(payload['conjectural']).lower()},{payload['horizon_used']}"
        )
        _emit(f"# config: {json.dumps(config, sort_keys=True)}\n{head}\n{line}", out)
    else:
        _emit(json.dumps(_verdict_payload(verdict, config), sort_keys=True), out)


def _definite_exit(verdict: brown.Verdict, require_definite: bool) -> int:
    if require_definite and verdict.kind == brown.UNKNOWN:
        return EXIT_EXHAUSTED
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen


def _cmd_gen(args) -> int:
    c = _parse_coefficients(args.coefficients)
    if args.n < 1:
        raise _InputError(f"--n must be >= 1, got {args.n}")
    from .core import generate_terms

    t = generate_terms(c, args.n)
    config = {"command": "gen", "coefficients": list(c.values), "n": args.n,
              "format": args.format}
    if args.format == "json":
        _emit(json.dumps({"coefficients": list(c.values), "terms": list(t.terms),
                          "config": config}, sort_keys=True), args.out)
    elif args.format == "csv":
        rows = "\n".join(f"{i},{h}" for i, h in enumerate(t.terms, start=1))
        _emit(f"# config: {json.dumps(config, sort_keys=True)}\nn,term\n{rows}", args.out)
    else:
        _emit(" ".join(str(h) for h in t.terms), args.out)
        print(f"# config: {json.dumps(config, sort_keys=True)}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check / oracle-check


def _verify_certificate(verdict: brown.Verdict) -> bool:
    cert = verdict.certificate
    if cert.kind == "root":
        redo = analytic.triage(verdict.coefficients)
        return redo.kind == verdict.kind and redo.certificate.rule == cert.rule
    return brown.recheck(verdict)


def _cmd_check(args) -> int:
    c = _parse_coefficients(args.coefficients)
    config = {
        "command": "check",
        "coefficients": list(c.values),
        "horizon": args.horizon,
        "assume_2l1": args.assume_2l1,
        "triage_first": args.triage_first,
        "format": args.format,
        "path": [],
    }
    verdict = None
    if args.triage_first and c.L >= 2:
        config["path"].append("triage")
        verdict = analytic.triage(c)
        if verdict.kind == brown.UNKNOWN:
            verdict = None
    if verdict is None:
        config["path"].append("brown")
        verdict = brown.check_completeness(c, horizon=args.horizon, assume_2l1=args.assume_2l1)
    if args.verify:
        ok = _verify_certificate(verdict)
        config["verified"] = ok
        if not ok:
            print(f"certificate failed re-validation: {verdict}", file=sys.stderr)
            _render_verdict(verdict, config, args.format, args.out)
            return 1
    _render_verdict(verdict, config, args.format, args.out)
    return _definite_exit(verdict, args.require_definite)


def _cmd_oracle_check(args) -> int:
    c = _parse_coefficients(args.coefficients)
    max_prefix = args.max_prefix if args.max_prefix else max(4 * c.L, 32)
    config = {"command": "oracle-check", "coefficients": list(c.values),
              "max_prefix": max_prefix, "budget_bits": args.budget_bits,
              "format": args.format}
    try:
        verdict = oracle.oracle_verdict(c, max_prefix, budget_bits=args.budget_bits)
    except oracle.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED if args.require_definite else EXIT_OK
    if args.verify:
        ok = brown.recheck(verdict)
        config["verified"] = ok
        if not ok:
            print(f"certificate failed re-validation: {verdict}", file=sys.stderr)
            _render_verdict(verdict, config, args.format, args.out)
            return 1
    _render_verdict(verdict, config, args.format, args.out)
    return _definite_exit(verdict, args.require_definite)


# ---------------------------------------------------------------------------
# family-table


def _search_max_n(prefix: list[int], horizon: Optional[int]) -> Optional[int]:
    # Largest N with a complete verdict; completeness is downward-closed
    # in the last coefficient, so doubling + binary search is exact.
    def status(n: int) -> Optional[bool]:
        v = brown.check_completeness(validate(prefix + [n]), horizon=horizon)
        if v.kind == brown.UNKNOWN:
            return None
        return v.kind == brown.COMPLETE

    lo = 1
    first = status(1)
    if first is None:
        return None
    if first is False:
        return 0
    hi = 2
    while (s := status(hi)) is True:
        lo, hi = hi, hi * 2
    if s is None:
        return None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        s = status(mid)
        if s is None:
            return None
        if s:
            lo = mid
        else:
            hi = mid
    return lo


_FAMILY_PARAMS = {
    "one-zeros": ("k",),
    "ones-zeros": ("g", "k"),
    "two-ones-zeros": ("k",),
    "one-zeros-ones": ("L", "m"),
}


def _family_rows(args):
    fam = args.family
    horizon = args.horizon
    missing = [p for p in _FAMILY_PARAMS[fam] if getattr(args, p) is None]
    if missing:
        flags = ", ".join(f"--{p}" for p in missing)
        raise _InputError(f"family {fam!r} needs {flags} (e.g. --{missing[0]} 1..4)")
    if fam == "one-zeros":
        for k in args.k:
            b = families.bound_one_zeros(k)
            found = _search_max_n([1] + [0] * k, horizon)
            yield {"g": "", "k": k, "L": k + 2, "m": "", "bound": b, "search": found}
    elif fam == "ones-zeros":
        for g in args.g:
            for k in args.k:
                prefix = [1] * g + [0] * k
                found = _search_max_n(prefix, horizon)
                try:
                    b = families.bound_ones_zeros(g, k) if g > 1 else families.bound_one_zeros(k)
                except families.OutOfProvenRange:
                    b = None
                yield {"g": g, "k": k, "L": g + k + 1, "m": "", "bound": b, "search": found}
    elif fam == "two-ones-zeros":
        for k in args.k:
            b = families.bound_two_ones_zeros(k)
            found = _search_max_n([1, 1] + [0] * k, horizon)
            yield {"g": 2, "k": k, "L": k + 3, "m": "", "bound": b, "search": found}
    elif fam == "one-zeros-ones":
        for L in args.L:
            for m in args.m:
                try:
                    b = families.bound_one_zeros_ones(L, m)
                except families.ShapeViolation:
                    continue
                prefix = [1] + [0] * (L - m - 2) + [1] * m
                found = _search_max_n(prefix, horizon)
                yield {"g": "", "k": "", "L": L, "m": m, "bound": b, "search": found}
    else:  # pragma: no cover - argparse choices guard this
        raise _InputError(f"unknown family {fam!r}")


def _cmd_family_table(args) -> int:
    config = {"command": "family-table", "family": args.family,
              "g": [args.g.start, args.g.stop - 1] if args.g else None,
              "k": [args.k.start, args.k.stop - 1] if args.k else None,
              "L": [args.L.start, args.L.stop - 1] if args.L else None,
              "m": [args.m.start, args.m.stop - 1] if args.m else None,
              "horizon": args.horizon}
    lines = [f"# config: {json.dumps(config, sort_keys=True)}",
             "family,g,k,L,m,max_n_rule,proven,max_n_search,agree"]
    discrepancies = 0
    for row in _family_rows(args):
        b = row["bound"]
        rule = b.max_n if b else ""
        proven = str(b.proven).lower() if b else ""
        search = row["search"] if row["search"] is not None else "?"
        agree = ""
        if b and row["search"] is not None:
            agree = str(b.max_n == row["search"]).lower()
            if b.max_n != row["search"]:
                discrepancies += 1
        lines.append(
            f"{args.family},{row['g']},{row['k']},{row['L']},{row['m']},"
            f"{rule},{proven},{search},{agree}"
        )
    if discrepancies:
        lines.append(f"# discrepancies: {discrepancies}")
    _emit("\n".join(lines), args.out)
    return EXIT_COUNTEREXAMPLE if discrepancies else EXIT_OK


# ---------------------------------------------------------------------------
# scan-2l1


def _valid_vectors(L: int, cap: int):
    if L == 1:
        for c1 in range(1, cap + 1):
            yield (c1,)
        return
    for c1 in range(1, cap + 1):
        for mid in itertools.product(range(0, cap + 1), repeat=L - 2):
            for cL in range(1, cap + 1):
                yield (c1, *mid, cL)


def _scan_2l1_one(task):
    vals, window, horizon = task
    c = validate(vals)
    trace = brown.gap_trace(generate_terms(c, window))
    if any(g < 0 for g in trace.gaps):
        return None
    verdict = brown.check_completeness(c, horizon=horizon)
    if verdict.kind == brown.UNKNOWN:
        try:
            verdict = oracle.oracle_verdict(c, max_prefix=max(4 * c.L, 32))
        except oracle.BudgetExceeded:
            pass
    if verdict.kind == brown.INCOMPLETE:
        return {"coefficients": list(vals), "status": "counterexample",
                "first_failure": verdict.certificate.index}
    if verdict.kind == brown.UNKNOWN:
        return {"coefficients": list(vals), "status": "undecided"}
    return None


def _run_parallel(worker, tasks, jobs: int):
    if jobs == 1 or len(tasks) < 64:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // (jobs * 8))))


def _cmd_scan_2l1(args) -> int:
    L = args.L
    if L < 1 or args.coeff_cap < 1:
        raise _InputError("need --L >= 1 and --coeff-cap >= 1")
    window = args.window if args.window else 2 * L - 1
    config = {"command": "scan-2l1", "L": L, "coeff_cap": args.coeff_cap,
              "window": window, "jobs": args.jobs, "format": args.format}
    tasks = [(vals, window, args.horizon) for vals in _valid_vectors(L, args.coeff_cap)]
    results = [r for r in _run_parallel(_scan_2l1_one, tasks, args.jobs) if r]
    results.sort(key=lambda r: r["coefficients"])
    counterexamples = [r for r in results if r["status"] == "counterexample"]
    undecided = [r for r in results if r["status"] == "undecided"]
    report = {
        "config": config,
        "candidates": len(tasks),
        "window": window,
        "counterexamples": counterexamples,
        "undecided": undecided,
    }
    if args.format == "plain":
        _emit(
            f"scanned {len(tasks)} vectors (L={L}, cap={args.coeff_cap}, window={window}): "
            f"{len(counterexamples)} counterexample(s), {len(undecided)} undecided",
            args.out,
        )
        for r in counterexamples:
            print(f"  fails at {r['first_failure']}: {r['coefficients']}")
    else:
        _emit(json.dumps(report, sort_keys=True), args.out)
    if counterexamples:
        print(
            f"counterexample(s) found for window {window} at L={L}; "
            "see report for coefficient vectors",
            file=sys.stderr,
        )
        return EXIT_COUNTEREXAMPLE
    if undecided and args.require_definite:
        return EXIT_EXHAUSTED
    return EXIT_OK


# ---------------------------------------------------------------------------
# min-root


def _min_root_one(task):
    # Complete vectors are excluded by the sound gap certificates alone;
    # incompleteness is additionally confirmed by the subset-sum oracle,
    # which stops at the first permanently missing value and stays cheap.
    vals, budget_bits = task
    c = validate(vals)
    engine = brown.check_completeness(c)
    if engine.kind == brown.COMPLETE:
        return {"coefficients": list(vals), "kind": engine.kind}
    max_prefix = max(2 * c.L - 1, engine.certificate.index or 0)
    try:
        verdict = oracle.oracle_verdict(c, max_prefix=max_prefix, budget_bits=budget_bits)
    except oracle.BudgetExceeded:
        return {"coefficients": list(vals), "kind": brown.UNKNOWN}
    return {"coefficients": list(vals), "kind": verdict.kind}


def _cmd_min_root(args) -> int:
    L, cap = args.L, args.sum_cap
    if L < 2 or cap < 2:
        raise _InputError("need --L >= 2 and --sum-cap >= 2")
    tol = Fraction(args.tol) if args.tol else analytic.DEFAULT_TOL
    config = {"command": "min-root", "L": L, "sum_cap": cap, "jobs": args.jobs,
              "tol": float(tol), "format": args.format}
    tasks = []
    for total in range(2, cap + 1):
        tasks.extend((tuple(v.values), oracle.DEFAULT_BUDGET_BITS)
                     for v in analytic.vectors_with_sum(L, total))
    results = _run_parallel(_min_root_one, tasks, args.jobs)
    incomplete = [r for r in results if r["kind"] == brown.INCOMPLETE]
    undecided = [r for r in results if r["kind"] == brown.UNKNOWN]
    lam = analytic.lambda_threshold(L, tol)
    best = best_bracket = None
    for r in sorted(incomplete, key=lambda r: r["coefficients"]):
        bracket = analytic.principal_root(validate(r["coefficients"]), tol)
        if best_bracket is None or analytic.compare_roots(bracket, best_bracket) < 0:
            best, best_bracket = r["coefficients"], bracket
    report = {
        "config": config,
        "candidates": len(tasks),
        "incomplete": len(incomplete),
        "undecided": [r["coefficients"] for r in undecided],
        "lambda": lam.root.approx,
        "frontier": best,
        "frontier_root": best_bracket.approx if best_bracket else None,
        "margin": (best_bracket.approx - lam.root.approx) if best_bracket else None,
        "conjecture_violated": False,
    }
    violated = best_bracket is not None and analytic.compare_roots(best_bracket, lam.root) < 0
    report["conjecture_violated"] = violated
    if args.format == "plain":
        _emit(
            f"L={L} cap={cap}: {len(incomplete)} incomplete of {len(tasks)}; "
            f"frontier {best} root={report['frontier_root']} vs lambda={report['lambda']} "
            f"margin={report['margin']}",
            args.out,
        )
    else:
        _emit(json.dumps(report, sort_keys=True), args.out)
    if violated:
        print("frontier root lies below the lambda threshold: conjecture "
              "counterexample; report retained", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    if undecided and args.require_definite:
        return EXIT_EXHAUSTED
    return EXIT_OK


# ---------------------------------------------------------------------------
# dense


def _cmd_dense(args) -> int:
    if args.L < 2:
        raise _InputError("need --L >= 2")
    tol = Fraction(args.tol) if args.tol else analytic.DEFAULT_TOL
    config = {"command": "dense", "L": args.L, "epsilon": args.epsilon,
              "tol": float(tol)}
    try:
        report = analytic.denseness_scan(args.L, epsilon=args.epsilon, tol=tol)
    except analytic.CostCap as exc:
        print(f"cost cap: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED if args.require_definite else EXIT_OK
    lines = [f"# config: {json.dumps(config, sort_keys=True)}", "k,root"]
    lines += [f"{k},{root:.12f}" for k, root in report.roots]
    lines += [
        f"# max_gap: {report.max_gap:.12f} at k={report.max_gap_at}",
        f"# covered: [{report.covered[0]:.12f}, {report.covered[1]:.12f}]",
        f"# increasing_certified: {report.increasing_certified}",
        f"# gaps_decreasing_certified: {report.gaps_decreasing_certified}",
        f"# terminal_root_exact_two: {report.terminal_root_exact_two}",
    ]
    if args.epsilon is not None:
        lines.append(f"# epsilon_met: {report.epsilon_met}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plrs",
        description="Completeness toolkit for positive linear recurrence sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv", "plain"), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--require-definite", action="store_true",
                       help="exit 3 when no definite verdict is reached")

    p = sub.add_parser("gen", help="generate exact sequence terms")
    p.add_argument("coefficients", help="comma-separated, e.g. 1,0,3")
    p.add_argument("--n", type=int, required=True, help="number of terms")
    common(p, default="plain")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="completeness verdict with certificate")
    p.add_argument("coefficients")
    p.add_argument("--horizon", type=int, default=None,
                   help="explicit scan horizon (default: adaptive)")
    p.add_argument("--assume-2l1", action="store_true",
                   help="accept the conjectural 2L-1 window rule")
    p.add_argument("--triage-first", action="store_true",
                   help="try the root triage before gap arithmetic")
    p.add_argument("--verify", action="store_true",
                   help="re-validate the certificate from scratch")
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("oracle-check", help="subset-sum ground-truth verdict")
    p.add_argument("coefficients")
    p.add_argument("--max-prefix", type=int, default=None)
    p.add_argument("--budget-bits", type=int, default=oracle.DEFAULT_BUDGET_BITS)
    p.add_argument("--verify", action="store_true",
                   help="re-validate the certificate from scratch")
    common(p)
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("family-table", help="closed-form bounds vs engine search")
    p.add_argument("--family", required=True,
                   choices=["one-zeros", "ones-zeros", "two-ones-zeros", "one-zeros-ones"])
    p.add_argument("--g", type=_parse_range, default=None, help="range of leading ones, A..B")
    p.add_argument("--k", type=_parse_range, default=None, help="range of zeros, A..B")
    p.add_argument("--L", type=_parse_range, default=None, help="range of total lengths, A..B")
    p.add_argument("--m", type=_parse_range, default=None, help="range of trailing ones, A..B")
    p.add_argument("--horizon", type=int, default=None)
    common(p, formats=("csv",), default="csv")
    p.set_defaults(func=_cmd_family_table)

    p = sub.add_parser("scan-2l1", help="hunt counterexamples to the 2L-1 window rule")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--coeff-cap", type=int, required=True)
    p.add_argument("--window", type=int, default=None,
                   help="override the pass-window length (default 2L-1)")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common(p, formats=("json", "plain"))
    p.set_defaults(func=_cmd_scan_2l1)

    p = sub.add_parser("min-root", help="least incomplete principal root vs lambda")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--sum-cap", type=int, required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common(p, formats=("json", "plain"))
    p.set_defaults(func=_cmd_min_root)

    p = sub.add_parser("dense", help="root sweep of the sparse family")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--tol", type=float, default=None)
    common(p, formats=("csv",), default="csv")
    p.set_defaults(func=_cmd_dense)

    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # terms grow geometrically; never truncate
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidCoefficients, brown.HorizonTooSmall, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
