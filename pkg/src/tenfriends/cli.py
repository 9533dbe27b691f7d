"""Command-line entry point: ``tenfriends <subcommand> ...``.

Exit status: 0 success, 1 a verification failed or a friend of 10 turned up,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from tenfriends import bounds, primes, properties, search
from tenfriends.arith import Factorization, abundancy, factorize, sigma
from tenfriends.constraints import check_friend_conditions


def rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_candidate(text: str) -> Factorization:
    text = text.strip()
    if text.isdigit():
        n = int(text)
        if n < 1:
            raise argparse.ArgumentTypeError("candidate must be a positive integer")
        return factorize(n)
    try:
        return Factorization.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def positive_int(text: str) -> int:
    try:
        v = int(float(text)) if "e" in text.lower() else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def k_list(text: str) -> list[int]:
    try:
        ks = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    if not ks or any(k not in bounds.SPECS for k in ks):
        raise argparse.ArgumentTypeError(f"k must be drawn from 2,3,4, got {text!r}")
    return ks


def _emit_table(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: "" if v is None else v for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        if not rows:
            return
        keys = list(rows[0])
        cells = [[str(k) for k in keys]] + [["-" if r[k] is None else str(r[k]) for k in keys] for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(keys))]
        for c in cells:
            out.write("  ".join(s.rjust(w) for s, w in zip(c, widths)) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_abundancy(args, out) -> int:
    f = args.candidate
    row = {
        "candidate": str(f),
        "n": f.value(),
        "sigma": sigma(f),
        "abundancy": rational(abundancy(f)),
    }
    if args.format == "text":
        out.write(row["abundancy"] + "\n")
    else:
        _emit_table([row], args.format, out)
    return 0


def cmd_primes(args, out) -> int:
    p = primes.nth_prime(args.n)
    if args.format == "text":
        out.write(f"{p}\n")
    else:
        _emit_table([{"n": args.n, "prime": p}], args.format, out)
    return 0


def cmd_bounds(args, out) -> int:
    if args.omega_max < args.omega_min:
        raise UsageError("--omega-max must be >= --omega-min")
    rows = [
        bounds.bound_row(k, w).as_dict()
        for w in range(args.omega_min, args.omega_max + 1)
        for k in args.k
    ]
    _emit_table(rows, args.format, out)
    return 0


def _verifications(args) -> list[bounds.Verification]:
    if args.suite == "theorems":
        return [bounds.verify_ratio_limits(k, args.omega_max) for k in (2, 3, 4)]
    if args.suite == "rosser":
        upper = bounds.Verification("rosser p_n < n(log n + 2 log log n)")
        bad = primes.rosser_violations(args.max)
        upper.checks = max(0, args.max - 3) - len(bad)
        if bad:
            upper.violation = f"n={bad[0]}: p_n={primes.nth_prime(bad[0])}"
        index = bounds.Verification("p_n > n")
        bad = primes.index_violations(args.max)
        index.checks = args.max - len(bad)
        if bad:
            index.violation = f"n={bad[0]}"
        return [upper, index]
    return properties.run_all(args.seed)


def cmd_verify(args, out) -> int:
    reps = _verifications(args)
    total = sum(r.checks for r in reps)
    bad = sum(not r.ok for r in reps)
    if args.format == "text":
        for r in reps:
            status = "ok" if r.ok else f"VIOLATION {r.violation}"
            out.write(f"{r.name}: {r.checks} checks, {status}\n")
        out.write(f"{len(reps)} suites, {total} checks, {bad} violations\n")
    elif args.format == "json":
        json.dump({"suite": args.suite, "results": [r.as_dict() for r in reps],
                   "checks": total, "violations": bad}, out, indent=2)
        out.write("\n")
    else:
        _emit_table([r.as_dict() for r in reps], "csv", out)
    return 1 if bad else 0


def cmd_check(args, out) -> int:
    f = args.candidate
    if f.value() <= 1:
        raise UsageError("candidate must exceed 1")
    rep = check_friend_conditions(f)
    if args.format == "json":
        json.dump(rep.as_dict(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        _emit_table([c.as_dict() for c in rep.checks], "csv", out)
    else:
        out.write(f"candidate {rep.candidate}\n")
        for c in rep.checks:
            mark = "pass" if c.passed else "FAIL"
            out.write(f"  {mark}  {c.name}" + (f"  ({c.witness})" if c.witness else "") + "\n")
        out.write(f"overall: {'pass' if rep.overall else 'fail'}\n")
    friend = rep["abundancy_equals_9_5"].passed and rep["not_ten"].passed
    return 1 if friend else 0


def _emit_outcome(o: search.SearchOutcome, args, out) -> None:
    d = o.as_dict(timing=args.timing)
    if args.format == "json":
        json.dump(d, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        flat = {"scanned": d["scanned"], "matches": " ".join(map(str, d["matches"]))}
        if d["pruning_stats"]:
            flat.update(d["pruning_stats"])
        _emit_table([flat], "csv", out)
    else:
        out.write(f"scanned: {d['scanned']}\n")
        out.write(f"matches: {d['matches'] or 'none'}\n")
        if d["pruning_stats"]:
            for key, v in d["pruning_stats"].items():
                out.write(f"{key}: {v}\n")
            for s in d["survivors"]:
                out.write("  " + " ".join(map(str, s)) + "\n")
        for note in d["notes"]:
            out.write(f"note: {note}\n")
        if args.timing:
            out.write(f"elapsed: {d['elapsed']}s\n")


def cmd_scan(args, out) -> int:
    try:
        cfg = search.SearchConfig(args.limit, args.mode, args.chunk, args.workers)
    except (ValueError, MemoryError) as e:
        raise UsageError(str(e)) from None
    o = search.scan_for_friend(cfg)
    _emit_outcome(o, args, out)
    return 1 if o.matches else 0


def cmd_signatures(args, out) -> int:
    try:
        o = search.enumerate_signatures(args.omega, args.prime_ceiling, args.max_report)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_outcome(o, args, out)
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    p = argparse.ArgumentParser(prog="tenfriends", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("abundancy", parents=[common], help="sigma(n)/n in lowest terms")
    s.add_argument("candidate", type=parse_candidate, help='integer or "5^2*7^2"')
    s.set_defaults(func=cmd_abundancy)

    s = sub.add_parser("primes", parents=[common], help="prime table queries")
    psub = s.add_subparsers(dest="primes_command", required=True)
    nth = psub.add_parser("nth", parents=[common], help="n-th prime, p_1 = 2")
    nth.add_argument("n", type=positive_int)
    nth.set_defaults(func=cmd_primes)

    s = sub.add_parser("bounds", parents=[common], help="q_2/q_3/q_4 bound table")
    s.add_argument("--omega-min", type=positive_int, default=7)
    s.add_argument("--omega-max", type=positive_int, default=7)
    s.add_argument("--k", type=k_list, default=[2, 3, 4])
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common], help="exact verification suites")
    s.add_argument("--suite", choices=("theorems", "rosser", "properties"), required=True)
    s.add_argument("--omega-max", type=positive_int, default=10**5)
    s.add_argument("--max", type=positive_int, default=10**5)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("check", parents=[common], help="necessary conditions on a candidate")
    s.add_argument("candidate", type=parse_candidate)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("scan", parents=[common], help="exhaustive scan for I(m) = 9/5")
    s.add_argument("--limit", type=positive_int, default=10**7)
    s.add_argument("--mode", choices=("unconditional", "assume-paper"), default="unconditional")
    s.add_argument("--workers", type=positive_int, default=os.cpu_count() or 1)
    s.add_argument("--chunk", type=positive_int, default=1 << 20)
    s.add_argument("--timing", action="store_true", help="include elapsed time (non-deterministic)")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("signatures", parents=[common], help="bound-pruned prime signature count")
    s.add_argument("--omega", type=positive_int, default=7)
    s.add_argument("--prime-ceiling", type=positive_int, default=None)
    s.add_argument("--max-report", type=int, default=20)
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_signatures)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
