"""Command-line front end.

Exit codes: 0 success, 2 bad input or unmet precondition, 3 resource cap,
4 identity or consistency violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import statistics
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .errors import IdentityViolation, InputError, InternalError, ResourceLimit
from .hilbert import consistency_check, denominator, k_polynomial, rational_series
from .identities import (
    BettiTable,
    IdentityReport,
    moment,
    signed_sequence,
    verify_theorem1,
    verify_theorem2,
    verify_theorem2_all,
)
from .limits import Limits
from .polynomial import render
from .sampling import random_semigroups
from .semigroup import NumericalSemigroup, apery_set, new_semigroup

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_VIOLATION = 0, 2, 3, 4


class Violation(Exception):
    """A check returned a failing verdict; carries the dump to write."""

    def __init__(self, message, dump):
        super().__init__(message)
        self.dump = dump


def parse_generators(text):
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise InputError(f"cannot parse generator list {text!r}") from None


def read_batch(path):
    """One semigroup per line, comma separated; ``#`` comments and blanks skipped."""
    entries = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                entries.append(line)
    return entries


def read_betti(path):
    """Whitespace-separated ``i j beta`` triples, one per line."""
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                parts = line.replace(",", " ").split()
                if len(parts) != 3:
                    raise InputError(f"Betti line must have 3 fields: {line!r}")
                rows.append(tuple(int(p) for p in parts))
    return BettiTable(tuple(rows))


def _k_terms(k):
    return [[d, str(c)] for d, c in k.terms]


def _profile_dict(prof, with_gaps=False):
    out = {"frobenius": prof.frobenius, "conductor": prof.conductor, "genus": prof.genus}
    if with_gaps:
        out["gaps"] = list(prof.gaps)
    return out


def _oracle_block(S, seq, limits):
    prof_g = apery_set(S, limits)
    g = max(prof_g.elements) - prof_g.modulus
    og = oracle.oracle_frobenius(S, limits)
    moments_ok = all(oracle.oracle_moment(S, r, limits) == moment(seq, r) for r in range(S.m))
    bound = g + 1 + sum(S.generators)
    series_ok = rational_series(k_polynomial(S, limits), denominator(S), bound).to_dense() == [
        int(b) for b in oracle.enumerate(S, bound, limits).membership
    ]
    block = {"frobenius": og, "frobenius_agrees": og == g, "moments_agree": moments_ok, "series_agrees": series_ok}
    if not (block["frobenius_agrees"] and moments_ok and series_ok):
        raise Violation(f"{S}: oracle disagreement", {"semigroup": list(S.generators), "oracle": block})
    return block


def _report_checks(report):
    return [c.to_dict() for c in report.checks]


def _ensure_pass(S, report):
    for c in report.checks:
        if not c.passed:
            raise Violation(
                f"{S}: {c.kind} identity failed at r={c.r} q={c.q} n={c.n}",
                {"semigroup": list(S.generators), **c.to_dict()},
            )


def run_entry(command, raw, args, limits):
    """Evaluate one semigroup; returns the json-ready record."""
    S = new_semigroup(parse_generators(raw), auto_minimize=args.auto_minimize, limits=limits)
    record = {"semigroup": list(S.generators)}
    if args.auto_minimize:
        dropped = sorted(set(parse_generators(raw)) - set(S.generators))
        if dropped:
            record["removed"] = dropped
    data = consistency_check(S, limits)
    record["profile"] = _profile_dict(data.profile, with_gaps=command == "info")
    if command == "info":
        record["apery"] = list(apery_set(S, limits).elements)
        record["p_poly"] = _k_terms(data.p_poly)
    record["k_poly"] = _k_terms(data.k_poly)

    table = read_betti(args.betti) if getattr(args, "betti", None) else None
    seq = signed_sequence(S, table=table, limits=limits)
    if command == "verify":
        report = verify_theorem1(S, seq, strict=False)
        record["checks"] = _report_checks(report)
        _ensure_pass(S, report)
    elif command == "verify-complex":
        report = _complex_report(S, seq, args.q, args.n)
        record["checks"] = _report_checks(report)
        _ensure_pass(S, report)
    else:
        record["checks"] = []
    if args.oracle:
        record["oracle"] = _oracle_block(S, seq, limits)
    record["_text"] = _render_text(command, S, data, record)
    return record


def _complex_report(S, seq, q, n):
    if q is None:
        if n is not None:
            raise InputError("--n requires --q")
        return verify_theorem2_all(S, seq, strict=False)
    if n is not None:
        return verify_theorem2(S, q, n, seq, strict=False)
    report = IdentityReport(S.generators)
    for n in range(1, q):
        if math.gcd(n, q) == 1:
            report = report + verify_theorem2(S, q, n, seq, strict=False)
    return report


def _render_text(command, S, data, record):
    prof = data.profile
    lines = []
    if command == "info":
        lines.append(
            f"{S} m={S.m} frobenius={prof.frobenius} conductor={prof.conductor} genus={prof.genus}"
        )
        lines.append(f"  apery={record['apery']}")
        lines.append(f"  p={render(data.p_poly)}")
        lines.append(f"  k={render(data.k_poly)}")
    elif command == "kpoly":
        lines.append(f"{S} k={render(data.k_poly)}")
    else:
        passed = sum(c["pass"] for c in record["checks"])
        lines.append(f"{S} {passed}/{len(record['checks'])} checks pass")
        for c in record["checks"]:
            where = "" if c["kind"] == "real" else f" q={c['q']} n={c['n']}"
            verdict = "PASS" if c["pass"] else "FAIL"
            lines.append(f"  {c['kind']:<10} r={c['r']}{where} computed={_flat(c['computed'])} expected={_flat(c['expected'])} {verdict}")
    if "oracle" in record:
        lines.append(f"  oracle={record['oracle']}")
    return "\n".join(lines)


def _flat(v):
    return v if isinstance(v, str) else "[" + ",".join(v) + "]"


def _csv_rows(command, record):
    gens = ",".join(map(str, record["semigroup"]))
    if command in ("info", "kpoly"):
        prof = record["profile"]
        k = " ".join(f"{d}:{c}" for d, c in record["k_poly"])
        return [[gens, prof["frobenius"], prof["conductor"], prof["genus"], k]]
    return [
        [gens, c["kind"], c["r"], c["q"] if c["q"] is not None else "", c["n"] if c["n"] is not None else "",
         _flat(c["expected"]).strip("[]").replace(",", " "), _flat(c["computed"]).strip("[]").replace(",", " "),
         c["pass"]]
        for c in record["checks"]
    ]


CSV_HEADERS = {
    "info": ["generators", "frobenius", "conductor", "genus", "k_poly"],
    "kpoly": ["generators", "frobenius", "conductor", "genus", "k_poly"],
    "verify": ["generators", "kind", "r", "q", "n", "expected", "computed", "pass"],
    "verify-complex": ["generators", "kind", "r", "q", "n", "expected", "computed", "pass"],
}


def _write_dump(dump):
    fd, path = tempfile.mkstemp(prefix="numsemi-violation-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        json.dump(dump, fh, indent=2, sort_keys=True)
    return path


def _classify(exc):
    if isinstance(exc, InputError):
        return EXIT_INPUT
    if isinstance(exc, ResourceLimit):
        return EXIT_RESOURCE
    return EXIT_VIOLATION


def _evaluate(command, raw, args, limits, err):
    try:
        return run_entry(command, raw, args, limits), EXIT_OK
    except (Violation, IdentityViolation) as exc:
        path = _write_dump(exc.dump)
        print(f"error: {exc} (dump: {path})", file=err)
        return {"semigroup": raw, "error": str(exc), "dump": path}, EXIT_VIOLATION
    except (InputError, ResourceLimit, InternalError) as exc:
        print(f"error: {exc}", file=err)
        return {"semigroup": raw, "error": str(exc)}, _classify(exc)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return {"semigroup": raw, "error": str(exc)}, EXIT_INPUT


def _emit(text, args):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_single(args, limits):
    if bool(args.generators) == bool(args.input):
        print("error: give exactly one of GENERATORS or --input", file=sys.stderr)
        return EXIT_INPUT
    try:
        raws = read_batch(args.input) if args.input else [args.generators]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    results = [_evaluate(args.command, raw, args, limits, sys.stderr) for raw in raws]
    code = max((c for _, c in results), default=EXIT_OK)
    records = [r for r, _ in results]

    if args.format == "json":
        clean = [{k: v for k, v in r.items() if k != "_text"} for r in records]
        payload = clean if args.input else clean[0]
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADERS[args.command])
        for r in records:
            if "error" not in r:
                writer.writerows(_csv_rows(args.command, r))
        text = buf.getvalue()
    else:
        text = "".join(r["_text"] + "\n" for r in records if "_text" in r)
    _emit(text, args)
    return code


def parse_m_range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise InputError(f"bad m range {text!r}, expected LO..HI") from None
    return lo, hi


def sweep_one(gens, use_oracle, limits):
    """Full verification of one sampled semigroup; returns a summary dict."""
    start = time.perf_counter()
    S = NumericalSemigroup(tuple(gens))
    entry = {"semigroup": list(gens)}
    try:
        new_semigroup(gens, limits=limits)
        consistency_check(S, limits)
        seq = signed_sequence(S, limits=limits)
        t1 = verify_theorem1(S, seq, strict=False)
        t2 = verify_theorem2_all(S, seq, strict=False)
        entry["theorem1_checks"] = len(t1)
        entry["theorem2_checks"] = len(t2)
        entry["moduli"] = sorted({c.q for c in t2.checks})
        ok = t1.passed and t2.passed
        if use_oracle:
            _oracle_block(S, seq, limits)
            entry["oracle"] = True
        entry["pass"] = ok
    except Violation as exc:
        entry["pass"] = False
        entry["error"] = str(exc)
    except (InputError, ResourceLimit, InternalError) as exc:
        entry["pass"] = False
        entry["error"] = f"{type(exc).__name__}: {exc}"
    return entry, time.perf_counter() - start


def cmd_sweep(args, limits):
    m_range = parse_m_range(args.m)
    if args.count < 1:
        raise InputError("--count must be at least 1")
    seed = args.seed
    sample = random_semigroups(args.count, seed, m_range, args.dmax)
    gens = [S.generators for S in sample]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(sweep_one, gens, [args.oracle] * len(gens), [limits] * len(gens), chunksize=8))
    else:
        results = [sweep_one(g, args.oracle, limits) for g in gens]
    entries = [e for e, _ in results]
    times = sorted(t for _, t in results)
    passed = sum(e["pass"] for e in entries)
    summary = {
        "seed": seed,
        "count": args.count,
        "m_range": list(m_range),
        "dmax": args.dmax,
        "oracle": args.oracle,
        "passed": passed,
        "failed": args.count - passed,
        "instances": entries,
    }
    q = statistics.quantiles(times, n=100, method="inclusive") if len(times) > 1 else times * 99
    timing = f"timing: total={sum(times):.3f}s p50={q[49]*1e3:.2f}ms p90={q[89]*1e3:.2f}ms p99={q[98]*1e3:.2f}ms max={times[-1]*1e3:.2f}ms"

    if args.format == "json":
        # timings go to stderr so stdout is reproducible byte-for-byte
        text = json.dumps(summary, indent=2) + "\n"
        print(timing, file=sys.stderr)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["generators", "theorem1_checks", "theorem2_checks", "pass"])
        for e in entries:
            writer.writerow([",".join(map(str, e["semigroup"])), e.get("theorem1_checks", ""),
                             e.get("theorem2_checks", ""), e["pass"]])
        text = buf.getvalue()
        print(timing, file=sys.stderr)
    else:
        text = (
            f"sweep seed={seed} count={args.count} m={m_range[0]}..{m_range[1]} dmax={args.dmax}"
            f" oracle={args.oracle}\n{passed}/{args.count} pass\n{timing}\n"
        )
    _emit(text, args)
    failures = [e for e in entries if not e["pass"]]
    for e in failures:
        print(f"FAIL {','.join(map(str, e['semigroup']))}: {e.get('error', 'identity check failed')}", file=sys.stderr)
    return EXIT_VIOLATION if failures else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    common.add_argument("--max-nodes", type=int, help="cap on the Apéry residue graph size")
    common.add_argument("--max-enumerate", type=int, help="cap on enumeration bounds")

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument("generators", nargs="?", help="comma-separated generators, e.g. 4,7,9")
    single.add_argument("--input", metavar="FILE", help="batch file: one generator list per line")
    single.add_argument("--auto-minimize", action="store_true", help="drop redundant generators instead of failing")

    parser = argparse.ArgumentParser(prog="numsemi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[single], help="Frobenius number, conductor, gaps, p and k polynomials")
    sub.add_parser("kpoly", parents=[single], help="k-polynomial (signed Betti sums by degree)")
    verify = sub.add_parser("verify", parents=[single], help="real moment identities")
    verify.add_argument("--betti", metavar="FILE", help="Betti table (i j beta per line) to check against k")
    vc = sub.add_parser("verify-complex", parents=[single], help="cyclotomic moment identities")
    vc.add_argument("--q", type=int)
    vc.add_argument("--n", type=int)
    vc.add_argument("--betti", metavar="FILE")
    sw = sub.add_parser("sweep", parents=[common], help="random property sweep")
    sw.add_argument("--count", type=int, default=500)
    sw.add_argument("--m", default="2..6", help="range of generator counts, LO..HI")
    sw.add_argument("--dmax", type=int, default=300)
    sw.add_argument("--seed", type=int, default=7)
    sw.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    base = Limits.from_env()
    limits = Limits(
        max_apery_nodes=args.max_nodes or base.max_apery_nodes,
        max_enumerate=args.max_enumerate or base.max_enumerate,
    )
    try:
        if args.command == "sweep":
            return cmd_sweep(args, limits)
        return cmd_single(args, limits)
    except (InputError, ResourceLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _classify(exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
