"""Batch command-line front end.

Exit status: 0 on success, 1 when a verification run finds a counterexample,
2 on usage errors (bad arguments, unreadable input files).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__, _backend
from . import bench, collatz, matching, number_theory as nt, subset_sum as ss, topswops, zeta

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


# -- subset-sum ---------------------------------------------------------------

def cmd_subset_solve(args):
    try:
        inst = ss.parse_instance(_read(args.file))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    algos = ["naive", "mitm"] if args.algo == "both" else [args.algo]
    results = []
    for algo in algos:
        stats = ss.SolveStats()
        w = (ss.solve_naive if algo == "naive" else ss.solve_mitm)(inst, stats)
        results.append((algo, w, stats.comparisons))
    if args.format == "json":
        out = [{"algorithm": a, "witness": None if w is None else w.indices, "comparisons": c}
               for a, w, c in results]
        return _dumps(out if len(out) > 1 else out[0]) + "\n", EXIT_OK
    return "".join(ss.format_witness(w) + "\n" for _, w, _ in results), EXIT_OK


def cmd_subset_gen(args):
    inst = ss.random_instance(args.n, args.bound, args.solvable, args.seed)
    return ss.format_instance(inst), EXIT_OK


def _scaling(args):
    ns = list(range(args.n_min, args.n_max + 1))
    records = bench.bench_subset_sum(ns, args.trials, args.seed, args.bound,
                                     args.naive_max, timing=args.timing)
    table = bench.median_table(records)
    if args.timing:
        # advisory only: kept off stdout so stdout stays byte-reproducible
        args.stderr.write(_csv(["algorithm", "n", "median_wall_s"],
                               [[r["algorithm"], r["n"], f"{r['median_wall_s']:.6g}"] for r in table]))
    if args.format == "json":
        slopes = {}
        for alg in ("naive", "mitm"):
            try:
                hi = min(args.n_max, args.naive_max) if alg == "naive" else args.n_max
                slopes[alg] = bench.fit_slope(records, alg, args.n_min, hi)
            except ValueError:
                pass
        return _dumps({"medians": table, "slopes": slopes}) + "\n", EXIT_OK
    header = ["algorithm", "n", "trials", "median_comparisons"]
    return _csv(header, [[r[h] for h in header] for r in table]), EXIT_OK


# -- matching -------------------------------------------------------------

def cmd_match_solve(args):
    text = _read(args.file)
    try:
        graph = matching.build_compatibility(matching.parse_profiles(text)) if args.profiles \
            else matching.parse_graph(text)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad input: {exc}") from exc
    m = matching.maximum_matching(graph)
    pairs = sorted(m.pairs)
    if args.format == "json":
        return _dumps({"size": m.size, "perfect": matching.is_perfect(graph, m),
                       "pairs": [list(p) for p in pairs]}) + "\n", EXIT_OK
    return _csv(["left", "right"], pairs), EXIT_OK


def cmd_match_gen(args):
    if args.profiles:
        prof = matching.random_profiles(args.left, args.right, args.alphabet, args.seed)
        return matching.format_profiles(prof), EXIT_OK
    return matching.format_graph(matching.random_graph(args.left, args.right, args.density, args.seed)), EXIT_OK


# -- collatz ----------------------------------------------------------------

def cmd_collatz_trace(args):
    tr = collatz.trajectory(args.n, args.max_steps)
    if args.format == "json":
        return _dumps({"start": tr.start, "steps": tr.steps, "halted": tr.halted,
                       "values": list(tr.values)}) + "\n", EXIT_OK
    return tr.to_csv(), EXIT_OK


def cmd_collatz_verify(args):
    report = collatz.verify_range(args.lo, args.hi, args.budget, args.workers)
    return report.to_json() + "\n", EXIT_OK if report.all_halted else EXIT_COUNTEREXAMPLE


def cmd_collatz_realize(args):
    if not args.bits or set(args.bits) - {"0", "1"}:
        raise UsageError("bits must be a non-empty string of 0/1")
    rc = collatz.realize_parity_prefix(tuple(int(b) for b in args.bits))
    if args.format == "csv":
        return _csv(["residue", "modulus"], [[rc.residue, rc.modulus]]), EXIT_OK
    return _dumps({"residue": rc.residue, "modulus": rc.modulus}) + "\n", EXIT_OK


def cmd_collatz_drift(args):
    mean = collatz.drift_statistic(args.samples, args.bits, args.seed)
    return _dumps({"samples": args.samples, "bit_width": args.bits, "seed": args.seed,
                   "mean_log_factor": mean, "heuristic": 0.5 * math.log(0.75)}) + "\n", EXIT_OK


# -- topswops -----------------------------------------------------------------

def cmd_topswops_run(args):
    try:
        deck = topswops.Deck.parse(args.deck)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    trace = []
    topswops.run(deck, trace)
    return _csv(["step", "deck"], [[k, d] for k, d in enumerate(trace)]), EXIT_OK


def cmd_topswops_table(args):
    rows = topswops.table(args.max_n, args.workers, args.allow_slow)
    return _csv(["n", "max_steps", "witness"], rows), EXIT_OK


# -- number theory --------------------------------------------------------------

def cmd_nt_mertens(args):
    series = nt.mertens(args.N)
    if args.c is None:
        return series.to_csv(args.stride), EXIT_OK
    bad = nt.mertens_bound_check(args.N, args.c, series)
    out = _dumps({"N": args.N, "c": args.c, "violations": len(bad), "first": bad[:20]}) + "\n"
    return out, EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_nt_pi(args):
    cps = args.checkpoints or [10**k for k in range(1, int(math.log10(args.N)) + 1)]
    rows = nt.prime_count_vs_li(args.N, cps)
    return _csv(["n", "pi", "li", "err"], [[r.n, r.pi, repr(r.li), repr(r.err)] for r in rows]), EXIT_OK


def cmd_nt_goldbach(args):
    if args.witnesses:
        evens, ps = nt.goldbach_least_p(args.lo, args.hi)
        rows = [[int(n), int(p), int(n - p)] if p else [int(n), "NONE", "NONE"] for n, p in zip(evens, ps)]
        return _csv(["n", "p", "q"], rows), EXIT_COUNTEREXAMPLE if (ps == 0).any() else EXIT_OK
    report = nt.goldbach_verify_range(args.lo, args.hi)
    return report.to_json() + "\n", EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_nt_chen(args):
    sieve = nt.PrimeSieve(max(args.hi, 4))
    rows, missing = [], False
    for n in range(max(4, args.lo + (args.lo & 1)), args.hi + 1, 2):
        w = nt.chen_witness(n, sieve)
        if w is None:
            missing = True
            rows.append([n, "NONE", "NONE", ""])
        else:
            rows.append([n, w.p, w.q, "" if w.r is None else w.r])
    return _csv(["n", "p", "q", "r"], rows), EXIT_COUNTEREXAMPLE if missing else EXIT_OK


def cmd_nt_twins(args):
    return _csv(["p", "p_plus_2"], nt.twin_primes_up_to(args.N)), EXIT_OK


# -- zeta -------------------------------------------------------------------------

def cmd_zeta_eval(args):
    if args.s is not None:
        try:
            s = complex(args.s.replace(" ", ""))
        except ValueError as exc:
            raise UsageError(f"bad complex number {args.s!r}") from exc
        v = zeta.zeta_em(s) if args.method == "em" else zeta.zeta_integral(s)
        return _dumps({"s": [s.real, s.imag], "zeta": [v.real, v.imag], "method": args.method}) + "\n", EXIT_OK
    if args.t is None:
        raise UsageError("give --t or --s")
    return zeta.z_function(args.t).to_json() + "\n", EXIT_OK


def cmd_zeta_zeros(args):
    if args.format == "csv":
        return zeta.z_samples_csv(2.0, args.T, args.step), EXIT_OK
    return zeta.count_sign_changes(args.T, args.step).to_json() + "\n", EXIT_OK


# -- parser -----------------------------------------------------------------------

def _globals(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=d(0), help="RNG seed (default 0)")
    parser.add_argument("--format", choices=["csv", "json"], default=d(None))
    parser.add_argument("--workers", type=int, default=d(1))
    parser.add_argument("--out", default=d(None), help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="veribench", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({_backend.BACKEND})")
    _globals(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, suppress=True)
    top = p.add_subparsers(dest="command", required=True)

    def group(name, help_):
        g = top.add_parser(name, help=help_).add_subparsers(dest="action", required=True)
        return lambda action, fn, h=None: _leaf(g, action, fn, h)

    def _leaf(g, action, fn, h):
        sp = g.add_parser(action, help=h, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    def scaling_args(sp):
        sp.add_argument("--n-min", type=int, default=10)
        sp.add_argument("--n-max", type=int, default=20)
        sp.add_argument("--trials", type=int, default=3)
        sp.add_argument("--bound", type=int, default=10**9)
        sp.add_argument("--naive-max", type=int, default=20)
        sp.add_argument("--timing", action="store_true", help="median wall times on stderr")

    sub = group("subset-sum", "SUBSET-SUM solvers")
    sp = sub("solve", cmd_subset_solve)
    sp.add_argument("--file", required=True)
    sp.add_argument("--algo", choices=["mitm", "naive", "both"], default="mitm")
    sp = sub("gen", cmd_subset_gen)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bound", type=int, default=10**9)
    sp.add_argument("--solvable", action="store_true")
    scaling_args(sub("bench", _scaling, "naive vs meet-in-the-middle comparison counts"))

    sub = group("match", "bipartite matching")
    sp = sub("solve", cmd_match_solve)
    sp.add_argument("--file", required=True)
    sp.add_argument("--profiles", action="store_true", help="input is a preference-profile file")
    sp = sub("gen", cmd_match_gen)
    sp.add_argument("--left", type=int, required=True)
    sp.add_argument("--right", type=int, required=True)
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--profiles", action="store_true")
    sp.add_argument("--alphabet", default="abcde")

    sub = group("collatz", "Collatz shortcut map")
    sp = sub("trace", cmd_collatz_trace)
    sp.add_argument("n", type=int)
    sp.add_argument("--max-steps", type=int, default=10**6)
    sp = sub("verify", cmd_collatz_verify)
    sp.add_argument("lo", type=int)
    sp.add_argument("hi", type=int)
    sp.add_argument("--budget", type=int, default=10**5)
    sp = sub("realize", cmd_collatz_realize)
    sp.add_argument("bits", help="parity prefix, e.g. 1101001000")
    sp = sub("drift", cmd_collatz_drift)
    sp.add_argument("--samples", type=int, default=10**4)
    sp.add_argument("--bits", type=int, default=64)

    sub = group("topswops", "reverse-card-shuffling")
    sp = sub("run", cmd_topswops_run)
    sp.add_argument("deck", help="e.g. 5732416, or comma-separated for n >= 10")
    sp = sub("table", cmd_topswops_table)
    sp.add_argument("--max-n", type=int, default=10)
    sp.add_argument("--allow-slow", action="store_true", help="permit n = 11")

    sub = group("nt", "number-theory checks")
    sp = sub("mertens", cmd_nt_mertens)
    sp.add_argument("N", type=int)
    sp.add_argument("--c", type=float, default=None, help="check |M(n)| <= c sqrt(n) ln n")
    sp.add_argument("--stride", type=int, default=1)
    sp = sub("pi", cmd_nt_pi)
    sp.add_argument("N", type=int)
    sp.add_argument("--checkpoints", type=int, nargs="*")
    sp = sub("goldbach", cmd_nt_goldbach)
    sp.add_argument("lo", type=int)
    sp.add_argument("hi", type=int)
    sp.add_argument("--witnesses", action="store_true")
    sp = sub("chen", cmd_nt_chen)
    sp.add_argument("lo", type=int)
    sp.add_argument("hi", type=int)
    sp = sub("twins", cmd_nt_twins)
    sp.add_argument("N", type=int)

    sub = group("zeta", "zeta function and zero counting")
    sp = sub("eval", cmd_zeta_eval)
    sp.add_argument("--t", type=float)
    sp.add_argument("--s")
    sp.add_argument("--method", choices=["em", "integral"], default="em")
    sp = sub("zeros", cmd_zeta_zeros)
    sp.add_argument("--T", type=float, default=100.0)
    sp.add_argument("--step", type=float, default=0.05)
    return p


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.workers < 1:
        print("error: --workers must be >= 1", file=stderr)
        return EXIT_USAGE
    try:
        args.stderr = stderr
        text, status = args.func(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ValueError, MemoryError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.out:
        Path(args.out).write_text(text)
    else:
        stdout.write(text)
    return status


def main():
    sys.exit(run_cli())
