"""Command-line front end.

Exit codes: 0 success / PASS / PROVEN, 1 honest negative (FAIL, NOT PROVEN,
budget exhausted), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import resource
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import presets
from .certificate import Certificate, CertificateError, check_main, check_singleton, parse_certificate
from .prune import certify_subset, prune_fixed_point, serialize_pruned
from .rauzy import (DEFAULT_MAX_VERTICES, BudgetExceeded, GraphFormatError, GraphMeta,
                    build_full_rauzy, build_psi_graph, deserialize_graph, serialize_graph)
from .search import SearchBudget, count_compatible_squarefree
from .verify import compare_with_oracle
from .words import PeriodicPartialWord, render

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _err(*msg):
    print(*msg, file=sys.stderr)


def _peak_mb() -> float:
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024


def _load_cert(args) -> Certificate:
    if args.cert:
        cert = parse_certificate(Path(args.cert).read_text())
    elif args.preset:
        cert = presets.certificate(args.preset, args.scale)
    else:
        raise UsageError("give --cert FILE or --preset NAME")
    # flags override the file
    if args.k is not None:
        cert.k = args.k
    if args.p is not None:
        cert.p = args.p[0] if isinstance(args.p, list) else args.p
    return cert.validate()


def _build(k, p, mode, max_vertices, seeds=None):
    if mode == "full":
        return build_full_rauzy(k, p, max_vertices), GraphMeta(k, p, "full")
    return build_psi_graph(k, p, mode, seeds=seeds, max_vertices=max_vertices)


def cmd_build_graph(args) -> int:
    if args.k is None or args.p is None:
        raise UsageError("build-graph needs --k and --p")
    k, p = args.k, args.p[0]
    if k < 2 or p < 2:
        raise UsageError("need k >= 2 and p >= 2")
    t0 = time.perf_counter()
    try:
        g, meta = _build(k, p, args.mode, args.max_nodes or DEFAULT_MAX_VERTICES, args.seeds)
    except BudgetExceeded as e:
        _err(f"budget exceeded: {e} stats={e.stats}")
        print("status=budget_exceeded")
        return NEGATIVE
    data = serialize_graph(g, meta)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
    print(f"|V|={g.n_vertices} |A|={g.n_arcs} mode={meta.mode} "
          f"time={time.perf_counter() - t0:.2f}s peak_mem={_peak_mb():.1f}MB",
          file=sys.stdout if args.out else sys.stderr)
    return OK


def _graph_for(args, cert: Certificate):
    if args.graph:
        g, meta = deserialize_graph(Path(args.graph).read_bytes())
        if (meta.k, meta.p) != (cert.k, cert.p):
            raise UsageError(f"graph has k={meta.k} p={meta.p}, certificate has k={cert.k} p={cert.p}")
        return g, meta
    return _build(cert.k, cert.p, args.mode, args.max_nodes or DEFAULT_MAX_VERTICES, args.seeds)


def cmd_prune(args) -> int:
    cert = _load_cert(args)
    try:
        g, meta = _graph_for(args, cert)
    except BudgetExceeded as e:
        _err(f"budget exceeded: {e} stats={e.stats}")
        print("status=budget_exceeded")
        return NEGATIVE
    X = prune_fixed_point(g, cert.pattern_set())
    print(f"|V|={g.n_vertices} |X|={len(X)} sweeps={X.sweeps}")
    if args.out:
        Path(args.out).write_bytes(serialize_pruned(X, g, meta))
    return OK if len(X) else NEGATIVE


def cmd_check_cert(args) -> int:
    cert = _load_cert(args)
    t0 = time.perf_counter()
    report = check_main(cert)
    print(f"k={cert.k} p={cert.p} patterns={len(cert.patterns)} lengths={cert.lengths}")
    for line in report.lines():
        print(line)
    print(f"time={time.perf_counter() - t0:.3f}s")
    return OK if report.passed else NEGATIVE


def cmd_check_singleton(args) -> int:
    if None in (args.C, args.len, args.p, args.x):
        raise UsageError("check-singleton needs --C, --len, --p and --x")
    rep = check_singleton(args.C, args.len, args.p[0], Fraction(args.x))
    print(f"{'PASS' if rep.passed else 'FAIL'} lhs={rep.lhs} slack={rep.slack} (~{float(rep.slack):.6g})")
    return OK if rep.passed else NEGATIVE


def cmd_lower_bound(args) -> int:
    if args.mu:
        if args.k is None:
            raise UsageError("--mu needs --k")
        k, mu = args.k, PeriodicPartialWord.parse(args.mu)
    elif args.preset:
        k, mu = presets.lower_bound(args.preset)
    else:
        raise UsageError("give --mu PATTERN --k K or --preset NAME")
    budget = SearchBudget(args.max_len or 10_000, args.max_nodes or 10**9)
    t0 = time.perf_counter()
    out = count_compatible_squarefree(mu, k, budget, workers=args.threads)
    print(out.summary())
    _err(f"mu={mu!r} k={k} witness={render(out.witness)} time={time.perf_counter() - t0:.3f}s")
    return OK if out.status == "exhausted" else NEGATIVE


def cmd_oracle_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    rows = []
    if args.graph:
        g, meta = deserialize_graph(Path(args.graph).read_bytes())
        rows.append(compare_with_oracle(g, meta.k, meta.p, args.samples, rng))
    else:
        if args.k is None or args.p is None:
            raise UsageError("oracle-verify needs --graph or --k and --p")
        for p in args.p:
            g, _ = build_psi_graph(args.k, p, "exhaustive")
            rows.append(compare_with_oracle(g, args.k, p, args.samples, rng))
    for rep in rows:
        print(rep.line())
        for line in rep.diff_lines():
            print(line)
    return OK if all(r.ok for r in rows) else NEGATIVE


def cmd_prove(args) -> int:
    cert = _load_cert(args)
    ps = cert.pattern_set()
    print(f"k={cert.k} p={cert.p} patterns: {len(cert.patterns)} from {cert.sources or 'literal list'}")
    try:
        g, meta = _graph_for(args, cert)
    except BudgetExceeded as e:
        print(f"NOT PROVEN: graph construction exceeded its budget ({e}; {e.stats})")
        return NEGATIVE
    print(f"graph: mode={meta.mode} |V|={g.n_vertices} |A|={g.n_arcs}")
    X = prune_fixed_point(g, ps)
    print(f"pruned subgraph: |X|={len(X)} after {X.sweeps} sweeps")
    report = check_main(cert)
    for line in report.lines():
        print("  " + line)
    if not len(X):
        print("NOT PROVEN: pruned subgraph empty")
        return NEGATIVE
    if not certify_subset(g, X.mask, ps):
        print("NOT PROVEN: independent recount of the pruned subgraph failed")
        return NEGATIVE
    if not report.passed:
        print("NOT PROVEN: certificate inequality fails")
        return NEGATIVE
    print("PROVEN: for any mu in W^omega, infinitely many square-free words "
          f"over {cert.k} letters are compatible with mu")
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--p", type=int, nargs="+")
    common.add_argument("--mode", choices=["exhaustive", "reachable", "full"], default="exhaustive")
    common.add_argument("--seeds", type=int, help="seed words for reachable mode (default k)")
    common.add_argument("--graph")
    common.add_argument("--cert")
    common.add_argument("--preset", help="six | quaternary | ternary")
    common.add_argument("--scale", choices=["paper", "desk"], default="paper")
    common.add_argument("--out")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--max-nodes", type=int, help="vertex budget (graphs) or node budget (search)")
    common.add_argument("--max-len", type=int)

    parser = argparse.ArgumentParser(prog="sqfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build-graph", parents=[common]).set_defaults(func=cmd_build_graph)
    sub.add_parser("prune", parents=[common]).set_defaults(func=cmd_prune)
    sub.add_parser("check-cert", parents=[common]).set_defaults(func=cmd_check_cert)
    single = sub.add_parser("check-singleton", parents=[common])
    single.add_argument("--C", type=int)
    single.add_argument("--len", type=int)
    single.add_argument("--x")
    single.set_defaults(func=cmd_check_singleton)
    lower = sub.add_parser("lower-bound", parents=[common])
    lower.add_argument("--mu", help="periodic partial word, e.g. '(0.1.2.3.)' or '00(.)'")
    lower.set_defaults(func=cmd_lower_bound)
    oracle = sub.add_parser("oracle-verify", parents=[common])
    oracle.add_argument("--samples", type=int, default=50)
    oracle.add_argument("--seed", type=int, default=0)
    oracle.set_defaults(func=cmd_oracle_verify)
    sub.add_parser("prove", parents=[common]).set_defaults(func=cmd_prove)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except (UsageError, CertificateError, GraphFormatError, KeyError, ValueError, OSError) as e:
        _err(f"error: {e}")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
