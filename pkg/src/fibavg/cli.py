"""Batch command-line surface over the library.

Output discipline: results go to stdout (decimal, newline-terminated, no
thousands separators), diagnostics to stderr only.  Exit codes: 0 success,
1 a violated audit or falsified identity, 2 usage error, 3 I/O or
checkpoint error, 130 interrupted (checkpoint flushed first).
"""

import argparse
import json
import os
import sys

from . import __version__
from .families import family_235, family_235_grid, family_235_lucas, family_pow2, tower
from .identities import IDENTITY_IDS, run_identity
from .ranks import lucas_rank, pisano_period, rank_of_apparition
from .scanner import (
    KIND_FIB,
    KIND_LUCAS,
    CheckpointError,
    hit_jsonl,
    is_fib_hit,
    is_lucas_hit,
    load_checkpoint,
    odd_prime_audit,
    pair_csv_header,
    pair_csv_line,
    pair_jsonl,
    pair_scan,
    save_checkpoint,
    scan,
    squarefree_audit,
)
from .wss import wss_scan

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERRUPT = 130


def _resolve_workers(cli_value: int | None) -> int:
    if cli_value is not None:
        if cli_value < 1:
            raise ValueError(f"workers must be >= 1, got {cli_value}")
        return cli_value
    env = os.environ.get("FIBAVG_WORKERS")
    if env:
        workers = int(env)
        if workers < 1:
            raise ValueError(f"FIBAVG_WORKERS must be >= 1, got {env}")
        return workers
    return os.cpu_count() or 1


def cmd_hit(args) -> int:
    kind = KIND_LUCAS if args.lucas else KIND_FIB
    verdict = is_lucas_hit(args.n) if args.lucas else is_fib_hit(args.n)
    if args.format == "jsonl":
        print(json.dumps({"n": args.n, "kind": kind, "hit": verdict}))
    else:
        print("yes" if verdict else "no")
    return EXIT_OK


def cmd_scan(args) -> int:
    kind = KIND_LUCAS if args.lucas else KIND_FIB
    workers = _resolve_workers(args.workers)
    resume = None
    if args.checkpoint and os.path.exists(args.checkpoint):
        resume = load_checkpoint(args.checkpoint)

    def flush(cp) -> None:
        if args.checkpoint:
            save_checkpoint(cp, args.checkpoint)

    k = 1
    try:
        for hit in scan(kind, args.lo, args.hi, resume=resume, workers=workers, checkpoint_cb=flush):
            if args.format == "bfile":
                print(f"{k} {hit.n}")
                k += 1
            elif args.format == "jsonl":
                print(hit_jsonl(hit))
            else:
                print(hit.n)
    except KeyboardInterrupt:
        # the callback already flushed the last settled block
        print("scan interrupted; latest checkpoint retained", file=sys.stderr)
        return EXIT_INTERRUPT
    return EXIT_OK


def cmd_pairs(args) -> int:
    workers = _resolve_workers(args.workers)
    if args.format == "csv":
        print(pair_csv_header())
    for pair in pair_scan(args.t, args.lo, args.hi, workers=workers):
        if args.format == "csv":
            print(pair_csv_line(pair))
        elif args.format == "jsonl":
            print(pair_jsonl(pair))
        else:
            print(f"{pair.n} {pair.n + pair.t}")
    return EXIT_OK


def cmd_audit_odd_primes(args) -> int:
    report = odd_prime_audit(args.to)
    if args.format == "jsonl":
        print(
            json.dumps(
                {
                    "audit": "odd-primes",
                    "to": report.hi,
                    "primes_checked": report.primes_checked,
                    "violations": report.violations,
                }
            )
        )
    else:
        for p in report.violations:
            print(f"violation {p}")
        print(f"checked {report.primes_checked} odd primes up to {report.hi}: {len(report.violations)} violations")
    return EXIT_OK if report.ok() else EXIT_VIOLATION


def cmd_audit_squarefree(args) -> int:
    report = squarefree_audit(args.to)
    if args.format == "jsonl":
        for n, fac in report.odd_hits:
            print(json.dumps({"n": n, "factors": [list(pe) for pe in fac.factors], "squarefree": fac.is_squarefree()}))
    else:
        for n, fac in report.odd_hits:
            shown = " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in fac.factors) or "1"
            print(f"{n} = {shown}")
        print(f"odd hits up to {report.hi}: {len(report.odd_hits)}, violations: {len(report.violations)}")
    return EXIT_OK if report.ok() else EXIT_VIOLATION


def cmd_family(args) -> int:
    if args.theorem == "33":
        if args.alpha_max is None and args.limit is None:
            raise ValueError("family --theorem 33 needs --alpha-max or --limit")
        if args.alpha_max is not None:
            indices = family_pow2(args.alpha_max)
        else:
            indices = []
            alpha = 0
            while 3 * 2 ** (alpha + 3) <= args.limit:
                alpha += 1
            if alpha:
                indices = family_pow2(alpha - 1)
    else:
        build = family_235 if args.theorem == "35" else family_235_lucas
        exponents = (args.alpha, args.beta, args.gamma)
        if args.limit is not None:
            indices = family_235_grid(args.limit, lucas=args.theorem == "36")
        elif all(v is not None for v in exponents):
            indices = [build(*exponents)]
        else:
            raise ValueError(f"family --theorem {args.theorem} needs --alpha/--beta/--gamma or --limit")
    kind = KIND_LUCAS if args.theorem == "36" else KIND_FIB
    for n in indices:
        if args.format == "jsonl":
            print(json.dumps({"theorem": args.theorem, "n": n, "kind": kind, "verified": True}))
        else:
            print(n)
    return EXIT_OK


def cmd_tower(args) -> int:
    for element in tower(args.depth):
        if args.format == "jsonl":
            print(json.dumps({"depth": element.depth, "value": element.value}))
        else:
            print(f"{element.depth} {element.value}")
    return EXIT_OK


def cmd_rank(args) -> int:
    rho = rank_of_apparition(args.m)
    if args.format == "jsonl":
        print(json.dumps({"m": args.m, "rho": rho}))
    else:
        print(rho)
    return EXIT_OK


def cmd_pisano(args) -> int:
    period = pisano_period(args.m)
    if args.format == "jsonl":
        print(json.dumps({"m": args.m, "pisano": period}))
    else:
        print(period)
    return EXIT_OK


def cmd_lucas_rank(args) -> int:
    sigma = lucas_rank(args.p, args.power)
    if args.format == "jsonl":
        print(json.dumps({"p": args.p, "power": args.power, "sigma": sigma}))
    else:
        print("none" if sigma is None else sigma)
    return EXIT_OK


def cmd_wss(args) -> int:
    result = wss_scan(args.lo, args.hi, keep_records=args.emit_all)
    if args.emit_all:
        for rec in result.records or []:
            print(json.dumps({"p": rec.p, "eps": rec.eps, "residue": rec.residue, "witness": rec.is_witness}))
        return EXIT_OK
    if args.format == "jsonl":
        print(
            json.dumps(
                {
                    "lo": result.lo,
                    "hi": result.hi,
                    "primes_tested": result.primes_tested,
                    "witnesses": [{"p": r.p, "eps": r.eps, "residue": r.residue} for r in result.witnesses],
                }
            )
        )
    else:
        for rec in result.witnesses:
            print(f"witness {rec.p}")
        print(f"tested {result.primes_tested} odd primes in [{result.lo}, {result.hi}]: {len(result.witnesses)} witnesses")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        lo_text, hi_text = args.range.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise ValueError(f"--range must be LO:HI, got {args.range!r}") from exc
    report = run_identity(args.identity, lo, hi, samples=args.samples, seed=args.seed)
    print(json.dumps(report.to_dict()))
    return EXIT_OK if report.ok() else EXIT_VIOLATION


def _add_format(parser, choices=("human", "jsonl"), default="human") -> None:
    parser.add_argument("--format", choices=list(choices), default=default, help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibavg",
        description="Decide, enumerate and audit indices n for which the average of the first n Fibonacci (or Lucas) numbers is an integer.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("hit", help="decide one index")
    p.add_argument("n", type=int)
    p.add_argument("--lucas", action="store_true", help="test the Lucas average instead")
    _add_format(p)
    p.set_defaults(func=cmd_hit)

    p = sub.add_parser("scan", help="enumerate hits in a range")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--lucas", action="store_true")
    p.add_argument("--checkpoint", metavar="PATH", help="resume from / write checkpoints to PATH")
    p.add_argument("--workers", type=int, default=None, help="parallel workers (default: FIBAVG_WORKERS or CPU count)")
    _add_format(p, ("human", "jsonl", "bfile"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("pairs", help="find n with both n and n+t hits")
    p.add_argument("--t", type=int, required=True, help="offset between the pair members")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    _add_format(p, ("human", "jsonl", "csv"))
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("audit", help="theorem-scale audits")
    audit_sub = p.add_subparsers(dest="audit_kind", metavar="kind")
    ap = audit_sub.add_parser("odd-primes", help="no odd prime may be a hit")
    ap.add_argument("--to", type=int, required=True)
    _add_format(ap)
    ap.set_defaults(func=cmd_audit_odd_primes)
    ap = audit_sub.add_parser("squarefree", help="every odd hit must be square-free")
    ap.add_argument("--to", type=int, required=True)
    _add_format(ap)
    ap.set_defaults(func=cmd_audit_squarefree)

    p = sub.add_parser("family", help="generate verified constructive families")
    p.add_argument("--theorem", choices=["33", "35", "36"], required=True)
    p.add_argument("--alpha-max", dest="alpha_max", type=int, default=None)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--beta", type=int, default=None)
    p.add_argument("--gamma", type=int, default=None)
    p.add_argument("--limit", type=int, default=None, help="emit every family member <= limit")
    _add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tower", help="self-referential index tower v -> F_(3v)")
    p.add_argument("--depth", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("rank", help="rank of apparition of m")
    p.add_argument("m", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("pisano", help="period of the Fibonacci sequence mod m")
    p.add_argument("m", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_pisano)

    p = sub.add_parser("lucas-rank", help="Lucas entry point of an odd prime power")
    p.add_argument("p", type=int)
    p.add_argument("--power", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_lucas_rank)

    p = sub.add_parser("wss", help="Wall-Sun-Sun prime search")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--emit-all", dest="emit_all", action="store_true", help="emit one JSONL record per prime")
    _add_format(p)
    p.set_defaults(func=cmd_wss)

    p = sub.add_parser("verify", help="run one identity check over a range")
    p.add_argument("--identity", choices=sorted(IDENTITY_IDS), required=True)
    p.add_argument("--range", required=True, metavar="LO:HI")
    p.add_argument("--samples", type=int, default=0, help="extra randomized large-index samples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return int(exc.code or 0)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return EXIT_INTERRUPT
    except CheckpointError as exc:
        print(f"checkpoint error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
