"""Command-line front end.

Exit codes: 0 success, 2 usage or malformed input, 3 a check or verification
failed, 4 search exhausted or hit its capacity/time limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .checks import SUITES
from .dyck import MAX_ENUM_K, enumerate_dyck, stat_brute
from .errors import CapacityError, DomainError
from .formulas import stat
from .search import WORKERS_ENV, SearchTimeout, default_workers, search_witness
from .wreath import Permutation, dump_witness, load_witness, save_witness, verify_witness, wreath_from_permutation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CHECK = 3
EXIT_EXHAUSTED = 4


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_enumerate(args) -> int:
    if not 0 <= args.k <= MAX_ENUM_K:
        return _fail(f"--k must be in 0..{MAX_ENUM_K}", EXIT_USAGE)
    words = [p.word for p in enumerate_dyck(args.k)]
    if args.format == "json":
        print(json.dumps(words))
    else:
        for w in words:
            print(w)
    return EXIT_OK


def cmd_stat(args) -> int:
    k, m, l = args.k, args.m, args.l
    if k < 0:
        return _fail("--k must be non-negative", EXIT_USAGE)
    if l is not None and m is None:
        return _fail("--l requires --m", EXIT_USAGE)
    if args.method != "formula" and k > MAX_ENUM_K:
        return _fail(f"brute force needs --k <= {MAX_ENUM_K}", EXIT_USAGE)
    ms = range(2 * k + 1) if m is None else [m]
    cells = []
    for mm in ms:
        ls = range(mm + 1) if l is None else [l]
        for ll in ls:
            if not 0 <= ll <= mm <= 2 * k:
                return _fail(f"need 0 <= l <= m <= 2k, got k={k}, m={mm}, l={ll}", EXIT_USAGE)
            cells.append((mm, ll))

    both = args.method == "both"
    header = ["k", "m", "l", "value"] + (["value_brute", "match"] if both else [])
    rows = []
    mismatch = False
    for mm, ll in cells:
        if args.method == "brute":
            rows.append([k, mm, ll, stat_brute(k, mm, ll)])
            continue
        value = stat(k, mm, ll)
        if both:
            brute = stat_brute(k, mm, ll)
            match = value == brute
            mismatch |= not match
            rows.append([k, mm, ll, value, brute, "match" if match else "MISMATCH"])
        else:
            rows.append([k, mm, ll, value])

    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif args.format == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows]))
    else:
        for r in rows:
            line = f"N_{r[0]}({r[1]},{r[2]}) = {r[3]}"
            if both:
                line += f"  brute {r[4]}  {r[5]}"
            print(line)
    return EXIT_CHECK if mismatch else EXIT_OK


def cmd_check(args) -> int:
    failure = SUITES[args.suite](args.max_k)
    if failure is None:
        print(f"PASS {args.suite} (max k {args.max_k})")
        return EXIT_OK
    print(f"FAIL {args.suite}: {failure}")
    return EXIT_CHECK


def cmd_wreath_search(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    try:
        result = search_witness(
            args.k,
            args.variant,
            deterministic=args.deterministic,
            workers=workers,
            time_limit=args.time_limit,
        )
    except DomainError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except SearchTimeout as exc:
        print(json.dumps({"status": "timeout", "stats": exc.stats.as_dict()}), file=sys.stderr)
        return EXIT_EXHAUSTED
    except CapacityError as exc:
        return _fail(str(exc), EXIT_EXHAUSTED)
    if result.exhausted:
        print(json.dumps({"status": "exhausted", "stats": result.stats.as_dict()}), file=sys.stderr)
        return EXIT_EXHAUSTED
    if args.out:
        save_witness(result.witness, args.variant, args.out)
        print(json.dumps({"status": "found", "out": args.out, "stats": result.stats.as_dict()}), file=sys.stderr)
    else:
        sys.stdout.write(dump_witness(result.witness, args.variant))
    return EXIT_OK


def cmd_wreath_verify(args) -> int:
    try:
        witness, variant = load_witness(args.witness)
    except OSError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except DomainError as exc:
        return _fail(str(exc), EXIT_USAGE)
    verdict = verify_witness(witness, variant)
    if verdict:
        print(f"PASS k={witness.k} variant={variant} ({len(witness.assignments)} permutations)")
        return EXIT_OK
    print(f"FAIL k={witness.k} variant={variant}: {verdict.reason}")
    return EXIT_CHECK


def cmd_wreath_show(args) -> int:
    try:
        perm = Permutation(tuple(int(x) for x in args.perm.split(",")))
        if perm.n != args.n:
            raise DomainError(f"--perm has {perm.n} entries, --n is {args.n}")
        wreath = wreath_from_permutation(perm, args.k)
    except (ValueError, DomainError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    n, k = args.n, args.k
    starts = sorted({((i - 1) * k + 1) % n for i in range(n)})
    for a in starts:
        print("{" + ",".join(str(perm(a + t)) for t in range(k)) + "}")
    assert len(starts) == len(wreath)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyckwreath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list Dyck k-paths in canonical order")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stat", help="interval statistic N_k(m,l): cell, row or triangle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--method", choices=("formula", "brute", "both"), default="formula")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("check", help="run an identity sweep")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-k", type=int, default=6)
    p.set_defaults(func=cmd_check)

    wp = sub.add_parser("wreath", help="wreath witnesses")
    wsub = wp.add_subparsers(dest="wreath_command", required=True)

    p = wsub.add_parser("search", help="search for a witness for n = 2k+1")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=("weak", "strong"), default="weak")
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, help=f"worker processes (default: ${WORKERS_ENV} or 1)")
    p.add_argument("--time-limit", type=float, help="seconds before giving up")
    p.set_defaults(func=cmd_wreath_search)

    p = wsub.add_parser("verify", help="re-check a witness file")
    p.add_argument("--witness", required=True)
    p.set_defaults(func=cmd_wreath_verify)

    p = wsub.add_parser("show", help="print the wreath of one permutation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--perm", required=True, help="comma-separated images pi(0),...,pi(n-1)")
    p.set_defaults(func=cmd_wreath_show)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        return _fail(str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
