"""Command-line front end.

Exit codes: 0 success, 1 verification failure or golden-table mismatch,
2 usage error.  Subcommands::

    multirank coeffs --family cubic --n-max 5
    multirank verify multi-over --t 3 --n-max 20
    multirank table 2 --check
    multirank search --c 2 --d 3 --mod 5 --n-max 200

Family flags use ``kind`` or ``kind:p1,p2,...``: colored-plain:S,
colored-over:S, colored-pod:S, cubic, overcubic, generalized:C,L,D,M and
fourcolor:C,D.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from multirank import __version__
from multirank.counting import counting_series
from multirank.cyclotomic import is_odd_prime
from multirank.errors import UsageError
from multirank.families import parse_family
from multirank.partitions import format_partition
from multirank.verify import (
    TABLE3,
    check_table1,
    check_table2,
    check_table3,
    search_aij,
    search_general,
    verify_4c,
    verify_garvan_multipartitions,
    verify_jtp,
    verify_multi_over,
    verify_multi_pod,
    verify_newmulti,
    verify_overcubic,
    verify_reti_cubic,
    verify_vector_crank,
)

FAMILY_HELP = (
    "family flags: colored-plain:S, colored-over:S, colored-pod:S, cubic, overcubic,\n"
    "generalized:C,L,D,M (1/((q^C;q^C)^L (q^D;q^D)^M)) and fourcolor:C,D"
)

THEOREMS = (
    "multi-over",
    "multi-pod",
    "newmulti",
    "garvan-1",
    "garvan-2",
    "reti-cubic",
    "overcubic",
    "fourcolor",
    "vector-crank",
    "jtp",
)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multirank",
        description="Partition multiranks, cranks and their congruences.",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"multirank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", type=Path, help="write the report here instead of stdout")

    p = sub.add_parser("coeffs", help="dump counting-function coefficients")
    p.add_argument("--family", required=True, help="e.g. cubic, colored-over:2, generalized:1,2,2,2")
    p.add_argument("--n-max", type=_non_negative, required=True)
    output_flags(p)

    p = sub.add_parser("verify", help="run a theorem check")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--t", type=int, help="prime modulus (default depends on the theorem)")
    p.add_argument("--family", choices=("plain", "over", "pod"), default="plain", help="base family for newmulti")
    p.add_argument("--c", type=_positive, default=1)
    p.add_argument("--d", type=_positive, default=2)
    p.add_argument("--n-max", type=_non_negative, default=20)
    p.add_argument("--brute-max", type=int, help="largest weight enumerated exhaustively")
    p.add_argument("--cyclo-max", type=int, help="largest weight checked over Z[zeta_t]")
    output_flags(p)

    p = sub.add_parser("table", help="regenerate the reference tables")
    p.add_argument("table", type=int, choices=(1, 2, 3))
    p.add_argument("--check", action="store_true", help="compare against the embedded golden values")
    p.add_argument("--n-max", type=_non_negative, default=200, help="series depth for table 3")
    output_flags(p)

    p = sub.add_parser("search", help="empirical residue search for p_[c^k d^k](mn + a) = 0 mod m")
    p.add_argument("--c", type=_positive, required=True)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--n-max", type=_non_negative, default=200)
    output_flags(p)
    return parser


def _emit(args, text: str) -> None:
    if args.out:
        args.out.write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _config(args) -> dict:
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items())}


def cmd_coeffs(args) -> int:
    spec = parse_family(args.family)
    series = counting_series(spec, args.n_max)
    if args.format == "json":
        _emit(args, json.dumps([str(c) for c in series]))
    else:
        _emit(args, "\n".join(f"{n} {c}" for n, c in enumerate(series)))
    return 0


def _run_theorem(args):
    name, n = args.theorem, args.n_max
    kw = {"brute_max": args.brute_max, "cyclo_max": args.cyclo_max}
    if name == "multi-over":
        return verify_multi_over(args.t or 3, n, **kw)
    if name == "multi-pod":
        return verify_multi_pod(args.t or 3, n, **kw)
    if name == "newmulti":
        return verify_newmulti(args.t or 3, args.family, n, **kw)
    if name in ("garvan-1", "garvan-2"):
        return verify_garvan_multipartitions(args.t or 5, int(name[-1]), n, **kw)
    if name == "reti-cubic":
        return verify_reti_cubic(n, **kw)
    if name == "overcubic":
        return verify_overcubic(n, **kw)
    if name == "fourcolor":
        return verify_4c(args.c, args.d, n, **kw)
    if name == "vector-crank":
        return verify_vector_crank(args.t or 5, n)
    return verify_jtp(n)


def cmd_verify(args) -> int:
    if args.t is not None and not is_odd_prime(args.t):
        raise UsageError(f"--t {args.t} is not an odd prime")
    report = _run_theorem(args)
    report.config = _config(args)
    _emit(args, report.to_json() if args.format == "json" else report.summary())
    return 0 if report.passed else 1


def _table_rows(args) -> tuple[list[dict], bool]:
    if args.table == 1:
        rows, ok = check_table1()
        return [{"pod_pair": f"({format_partition(a)}, {format_partition(b)})", "multirank": v} for a, b, v in rows], ok
    if args.table == 2:
        rows, ok = check_table2()
        return [
            {"cubic_partition": "{" + f"{format_partition(a, 'r')}, {format_partition(b, 'b')}" + "}", "reti_crank": v}
            for a, b, v in rows
        ], ok
    rows, ok = check_table3(args.n_max)
    return [
        {"type": f"({i},{j})", "c_d": f"({c},{d})", "a_ij": ",".join(map(str, found)),
         "expected": ",".join(map(str, TABLE3[(i, j)]))}
        for (i, j), (c, d), found in rows
    ], ok  # fmt: skip


def cmd_table(args) -> int:
    rows, ok = _table_rows(args)
    if args.format == "json":
        payload = {"table": args.table, "rows": rows}
        if args.check:
            payload["check"] = ok
        _emit(args, json.dumps(payload, sort_keys=True, indent=2))
    else:
        lines = ["  ".join(str(v) for v in row.values()) for row in rows]
        if args.check:
            lines.append(f"check: {'ok' if ok else 'MISMATCH'} ({len(rows)} rows)")
        _emit(args, "\n".join(lines))
    return 0 if ok or not args.check else 1


def cmd_search(args) -> int:
    m = args.mod
    if not is_odd_prime(m) or m < 5:
        raise UsageError(f"--mod {m}: need a prime modulus >= 5")
    result = search_aij(args.c, args.d, m, args.n_max) if m == 5 else search_general(m, args.c, args.d, args.n_max)
    if args.format == "json":
        _emit(args, json.dumps({
            "modulus": m, "c": args.c, "d": args.d, "exponent": result.exponent,
            "n_max": args.n_max, "residues": list(result.residues), "status": result.status,
        }, sort_keys=True))  # fmt: skip
    else:
        k = result.exponent
        _emit(
            args,
            f"# empirical: residues a with p_[{args.c}^{k} {args.d}^{k}]({m}n+a) = 0 mod {m} "
            f"for all coefficients <= {args.n_max}\n{result}",
        )
    return 0


COMMANDS = {"coeffs": cmd_coeffs, "verify": cmd_verify, "table": cmd_table, "search": cmd_search}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"multirank: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
