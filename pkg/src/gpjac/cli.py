"""Command-line interface.

Exit codes: 0 success, 1 internal inconsistency, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .graph import validate
from .intmatrix import AbelianGroup
from .jacobian import METHODS as JAC_METHODS
from .jacobian import InconsistencyError, jacobian
from .trees import K2_SEQUENCE, K3_EVEN, K3_ODD, K4_SEQUENCE
from .trees import METHODS as TAU_METHODS
from .trees import tau
from .verify import run_verify, summarize

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    """One computed cell.  Big integers travel as decimal strings."""

    n: int
    k: int
    tau: Optional[str]
    invariant_factors: Optional[list[str]]
    free_rank: Optional[int]
    method: str
    elapsed_ms: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))


def group_record(n: int, k: int, group: AbelianGroup, method: str, elapsed_ms: int) -> OutputRecord:
    # free_rank is that of coker(L), which is Jac(G) + Z for a connected graph.
    return OutputRecord(
        n, k, str(group.order), [str(d) for d in group.invariant_factors], 1, method, elapsed_ms
    )


def _elapsed_ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def _check_nk(n: int, k: int) -> None:
    try:
        validate(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_jacobian(args) -> int:
    _check_nk(args.n, args.k)
    t0 = time.perf_counter()
    group = jacobian(args.n, args.k, args.method)
    if args.cross_check:
        other = "laplacian" if args.method != "laplacian" else "companion"
        second = jacobian(args.n, args.k, other)
        if second != group:
            print(f"methods disagree for GP({args.n},{args.k}): {group} vs {second}", file=sys.stderr)
            return EXIT_INCONSISTENT
    elapsed = _elapsed_ms(t0)
    if args.format == "json":
        print(group_record(args.n, args.k, group, args.method, elapsed).to_json())
    else:
        print(group)
    return EXIT_OK


def cmd_tau(args) -> int:
    _check_nk(args.n, args.k)
    t0 = time.perf_counter()
    try:
        value = tau(args.n, args.k, args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    elapsed = _elapsed_ms(t0)
    if args.format == "json":
        print(OutputRecord(args.n, args.k, str(value), None, None, args.method, elapsed).to_json())
    else:
        print(value)
    return EXIT_OK


def table_row(cell: tuple[int, int]) -> OutputRecord:
    n, k = cell
    t0 = time.perf_counter()
    group = jacobian(n, k)
    count = tau(n, k)
    if group.order != count:
        raise InconsistencyError(f"GP({n},{k}): |Jac| = {group.order} but tau = {count}")
    return group_record(n, k, group, "auto", _elapsed_ms(t0))


def compute_table(k: int, n_min: int, n_max: int, jobs: int = 1) -> list[OutputRecord]:
    cells = [(n, k) for n in range(n_min, n_max + 1)]
    for n, _ in cells:
        _check_nk(n, k)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(table_row, cells))
    return [table_row(c) for c in cells]


def render_table(records: Sequence[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "tau", "jacobian"])
        for r in records:
            w.writerow([r.n, r.k, r.tau, "x".join(r.invariant_factors)])
        return buf.getvalue().rstrip("\n")
    lines = ["| n | k | Jac(GP(n,k)) | tau |", "|---|---|---|---|"]
    for r in records:
        group = " ⊕ ".join(f"Z_{d}" for d in r.invariant_factors) or "0"
        lines.append(f"| {r.n} | {r.k} | {group} | {r.tau} |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    records = compute_table(args.k, args.n_min, args.n_max, args.jobs)
    print(render_table(records, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    if args.k_max < 1:
        raise UsageError("--k-max must be at least 1")
    lines, ok = summarize(run_verify(args.n_max, args.k_max, args.jobs))
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_INCONSISTENT


SEQUENCES = {2: {"a": K2_SEQUENCE}, 3: {"a": K3_EVEN, "b": K3_ODD}, 4: {"a": K4_SEQUENCE}}


def sequence_values(k: int, count: int, start: int = 0) -> dict[str, list[int]]:
    return {name: rec.terms(start, count) for name, rec in SEQUENCES[k].items()}


def cmd_sequence(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    try:
        seqs = sequence_values(args.k, args.count, args.start)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps({"k": args.k, "start": args.start,
                          **{name: [str(v) for v in vals] for name, vals in seqs.items()}}))
    else:
        for name, vals in seqs.items():
            print(f"{name}: " + ", ".join(str(v) for v in vals))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpjac",
        description="Jacobian groups and spanning-tree counts of generalized Petersen graphs GP(n,k).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jacobian", help="invariant factors of Jac(GP(n,k))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=JAC_METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the other method and fail on disagreement")
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("tau", help="number of spanning trees of GP(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=TAU_METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("table", help="tau and Jacobian for a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-method consistency sweep")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="integer sequences behind the k = 2, 3, 4 closed forms")
    p.add_argument("--k", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gpjac {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistencyError, ArithmeticError) as exc:
        print(f"gpjac {args.command}: inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
