"""Command-line front door.

Subcommands wrap the library one call deep: matrix I/O and argument
handling live here, every computation lives in the library modules.
Results print in centered form {-1, 0, 1} unless --mod3-classes asks
for residue classes {0, 1, 2}; machine-readable records carry a
`schema` field so downstream tooling can pin formats.

Exit status is 0 on success and 1 with a single-line `error: ...`
diagnostic on any failure.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import List, Optional

from .circuit_search import (
    build_partial_table,
    eval_circuit,
    render_circuit,
    search_min_circuit,
    verify_circuit,
)
from .experiments import bench, exact_zero_count, montecarlo_zero, pi_matrix
from .permanent import (
    MatrixF3,
    perm_mod3_fast,
    perm_mod3_parallel,
    perm_naive,
    perm_ryser_reference,
    resolve_jobs,
)

PERM_SCHEMA = "tritperm.perm.v1"
MC_SCHEMA = "tritperm.mc.v1"
BENCH_SCHEMA = "tritperm.bench.v1"

MC_COLUMNS = ["schema", "n", "trials", "seed", "zero_count", "p_hat", "stderr"]

BENCH_COLUMNS = [
    "schema",
    "method",
    "model",
    "n",
    "seconds_mean",
    "reps",
    "fit_constant",
    "residual",
    "fit_rms_rel",
]


def load_matrix_text(text: str) -> MatrixF3:
    """Parse the plain matrix format: a size line, then n rows of n ints."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("matrix file is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the matrix size, got {lines[0]!r}")
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got {n}")
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} data lines, found {len(lines) - 1}")
    rows = []
    for row_no, line in enumerate(lines[1 : n + 1], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ValueError(f"row {row_no} has {len(tokens)} entries, expected {n}")
        try:
            rows.append([int(tok) for tok in tokens])
        except ValueError:
            raise ValueError(f"row {row_no} has a non-integer entry: {line!r}")
    return MatrixF3(rows)


def dump_matrix_text(m: MatrixF3, classes: bool = False) -> str:
    """Inverse of load_matrix_text; entries centered or as {0,1,2}."""
    out = [str(m.n)]
    for row in m.rows:
        vals = [v % 3 if classes else v for v in row]
        out.append(" ".join(str(v) for v in vals))
    return "\n".join(out) + "\n"


def _print_value(value: int, classes: bool) -> int:
    return value % 3 if classes else value


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_perm(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        m = load_matrix_text(fh.read())
    jobs = resolve_jobs(args.jobs)
    t0 = time.perf_counter()
    if args.method == "naive":
        value = perm_naive(m)
    elif args.method == "ryser":
        value = perm_ryser_reference(m)
    elif jobs > 1:
        value = perm_mod3_parallel(m, jobs)
    else:
        value = perm_mod3_fast(m)
    elapsed = time.perf_counter() - t0
    shown = _print_value(value, args.mod3_classes)
    print(shown)
    record = {
        "schema": PERM_SCHEMA,
        "n": m.n,
        "method": args.method,
        "jobs": jobs,
        "value": shown,
        "elapsed_seconds": elapsed,
    }
    print(json.dumps(record))
    return 0


def cmd_count_exact(args) -> int:
    r = exact_zero_count(args.n)
    print(f"n: {r.n}")
    print(f"z: {r.z}")
    print(f"total: {r.total}")
    print(f"ratio: {r.ratio:.6f}")
    print(f"plus_ones: {r.plus_ones}")
    print(f"minus_ones: {r.minus_ones}")
    return 0


def _emit_csv(columns: List[str], rows: List[dict], out: Optional[str]) -> None:
    if out:
        fresh = not os.path.exists(out) or os.path.getsize(out) == 0
        with open(out, "a", encoding="utf-8", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=columns)
            if fresh:
                w.writeheader()
            w.writerows(rows)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns)
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())


def cmd_montecarlo(args) -> int:
    jobs = resolve_jobs(args.jobs)
    _log(f"# jobs={jobs}")
    r = montecarlo_zero(args.n, args.trials, seed=args.seed, jobs=jobs)
    row = {
        "schema": MC_SCHEMA,
        "n": r.n,
        "trials": r.trials,
        "seed": r.seed,
        "zero_count": r.zero_count,
        "p_hat": f"{r.p_hat:.9f}",
        "stderr": f"{r.stderr:.9f}",
    }
    _emit_csv(MC_COLUMNS, [row], args.out)
    return 0


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    jobs = resolve_jobs(args.jobs)
    _log(f"# jobs={jobs}")
    results = bench(
        methods,
        args.n_min,
        args.n_max,
        reps=args.reps,
        step=args.step,
        seed=args.seed,
        jobs=jobs,
    )
    rows = []
    for res in results:
        for row, residual in zip(res.rows, res.residuals):
            rows.append(
                {
                    "schema": BENCH_SCHEMA,
                    "method": res.method,
                    "model": res.model,
                    "n": row.n,
                    "seconds_mean": f"{row.seconds:.9f}",
                    "reps": row.reps,
                    "fit_constant": f"{res.fit_constant:.6e}",
                    "residual": f"{residual:.9f}",
                    "fit_rms_rel": f"{res.rms_rel:.6f}" if res.rms_rel is not None else "",
                }
            )
    _emit_csv(BENCH_COLUMNS, rows, args.out)
    return 0


def cmd_pi_matrix(args) -> int:
    m = pi_matrix(args.n, skip_integer_part=args.skip_integer_part)
    text = dump_matrix_text(m, classes=args.mod3_classes)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_circuits(args) -> int:
    ops = ("add", "sub", "mul", "div") if args.op == "all" else (args.op,)
    for i, op in enumerate(ops):
        if i:
            print()
        table = build_partial_table(op)
        circuit = search_min_circuit(table)
        if circuit is None:
            raise ValueError(f"no circuit found for {op} within the gate budget")
        mag_table, sgn_table = eval_circuit(circuit)
        print(f"op: {op}")
        print(f"gates: {circuit.gate_count}")
        print(render_circuit(circuit))
        print(f"mag table: {mag_table:#06x} (care {table.mag_care:#06x} value {table.mag_value:#06x})")
        print(f"sgn table: {sgn_table:#06x} (care {table.sgn_care:#06x} value {table.sgn_value:#06x})")
        print(f"verified: {verify_circuit(circuit, table)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritperm",
        description="Matrix permanents over GF(3) on packed trit planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm", help="permanent mod 3 of a matrix file")
    p.add_argument("file", help="matrix file: size line, then n rows of n integers")
    p.add_argument("--method", choices=["naive", "ryser", "mod3"], default="mod3")
    p.add_argument("--jobs", type=int, default=None, help="worker threads (mod3 method)")
    p.add_argument("--mod3-classes", action="store_true", help="print {0,1,2} instead of {-1,0,1}")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("count-exact", help="exact zero-permanent census (n <= 4)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count_exact)

    p = sub.add_parser("montecarlo", help="zero-permanent frequency over random matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", default=None, help="append the CSV row to this file")
    p.set_defaults(func=cmd_montecarlo)

    p = sub.add_parser("bench", help="time the engines and fit growth constants")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--methods", default="reference,fast", help="comma list: reference,fast,parallel")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", default=None, help="append CSV rows to this file")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("pi-matrix", help="write the n-by-n pi-digit matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None, help="write the matrix file here (default stdout)")
    p.add_argument("--skip-integer-part", action="store_true", help="start from the first fractional digit")
    p.add_argument("--mod3-classes", action="store_true", help="entries as {0,1,2} instead of {-1,0,1}")
    p.set_defaults(func=cmd_pi_matrix)

    p = sub.add_parser("circuits", help="search minimal circuits for the packed ops")
    p.add_argument("--op", choices=["add", "sub", "mul", "div", "all"], default="all")
    p.set_defaults(func=cmd_circuits)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
