"""
Command line interface.

    gadgetsynth compile --input op.json --strategy sets --out c.qasm --stats s.json [--verify]
    gadgetsynth bench --dir operators/ --out results.csv
    gadgetsynth check corollary54|corollary55 [--sample N]
    gadgetsynth make-suite --dir operators/

Exit codes: 0 ok, 1 compile or verification failure, 2 usage or IO error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .bench import mean_reductions, run_bench, synthetic_suite_dir, write_csv, write_synthetic_suite
from .checks import check_corollary_54, check_corollary_55, sample_corollary_55
from .io import OperatorFormatError, emit_qasm, read_operator
from .naive import MODES
from .oracle import equiv_up_to_phase, unitary_of_circuit, unitary_of_terms
from .pipeline import STRATEGIES, compile_terms, resequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
VERIFY_MAX_QUBITS = 10

log = logging.getLogger("gadgetsynth")


def cmd_compile(args) -> int:
    try:
        n, terms = read_operator(args.input)
    except FileNotFoundError:
        print(f"error: no such file: {args.input}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, OperatorFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.verify and n > VERIFY_MAX_QUBITS:
        print(f"error: --verify supports at most {VERIFY_MAX_QUBITS} qubits", file=sys.stderr)
        return EXIT_USAGE
    try:
        circuit, report = compile_terms(terms, args.strategy, args.mode, n_qubits=n)
    except ValueError as e:
        print(f"error: compilation failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    stats = report.to_dict()
    if args.verify:
        ok = equiv_up_to_phase(unitary_of_circuit(circuit), unitary_of_terms(resequence(terms), n), 1e-9)
        stats["verified"] = ok
        print(f"verify: {'pass' if ok else 'FAIL'}")
    try:
        if args.out:
            emit_qasm(circuit, args.out)
        if args.stats:
            with open(args.stats, "w") as fh:
                json.dump(stats, fh, indent=2)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(
        f"{args.strategy}: cx_count={report.cx_count} cx_depth={report.cx_depth} "
        f"sets={report.set_count} clifford_cx={report.clifford_cx_total}"
    )
    if args.verify and not stats["verified"]:
        return EXIT_FAIL
    return EXIT_OK


def cmd_bench(args) -> int:
    directory = args.dir or synthetic_suite_dir()
    rows, failures = run_bench(directory, args.mode)
    if not rows and not failures:
        print(f"error: no operator files in {directory}", file=sys.stderr)
        return EXIT_USAGE
    try:
        write_csv(rows, args.out)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    count, depth = mean_reductions(rows)
    print(f"{len(rows) // 2} files: mean CX count reduction {count:.1f}%, mean CX depth reduction {depth:.1f}%")
    for name, msg in failures:
        print(f"failed: {name}: {msg}", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_check(args) -> int:
    if args.which == "corollary54":
        passing = check_corollary_54(3)
        print(passing.summary())
        failing = check_corollary_54(4)
        print(failing.summary().splitlines()[0] + " (expected: violations exist)")
        if failing.violations:
            print("  example m=4 violation: " + " ".join(failing.violations[0]))
        return EXIT_OK if passing.passed and not failing.passed else EXIT_FAIL
    report = sample_corollary_55(args.sample) if args.sample else check_corollary_55()
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_make_suite(args) -> int:
    for p in write_synthetic_suite(args.dir, args.files, args.seed):
        print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gadgetsynth", description=__doc__.splitlines()[1])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile one operator file")
    p.add_argument("--input", required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="sets")
    p.add_argument("--mode", choices=MODES, default="ladder")
    p.add_argument("--out", help="OpenQASM 2.0 output path")
    p.add_argument("--stats", help="JSON statistics output path")
    p.add_argument("--verify", action="store_true", help=f"dense check, n <= {VERIFY_MAX_QUBITS}")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("bench", help="compare strategies over a directory of operators")
    p.add_argument("--dir", help="operator directory (default: bundled synthetic suite)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--mode", choices=MODES, default="ladder")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("check", help="run an enumeration check")
    p.add_argument("which", choices=("corollary54", "corollary55"))
    p.add_argument("--sample", type=int, default=0, help="random generator sets instead of full enumeration")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("make-suite", help="write the synthetic UCCSD-like suite")
    p.add_argument("--dir", required=True)
    p.add_argument("--files", type=int, default=10)
    p.add_argument("--seed", type=int, default=2020)
    p.set_defaults(func=cmd_make_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
