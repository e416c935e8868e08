"""Synthetic UCCSD-like operators and the strategy comparison harness."""
from __future__ import annotations

import csv
import itertools
import logging
import random
from dataclasses import dataclass
from pathlib import Path

from .io import read_operator, save_operator
from .naive import naive_cx_bound
from .pauli import PauliString, PauliTerm
from .pipeline import compile_terms, resequence

log = logging.getLogger(__name__)

# odd number of Y letters: the strings of one double excitation
DOUBLE_PATTERNS = ["".join(p) for p in itertools.product("XY", repeat=4) if p.count("Y") % 2]
SINGLE_PATTERNS = ["XY", "YX"]

CSV_COLUMNS = [
    "file",
    "n_qubits",
    "n_terms",
    "strategy",
    "cx_count",
    "cx_depth",
    "set_count",
    "clifford_cx_total",
    "wall_time_ms",
    "cx_count_reduction_pct",
    "cx_depth_reduction_pct",
]


def _place(pattern: str, qubits, n: int) -> PauliString:
    return PauliString.from_letters(dict(zip(qubits, pattern)), n)


def uccsd_like_terms(n_qubits: int, n_terms: int, rng: random.Random) -> list[PauliTerm]:
    """
    Terms shaped like compact-encoding UCCSD excitations: each double
    excitation contributes the eight odd-Y strings on four qubits, each
    single excitation the pair XY, YX on two qubits.  Excitations are drawn
    without repetition until ``n_terms`` strings are collected.
    """
    doubles = list(itertools.combinations(range(n_qubits), 4))
    singles = list(itertools.combinations(range(n_qubits), 2))
    rng.shuffle(doubles)
    rng.shuffle(singles)
    terms: list[PauliTerm] = []
    while len(terms) < n_terms and (doubles or singles):
        use_double = doubles and (not singles or rng.random() < 0.8)
        if use_double:
            qubits, patterns = doubles.pop(), DOUBLE_PATTERNS
        else:
            qubits, patterns = singles.pop(), SINGLE_PATTERNS
        t = rng.uniform(-0.2, 0.2)
        for k, pat in enumerate(patterns):
            sign = 1 if k % 2 == 0 else -1
            terms.append(PauliTerm(_place(pat, qubits, n_qubits), -2.0 * sign * t))
    return terms[:n_terms]


def write_synthetic_suite(directory, n_files: int = 10, seed: int = 2020) -> list[Path]:
    """Write the bundled synthetic suite: 8-12 qubits, 50-200 terms per file."""
    rng = random.Random(seed)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k in range(n_files):
        n = rng.randint(8, 12)
        m = rng.randint(50, 200)
        terms = uccsd_like_terms(n, m, rng)
        path = directory / f"uccsd_like_{k:02d}_n{n}_m{len(terms)}.json"
        save_operator(terms, path, n, canonical=False)
        paths.append(path)
    return paths


def synthetic_suite_dir() -> Path:
    return Path(__file__).parent / "data" / "synthetic"


@dataclass
class BenchRow:
    file: str
    n_qubits: int
    n_terms: int
    strategy: str
    cx_count: int
    cx_depth: int
    set_count: int
    clifford_cx_total: int
    wall_time_ms: float
    cx_count_reduction_pct: float | None = None
    cx_depth_reduction_pct: float | None = None
    naive_bound: int | None = None


def reduction(sets_value: float, naive_value: float) -> float:
    """Percentage reduction of ``sets_value`` relative to ``naive_value``."""
    if naive_value == 0:
        return 0.0
    return 100.0 * (1.0 - sets_value / naive_value)


def bench_file(path, mode: str = "ladder") -> list[BenchRow]:
    n, terms = read_operator(path)
    rows = []
    for strategy in ("naive", "sets"):
        _, rep = compile_terms(terms, strategy, mode, n_qubits=n)
        rows.append(
            BenchRow(
                Path(path).name, n, len(terms), strategy, rep.cx_count, rep.cx_depth,
                rep.set_count, rep.clifford_cx_total, 1000.0 * rep.wall_time,
            )
        )
    naive, sets = rows
    naive.naive_bound = naive_cx_bound(resequence(terms))
    for r in rows:
        r.cx_count_reduction_pct = reduction(sets.cx_count, naive.cx_count)
        r.cx_depth_reduction_pct = reduction(sets.cx_depth, naive.cx_depth)
    return rows


def run_bench(directory, mode: str = "ladder") -> tuple[list[BenchRow], list[tuple[str, str]]]:
    """Benchmark every ``*.json`` operator in ``directory``; failures are collected, not raised."""
    rows: list[BenchRow] = []
    failures: list[tuple[str, str]] = []
    for path in sorted(Path(directory).glob("*.json")):
        try:
            rows.extend(bench_file(path, mode))
        except Exception as e:  # keep going; the caller reports
            log.error("%s: %s", path.name, e)
            failures.append((path.name, str(e)))
    return rows, failures


def write_csv(rows, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow([
                r.file, r.n_qubits, r.n_terms, r.strategy, r.cx_count, r.cx_depth,
                r.set_count, r.clifford_cx_total, f"{r.wall_time_ms:.3f}",
                f"{r.cx_count_reduction_pct:.2f}", f"{r.cx_depth_reduction_pct:.2f}",
            ])


def mean_reductions(rows) -> tuple[float, float]:
    """Mean (count, depth) reduction over files."""
    per_file = {r.file: r for r in rows if r.strategy == "sets"}
    if not per_file:
        return 0.0, 0.0
    count = sum(r.cx_count_reduction_pct for r in per_file.values()) / len(per_file)
    depth = sum(r.cx_depth_reduction_pct for r in per_file.values()) / len(per_file)
    return count, depth
