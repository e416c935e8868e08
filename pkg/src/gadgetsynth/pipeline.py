"""End-to-end compilation strategies."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .circuit import Circuit, adjoint, compose
from .diagonalise import diagonalise_set
from .naive import MODES, synth_naive
from .pauli import PauliTerm, check_qubit_count, fuse_terms
from .phase_poly import extract, synth_phase_poly
from .sequencing import partition_terms, sort_sets

STRATEGIES = ("naive", "sets")


@dataclass
class CompileReport:
    cx_count: int = 0
    cx_depth: int = 0
    set_count: int = 0
    clifford_cx_total: int = 0
    wall_time: float = 0.0
    global_phase: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def plan(terms) -> list[list[PauliTerm]]:
    """
    Commuting sets in emission order, each sorted lexicographically.

    Duplicate strings are fused and all-identity terms dropped first.
    """
    terms = [t for t in fuse_terms(terms) if not t.string.is_identity]
    return sort_sets(partition_terms(terms, fuse=False)).sets


def resequence(terms) -> list[PauliTerm]:
    """The product order both strategies implement."""
    return [t for s in plan(terms) for t in s]


def _global_phase(terms) -> float:
    return sum((-0.5 * t.signed_angle for t in fuse_terms(terms) if t.string.is_identity), 0.0)


def compile_terms(
    terms,
    strategy: str = "sets",
    mode: str = "ladder",
    n_qubits: int | None = None,
    repeat: int = 1,
) -> tuple[Circuit, CompileReport]:
    """
    Compile a product of Pauli exponentials.

    ``naive`` synthesises every term of the resequenced product on its own;
    ``sets`` diagonalises each commuting set and synthesises its phase
    polynomial, emitting ``C``, the diagonal block, then ``C^dagger``.
    ``repeat`` repeats the compiled body (Trotter steps).
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if repeat < 1:
        raise ValueError("repeat must be at least 1")
    terms = list(terms)
    n = check_qubit_count(terms) or n_qubits
    if not n:
        raise ValueError("cannot infer the qubit count of an empty term list")

    start = time.perf_counter()
    sets = plan(terms)
    report = CompileReport(set_count=len(sets), global_phase=repeat * _global_phase(terms))
    body = Circuit(n)
    if strategy == "naive":
        body = synth_naive([t for s in sets for t in s], mode, n)
    else:
        for s in sets:
            diag = diagonalise_set(s, n)
            inner = synth_phase_poly(extract(diag.diagonal_terms, n), mode)
            block = compose(compose(diag.clifford, inner), adjoint(diag.clifford))
            body.extend(block.gates)
            report.clifford_cx_total += 2 * diag.cx_count
    circuit = Circuit(n, body.gates * repeat)
    report.clifford_cx_total *= repeat
    report.cx_count = circuit.cx_count
    report.cx_depth = circuit.cx_depth
    report.wall_time = time.perf_counter() - start
    return circuit, report
