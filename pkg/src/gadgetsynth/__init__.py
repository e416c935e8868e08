"""Compile products of Pauli exponentials with commuting-set diagonalisation and phase polynomials."""
from .circuit import Circuit, Gate, adjoint, compose, cx_count, cx_depth
from .diagonalise import DiagonalisationResult, diagonalise_set
from .estimator import CommutingSetPartitioner, PauliSetCompiler
from .io import emit_qasm, load_operator, parse_qasm, save_operator, to_qasm
from .naive import synth_naive, synth_pauli_gadget, synth_phase_gadget
from .pauli import PauliString, PauliTerm, commutes, multiply, weight
from .phase_poly import PhasePolynomial, extract, gray_synth, restore_identity, synth_diagonal
from .pipeline import CompileReport, compile_terms, resequence
from .sequencing import build_graph, greedy_color, sequence

__all__ = [
    "Circuit",
    "CommutingSetPartitioner",
    "CompileReport",
    "DiagonalisationResult",
    "Gate",
    "PauliSetCompiler",
    "PauliString",
    "PauliTerm",
    "PhasePolynomial",
    "adjoint",
    "build_graph",
    "commutes",
    "compile_terms",
    "compose",
    "cx_count",
    "cx_depth",
    "diagonalise_set",
    "emit_qasm",
    "extract",
    "gray_synth",
    "greedy_color",
    "load_operator",
    "multiply",
    "parse_qasm",
    "resequence",
    "restore_identity",
    "save_operator",
    "sequence",
    "synth_diagonal",
    "synth_naive",
    "synth_pauli_gadget",
    "synth_phase_gadget",
    "to_qasm",
    "weight",
]
