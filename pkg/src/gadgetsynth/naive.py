"""
Baseline synthesis: every Pauli exponential becomes its own CX tree.

A phase gadget on k qubits uses 2(k-1) CX gates.  In ``"ladder"`` mode the
parity is passed down a chain of neighbouring CXs onto the last qubit of the
support, giving CX depth 2(k-1); in
``"tree"`` mode the parity is collected pairwise in a balanced tree, giving
CX depth 2*ceil(log2 k).
"""
from __future__ import annotations

from .circuit import Circuit, compose
from .pauli import PauliTerm, check_qubit_count, weight

MODES = ("ladder", "tree")

# entry basis change; the exit is its inverse
_BASIS_CHANGE = {"X": ("H", "H"), "Y": ("V", "Vdg")}


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _parity_network(qubits: list[int], mode: str) -> tuple[list[tuple[int, int]], int]:
    """CX list (control, target) computing the parity onto a root, plus the root."""
    if mode == "ladder":
        return list(zip(qubits[:-1], qubits[1:])), qubits[-1]
    cxs = []
    level = list(qubits)
    while len(level) > 1:
        nxt = []
        for a, b in zip(level[0::2], level[1::2]):
            cxs.append((a, b))
            nxt.append(b)
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return cxs, level[0]


def synth_phase_gadget(qubits, angle: float, mode: str = "ladder", n_qubits: int | None = None) -> Circuit:
    """Circuit for ``exp(-i*angle/2 * Z...Z)`` on ``qubits``."""
    _check_mode(mode)
    qubits = list(qubits)
    if not qubits:
        raise ValueError("a phase gadget needs at least one qubit")
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"repeated qubit in {qubits}")
    n = n_qubits if n_qubits is not None else max(qubits) + 1
    cxs, root = _parity_network(qubits, mode)
    c = Circuit(n)
    for a, b in cxs:
        c.cx(a, b)
    c.rz(angle, root)
    for a, b in reversed(cxs):
        c.cx(a, b)
    return c


def synth_pauli_gadget(term: PauliTerm, mode: str = "ladder") -> Circuit:
    """Phase gadget on the support of ``term``, wrapped in basis changes."""
    s = term.string
    support = s.support
    if not support:
        raise ValueError("all-identity term is a global phase and cannot be synthesised")
    n = s.n_qubits
    pre = Circuit(n)
    post = Circuit(n)
    for q in support:
        letter = s[q]
        if letter in _BASIS_CHANGE:
            enter, leave = _BASIS_CHANGE[letter]
            pre.add(enter, q)
            post.add(leave, q)
    gadget = synth_phase_gadget(support, term.signed_angle, mode, n)
    return compose(compose(pre, gadget), post)


def naive_cx_bound(terms) -> int:
    """Exact CX count of :func:`synth_naive`, sum of 2(weight-1)."""
    return sum(2 * (weight(t.string) - 1) for t in terms if weight(t.string))


def synth_naive(terms, mode: str = "ladder", n_qubits: int | None = None) -> Circuit:
    terms = list(terms)
    n = check_qubit_count(terms) or n_qubits
    if n is None or n < 1:
        raise ValueError("cannot infer the qubit count of an empty term list")
    c = Circuit(n)
    for t in terms:
        c.extend(synth_pauli_gadget(t, mode).gates)
    return c
