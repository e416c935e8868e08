"""
Dense-matrix verification at desk scale.

Tensor ordering is fixed globally: qubit 0 is the leftmost letter of a Pauli
string and the most significant bit of a basis-state index, so
``"ZI"`` is ``kron(Z, I)``.
"""
from __future__ import annotations

import numpy as np

from .circuit import Circuit, Gate
from .pauli import PauliString

MAX_QUBITS = 11

_SQ2 = 1 / np.sqrt(2)

GATE_MATRICES = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQ2,
    "S": np.diag([1, 1j]),
    "Sdg": np.diag([1, -1j]),
    # V = Rx(pi/2)
    "V": np.array([[1, -1j], [-1j, 1]], dtype=complex) * _SQ2,
    "Vdg": np.array([[1, 1j], [1j, 1]], dtype=complex) * _SQ2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.diag([1, -1]).astype(complex),
}

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1, -1]).astype(complex),
}

CX_MATRIX = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


def _check_size(n: int):
    if n > MAX_QUBITS:
        raise ValueError(f"dense oracle limited to {MAX_QUBITS} qubits, got {n}")


def gate_matrix(g: Gate) -> np.ndarray:
    """2x2 (or 4x4 for CX, control first) matrix of a gate."""
    if g.kind == "Rz":
        return np.diag([np.exp(-0.5j * g.angle), np.exp(0.5j * g.angle)])
    if g.kind == "CX":
        return CX_MATRIX
    return GATE_MATRICES[g.kind]


def pauli_matrix(s: PauliString | str) -> np.ndarray:
    letters = str(s)
    out = np.ones((1, 1), dtype=complex)
    for ch in letters:
        out = np.kron(out, PAULI_MATRICES[ch])
    return out


def _apply(state: np.ndarray, g: Gate, n: int) -> np.ndarray:
    # state has shape (2,)*n + (k,); axis q is qubit q
    m = gate_matrix(g)
    qs = list(g.qubits)
    k = len(qs)
    m = m.reshape((2,) * (2 * k))
    state = np.tensordot(m, state, axes=(list(range(k, 2 * k)), qs))
    return np.moveaxis(state, list(range(k)), qs)


def unitary_of_circuit(c: Circuit) -> np.ndarray:
    n = c.n_qubits
    _check_size(n)
    dim = 1 << n
    state = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
    for g in c.gates:
        state = _apply(state, g, n)
    return state.reshape(dim, dim)


def _apply_pauli(u: np.ndarray, s: PauliString) -> np.ndarray:
    """Return ``P @ u`` using the signed-permutation structure of ``P``."""
    n = s.n_qubits
    # bit q of the mask -> bit (n-1-q) of the basis index
    xmask = zmask = 0
    for q in range(n):
        xmask |= ((s.x >> q) & 1) << (n - 1 - q)
        zmask |= ((s.z >> q) & 1) << (n - 1 - q)
    n_y = (s.x & s.z).bit_count()
    idx = np.arange(1 << n)
    parity = np.bitwise_count(idx & zmask) & 1
    # (X^x Z^z)|b> = (-1)^{z.b} |b ^ x>, and Y = i X Z
    phase = (1j ** n_y) * np.where(parity, -1.0, 1.0)
    out = np.empty_like(u)
    out[idx ^ xmask] = phase[:, None] * u
    return out


def term_matrix_apply(u: np.ndarray, term) -> np.ndarray:
    """``exp(-i*sign*angle/2 * P) @ u``."""
    half = 0.5 * term.signed_angle
    return np.cos(half) * u - 1j * np.sin(half) * _apply_pauli(u, term.string)


def exp_matrix(term) -> np.ndarray:
    n = term.n_qubits
    _check_size(n)
    return term_matrix_apply(np.eye(1 << n, dtype=complex), term)


def unitary_of_terms(terms, n_qubits: int | None = None) -> np.ndarray:
    """Ordered product of exponentials; ``terms[0]`` acts first."""
    terms = list(terms)
    if n_qubits is None:
        if not terms:
            raise ValueError("n_qubits is required for an empty term list")
        n_qubits = terms[0].n_qubits
    _check_size(n_qubits)
    u = np.eye(1 << n_qubits, dtype=complex)
    for t in terms:
        u = term_matrix_apply(u, t)
    return u


def equiv_up_to_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-9) -> bool:
    """
    True iff ``u == lam * v`` for some unit scalar ``lam``, entrywise within
    ``tol``.  ``lam`` is read off the largest-magnitude entry of ``v``.
    """
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch {u.shape} vs {v.shape}")
    k = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    if abs(v[k]) < tol:
        return bool(np.max(np.abs(u)) < tol)
    lam = u[k] / v[k]
    if abs(abs(lam) - 1) > tol:
        return False
    return bool(np.max(np.abs(u - lam * v)) < tol)


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) < tol)
