"""
Phase polynomials and their synthesis into CX + Rz circuits.

A diagonal set of exponentials ``exp(-i*theta/2 * Z_S)`` acts on a basis
state ``|x>`` as ``exp(i*theta*f_S(x))`` up to a global phase, where
``f_S(x)`` is the parity of ``x`` on the qubits in ``S``.  A parity is kept
as an int bitmask (bit q = qubit q).

Synthesis follows the Gray-code heuristic of Amy, Azimzadeh and Mosca: the
parity set is split recursively on the qubit that best separates it, and CX
gates are chosen so that each parity eventually sits on a single wire where
an Rz is placed.  The leftover linear reversible map is undone by Gaussian
elimination over GF(2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .circuit import Circuit, compose
from .naive import synth_phase_gadget
from .pauli import check_qubit_count

ANGLE_EPS = 1e-12


@dataclass
class PhasePolynomial:
    """Map from parity bitmask to rotation angle on ``n_qubits`` wires."""

    n_qubits: int
    terms: dict[int, float] = field(default_factory=dict)
    global_phase: float = 0.0

    def __post_init__(self):
        for parity, angle in self.terms.items():
            if parity <= 0 or parity >= 1 << self.n_qubits:
                raise ValueError(f"parity {parity:b} is empty or out of range")
            if not math.isfinite(angle):
                raise ValueError("angles must be finite")

    def __len__(self) -> int:
        return len(self.terms)

    def parity_bits(self, parity: int) -> str:
        """Bit string with qubit 0 first, e.g. ``"110"``."""
        return "".join(str((parity >> q) & 1) for q in range(self.n_qubits))

    def evaluate(self, x: int) -> float:
        """Phase ``sum theta_i f_i(x)`` for basis label ``x`` (bit q = qubit q)."""
        return sum(a for p, a in self.terms.items() if (p & x).bit_count() & 1)


@dataclass
class LinearFunction:
    """
    Invertible GF(2) matrix; row ``i`` is the parity carried by wire ``i``
    in terms of the input wires.
    """

    matrix: np.ndarray

    @classmethod
    def identity(cls, n: int) -> LinearFunction:
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: list[int], n: int) -> LinearFunction:
        m = np.zeros((n, n), dtype=np.uint8)
        for i, r in enumerate(rows):
            for q in range(n):
                m[i, q] = (r >> q) & 1
        return cls(m)

    @classmethod
    def from_circuit(cls, c: Circuit) -> LinearFunction:
        rows = [1 << q for q in range(c.n_qubits)]
        for g in c.gates:
            if g.kind == "CX":
                a, b = g.qubits
                rows[b] ^= rows[a]
        return cls.from_rows(rows, c.n_qubits)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def rows(self) -> list[int]:
        return [sum(int(b) << q for q, b in enumerate(row)) for row in self.matrix]

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.n, dtype=np.uint8)))

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearFunction) and np.array_equal(self.matrix, other.matrix)


def extract(diagonal, n_qubits: int | None = None) -> PhasePolynomial:
    """Phase polynomial of a list of diagonal terms; equal parities fuse."""
    diagonal = list(diagonal)
    n = check_qubit_count(diagonal) or n_qubits
    if not n:
        raise ValueError("cannot infer the qubit count of an empty set")
    terms: dict[int, float] = {}
    global_phase = 0.0
    for t in diagonal:
        if not t.string.is_diagonal:
            raise ValueError(f"term {t.string} is not diagonal")
        if t.string.is_identity:
            global_phase -= 0.5 * t.signed_angle
            continue
        terms[t.string.z] = terms.get(t.string.z, 0.0) + t.signed_angle
    return PhasePolynomial(n, terms, global_phase)


def _drop_zero(poly: PhasePolynomial) -> dict[int, float]:
    return {p: a for p, a in poly.terms.items() if abs(a) > ANGLE_EPS}


def gray_synth(poly: PhasePolynomial) -> tuple[Circuit, LinearFunction]:
    """
    Synthesise the parities of ``poly`` with CX and Rz gates.

    Returns the circuit and the linear function it leaves behind (not
    necessarily the identity).
    """
    n = poly.n_qubits
    remaining = _drop_zero(poly)
    circuit = Circuit(n)
    state = [1 << q for q in range(n)]  # parity on each wire, input coordinates
    coords = {p: p for p in remaining}  # parity in the basis of the wire states

    def place(wire: int):
        angle = remaining.pop(state[wire], None)
        if angle is not None:
            circuit.rz(angle, wire)

    for q in range(n):
        place(q)

    stack = [(list(remaining), list(range(n)), None)]
    while stack:
        parities, live, target = stack.pop()
        parities = [p for p in parities if p in remaining]
        if not parities:
            continue
        if target is not None:
            again = True
            while again:
                again = False
                for j in range(n):
                    if j != target and all((coords[p] >> j) & 1 for p in parities):
                        circuit.cx(j, target)
                        state[target] ^= state[j]
                        # the coordinate of wire j absorbs that of the target
                        for p in coords:
                            if (coords[p] >> target) & 1:
                                coords[p] ^= 1 << j
                        place(target)
                        parities = [p for p in parities if p in remaining]
                        again = bool(parities)
                        break
        if not parities or not live:
            continue
        best, pivot = -1, live[0]
        for j in live:
            ones = sum((coords[p] >> j) & 1 for p in parities)
            score = max(ones, len(parities) - ones)
            if score > best:
                best, pivot = score, j
        zeros = [p for p in parities if not (coords[p] >> pivot) & 1]
        ones = [p for p in parities if (coords[p] >> pivot) & 1]
        rest = [q for q in live if q != pivot]
        stack.append((ones, rest, pivot if target is None else target))
        stack.append((zeros, rest, target))

    if remaining:
        raise AssertionError(f"parities left unsynthesised: {sorted(remaining)}")
    return circuit, LinearFunction.from_rows(state, n)


def restore_identity(lin: LinearFunction) -> Circuit:
    """
    CX-only circuit implementing the inverse of ``lin`` by Gaussian
    elimination, so that ``lin`` followed by it is the identity.
    """
    n = lin.n
    rows = lin.rows()
    c = Circuit(n)

    def add(src: int, dst: int):
        rows[dst] ^= rows[src]
        c.cx(src, dst)

    for col in range(n):
        bit = 1 << col
        if not rows[col] & bit:
            below = next((r for r in range(col + 1, n) if rows[r] & bit), None)
            if below is None:
                raise ValueError("linear function is singular")
            add(below, col)
        for r in range(n):
            if r != col and rows[r] & bit:
                add(col, r)
    return c


def synth_phase_poly(poly: PhasePolynomial, mode: str = "ladder") -> Circuit:
    """
    Gray-code synthesis followed by the linear restore.  If that costs more
    CX than one phase gadget per parity, the gadgets are used instead.
    """
    circuit, lin = gray_synth(poly)
    circuit = compose(circuit, restore_identity(lin))
    terms = _drop_zero(poly)
    gadget_cx = sum(2 * (p.bit_count() - 1) for p in terms)
    if circuit.cx_count > gadget_cx:
        circuit = Circuit(poly.n_qubits)
        for p, a in terms.items():
            qubits = [q for q in range(poly.n_qubits) if (p >> q) & 1]
            circuit.extend(synth_phase_gadget(qubits, a, mode, poly.n_qubits).gates)
    return circuit


def synth_diagonal(diagonal, n_qubits: int | None = None) -> Circuit:
    """CX + Rz circuit equal, up to global phase, to a product of diagonal exponentials."""
    return synth_phase_poly(extract(diagonal, n_qubits))


def phase_function(c: Circuit) -> tuple[list[int], list[float]]:
    """
    Simulate a CX + Rz circuit on every basis state.

    Returns ``(image, phase)`` where basis label ``x`` (bit q = qubit q) maps
    to ``image[x]`` with accumulated ``exp(i*phase[x])``, global phase of
    each Rz dropped.
    """
    n = c.n_qubits
    image, phase = [], []
    for x in range(1 << n):
        bits = x
        acc = 0.0
        for g in c.gates:
            if g.kind == "CX":
                a, b = g.qubits
                if (bits >> a) & 1:
                    bits ^= 1 << b
            elif g.kind == "Rz":
                if (bits >> g.qubits[0]) & 1:
                    acc += g.angle
            else:
                raise ValueError(f"{g!r} is not a CX or Rz gate")
        image.append(bits)
        phase.append(acc)
    return image, phase
