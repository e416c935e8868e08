"""Gate-level circuits over the fixed gate set {CX, Rz, H, S, Sdg, V, Vdg, X, Z}."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

SINGLE_QUBIT_CLIFFORDS = ("H", "S", "Sdg", "V", "Vdg", "X", "Z")
GATE_KINDS = ("CX", "Rz") + SINGLE_QUBIT_CLIFFORDS

_INVERSE = {"H": "H", "S": "Sdg", "Sdg": "S", "V": "Vdg", "Vdg": "V", "X": "X", "Z": "Z", "CX": "CX"}


@dataclass(frozen=True)
class Gate:
    """
    A single gate.  ``qubits`` is ``(control, target)`` for CX and ``(q,)``
    otherwise; ``angle`` is only set for Rz.
    """

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity = 2 if self.kind == "CX" else 1
        if len(self.qubits) != arity:
            raise ValueError(f"{self.kind} acts on {arity} qubit(s), got {self.qubits}")
        if self.kind == "CX" and self.qubits[0] == self.qubits[1]:
            raise ValueError("CX control and target must differ")
        if (self.kind == "Rz") != (self.angle is not None):
            raise ValueError("only Rz carries an angle")

    @property
    def is_clifford(self) -> bool:
        return self.kind != "Rz"

    def inverse(self) -> Gate:
        if self.kind == "Rz":
            return Gate("Rz", self.qubits, -self.angle)
        return Gate(_INVERSE[self.kind], self.qubits)

    def __repr__(self) -> str:
        args = ",".join(map(str, self.qubits))
        if self.kind == "Rz":
            return f"Rz({self.angle:.6g})[{args}]"
        return f"{self.kind}[{args}]"


def CX(control: int, target: int) -> Gate:
    return Gate("CX", (control, target))


def Rz(angle: float, q: int) -> Gate:
    return Gate("Rz", (q,), float(angle))


def single(kind: str, q: int) -> Gate:
    return Gate(kind, (q,))


@dataclass
class Circuit:
    """Ordered gate list; ``gates[0]`` is applied first."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        self.gates = list(self.gates)
        for g in self.gates:
            self._check(g)

    def _check(self, g: Gate):
        for q in g.qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"{g!r} addresses qubit {q} outside 0..{self.n_qubits - 1}")

    def append(self, gate: Gate) -> Circuit:
        self._check(gate)
        self.gates.append(gate)
        return self

    def extend(self, gates) -> Circuit:
        for g in gates:
            self.append(g)
        return self

    def cx(self, control: int, target: int) -> Circuit:
        return self.append(CX(control, target))

    def rz(self, angle: float, q: int) -> Circuit:
        return self.append(Rz(angle, q))

    def add(self, kind: str, q: int) -> Circuit:
        return self.append(single(kind, q))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self.gates == other.gates

    def copy(self) -> Circuit:
        return Circuit(self.n_qubits, list(self.gates))

    def gate_counts(self) -> Counter:
        return Counter(g.kind for g in self.gates)

    @property
    def cx_count(self) -> int:
        return cx_count(self)

    @property
    def cx_depth(self) -> int:
        return cx_depth(self)


def cx_count(c: Circuit) -> int:
    return sum(1 for g in c.gates if g.kind == "CX")


def cx_depth(c: Circuit) -> int:
    """
    Number of CX layers under ASAP scheduling.

    Only CX gates advance a qubit's layer counter; single-qubit gates are
    free.  Commuting gates are not reordered.
    """
    layer = [0] * c.n_qubits
    for g in c.gates:
        if g.kind == "CX":
            a, b = g.qubits
            d = max(layer[a], layer[b]) + 1
            layer[a] = layer[b] = d
    return max(layer, default=0)


def compose(a: Circuit, b: Circuit) -> Circuit:
    """``a`` followed by ``b``."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"cannot compose circuits on {a.n_qubits} and {b.n_qubits} qubits")
    return Circuit(a.n_qubits, a.gates + b.gates)


def adjoint(c: Circuit) -> Circuit:
    return Circuit(c.n_qubits, [g.inverse() for g in reversed(c.gates)])
