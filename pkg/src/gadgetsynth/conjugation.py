"""
Conjugation of Pauli terms by Clifford gates.

``conjugate_term(g, t)`` returns the term whose exponential equals
``g @ exp(t) @ g.conj().T``.  Each single-qubit gate is a lookup table from
letter to (letter, sign); CX uses a 16-entry table on (control, target)
letter pairs.  The signs were fixed against dense matrices, see
tests/test_conjugation.py.
"""
from __future__ import annotations

from .circuit import Gate
from .pauli import PauliString, PauliTerm

_SINGLE = {
    "H": {"X": ("Z", 1), "Y": ("Y", -1), "Z": ("X", 1)},
    "S": {"X": ("Y", 1), "Y": ("X", -1), "Z": ("Z", 1)},
    "Sdg": {"X": ("Y", -1), "Y": ("X", 1), "Z": ("Z", 1)},
    "V": {"X": ("X", 1), "Y": ("Z", 1), "Z": ("Y", -1)},
    "Vdg": {"X": ("X", 1), "Y": ("Z", -1), "Z": ("Y", 1)},
    "X": {"X": ("X", 1), "Y": ("Y", -1), "Z": ("Z", -1)},
    "Z": {"X": ("X", -1), "Y": ("Y", -1), "Z": ("Z", 1)},
}

# (control letter, target letter) -> (control letter, target letter, sign)
_CX = {
    ("I", "I"): ("I", "I", 1),
    ("I", "X"): ("I", "X", 1),
    ("I", "Y"): ("Z", "Y", 1),
    ("I", "Z"): ("Z", "Z", 1),
    ("X", "I"): ("X", "X", 1),
    ("X", "X"): ("X", "I", 1),
    ("X", "Y"): ("Y", "Z", 1),
    ("X", "Z"): ("Y", "Y", -1),
    ("Y", "I"): ("Y", "X", 1),
    ("Y", "X"): ("Y", "I", 1),
    ("Y", "Y"): ("X", "Z", -1),
    ("Y", "Z"): ("X", "Y", 1),
    ("Z", "I"): ("Z", "I", 1),
    ("Z", "X"): ("Z", "X", 1),
    ("Z", "Y"): ("I", "Y", 1),
    ("Z", "Z"): ("I", "Z", 1),
}


def conjugate_string(g: Gate, s: PauliString) -> tuple[PauliString, int]:
    """Return ``(s', sign)`` with ``g s g^dagger = sign * s'``."""
    if g.kind == "Rz":
        raise ValueError("Rz is not a Clifford gate")
    for q in g.qubits:
        if q >= s.n_qubits:
            raise ValueError(f"{g!r} addresses qubit {q} of a {s.n_qubits}-qubit string")
    if g.kind == "CX":
        c, t = g.qubits
        lc, lt = s[c], s[t]
        if lc == "I" and lt in "IX":
            return s, 1
        nc, nt, sign = _CX[lc, lt]
        return s.with_letter(c, nc).with_letter(t, nt), sign
    (q,) = g.qubits
    letter = s[q]
    if letter == "I":
        return s, 1
    new, sign = _SINGLE[g.kind][letter]
    return s.with_letter(q, new), sign


def conjugate_term(g: Gate, t: PauliTerm) -> PauliTerm:
    s, sign = conjugate_string(g, t.string)
    return PauliTerm(s, t.angle, t.sign * sign)


def conjugate_set(gates, terms) -> list[PauliTerm]:
    """Conjugate every term by ``gates[0]`` first, then ``gates[1]``, and so on."""
    out = list(terms)
    for g in gates:
        out = [conjugate_term(g, t) for t in out]
    return out
