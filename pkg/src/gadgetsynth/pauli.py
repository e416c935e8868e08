"""
Pauli strings and Pauli terms.

An n-qubit Pauli string is stored as two bitmasks ``x`` and ``z``; bit ``q``
of each mask belongs to qubit ``q``.  The letter on a qubit is

    (x, z) = (0, 0) -> I,  (1, 0) -> X,  (1, 1) -> Y,  (0, 1) -> Z.

Strings render left to right starting at qubit 0, so ``"IXZ"`` has X on
qubit 1 and Z on qubit 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

LETTERS = "IXYZ"

_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_LETTER = {bits: letter for letter, bits in _BITS.items()}

# single-qubit products a*b = phase * c, phase as a power of i
_PRODUCT = {
    ("X", "Y"): (1, "Z"),
    ("Y", "Z"): (1, "X"),
    ("Z", "X"): (1, "Y"),
    ("Y", "X"): (3, "Z"),
    ("Z", "Y"): (3, "X"),
    ("X", "Z"): (3, "Y"),
}

PHASES = (1, 1j, -1, -1j)


@dataclass(frozen=True, order=False)
class PauliString:
    """Immutable n-qubit Pauli operator without phase."""

    n_qubits: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ValueError(f"n_qubits must be non-negative, got {self.n_qubits}")
        limit = 1 << self.n_qubits
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError("bitmask exceeds the qubit count")

    @classmethod
    def from_str(cls, letters: str) -> PauliString:
        x = z = 0
        for q, ch in enumerate(letters.upper()):
            try:
                bx, bz = _BITS[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r} in {letters!r}") from None
            x |= bx << q
            z |= bz << q
        return cls(len(letters), x, z)

    @classmethod
    def identity(cls, n_qubits: int) -> PauliString:
        return cls(n_qubits)

    @classmethod
    def from_letters(cls, letters: dict[int, str], n_qubits: int) -> PauliString:
        """Build a string with the given letters on the given qubits, I elsewhere."""
        chars = ["I"] * n_qubits
        for q, ch in letters.items():
            chars[q] = ch
        return cls.from_str("".join(chars))

    def __getitem__(self, q: int) -> str:
        if not 0 <= q < self.n_qubits:
            raise IndexError(q)
        return _LETTER[(self.x >> q) & 1, (self.z >> q) & 1]

    def __len__(self) -> int:
        return self.n_qubits

    def __iter__(self):
        return (self[q] for q in range(self.n_qubits))

    def __str__(self) -> str:
        return "".join(self)

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"

    def __lt__(self, other: PauliString) -> bool:
        return str(self) < str(other)

    def with_letter(self, q: int, letter: str) -> PauliString:
        bx, bz = _BITS[letter]
        mask = 1 << q
        x = (self.x & ~mask) | (bx << q)
        z = (self.z & ~mask) | (bz << q)
        return PauliString(self.n_qubits, x, z)

    @property
    def support(self) -> list[int]:
        """Qubits carrying a non-identity letter, ascending."""
        bits = self.x | self.z
        return [q for q in range(self.n_qubits) if (bits >> q) & 1]

    @property
    def is_diagonal(self) -> bool:
        return self.x == 0

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0


def _check_lengths(p: PauliString, q: PauliString):
    if p.n_qubits != q.n_qubits:
        raise ValueError(
            f"Pauli strings act on different qubit counts ({p.n_qubits} != {q.n_qubits})"
        )


def weight(s: PauliString) -> int:
    """Number of non-identity letters."""
    return (s.x | s.z).bit_count()


def commutes(p: PauliString, q: PauliString) -> bool:
    """True iff ``p`` and ``q`` commute as operators (symplectic form is even)."""
    _check_lengths(p, q)
    return ((p.x & q.z) ^ (p.z & q.x)).bit_count() % 2 == 0


def multiply(p: PauliString, q: PauliString) -> tuple[complex, PauliString]:
    """
    Return ``(phase, r)`` with ``p @ q == phase * r``.

    ``phase`` is one of 1, 1j, -1, -1j.
    """
    _check_lengths(p, q)
    power = 0
    for a, b in zip(p, q):
        if a == "I" or b == "I" or a == b:
            continue
        power += _PRODUCT[a, b][0]
    return PHASES[power % 4], PauliString(p.n_qubits, p.x ^ q.x, p.z ^ q.z)


@dataclass(frozen=True)
class PauliTerm:
    """
    The Pauli exponential ``exp(-i * sign * angle / 2 * string)``.

    ``sign`` absorbs the -1 factors picked up when a term is conjugated by
    Clifford gates; the rotation actually applied is ``sign * angle``.
    """

    string: PauliString
    angle: float
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if not math.isfinite(self.angle):
            raise ValueError(f"angle must be finite, got {self.angle}")

    @classmethod
    def from_str(cls, letters: str, angle: float, sign: int = 1) -> PauliTerm:
        return cls(PauliString.from_str(letters), float(angle), sign)

    @property
    def n_qubits(self) -> int:
        return self.string.n_qubits

    @property
    def signed_angle(self) -> float:
        return self.sign * self.angle

    def normalised(self) -> PauliTerm:
        """Fold the sign into the angle."""
        return PauliTerm(self.string, self.signed_angle, 1)

    def __repr__(self) -> str:
        sign = "-" if self.sign < 0 else "+"
        return f"PauliTerm({sign}{self.string}, {self.angle!r})"


def fuse_terms(terms) -> list[PauliTerm]:
    """
    Merge terms with equal strings by adding their signed angles.

    The merged term keeps the position of the first occurrence.  This is exact
    only when the duplicates may be brought together, which holds inside a
    commuting set and is the convention used on ingestion.
    """
    order: list[PauliString] = []
    total: dict[PauliString, float] = {}
    for t in terms:
        if t.string not in total:
            order.append(t.string)
            total[t.string] = 0.0
        total[t.string] += t.signed_angle
    return [PauliTerm(s, total[s]) for s in order]


def check_qubit_count(terms) -> int:
    """Return the shared qubit count of ``terms``; raise if they disagree."""
    counts = {t.n_qubits for t in terms}
    if len(counts) > 1:
        raise ValueError(f"terms act on different qubit counts: {sorted(counts)}")
    return counts.pop() if counts else 0
