"""
Simultaneous diagonalisation of a commuting set of Pauli exponentials.

The set is conjugated by Clifford gates until every letter is I or Z.  Each
round removes at least one qubit from the live set:

1. trivial qubits, whose letters are all I or one common letter P, need only
   a single-qubit basis change;
2. a compatible pair (i, j) is fixed with at most two single-qubit Cliffords
   and one CX(i, j), which diagonalises j;
3. otherwise the lowest-weight term is collapsed onto a single Z with a CX
   ladder, which forces that qubit to be diagonal in every other term.

``DiagonalisationResult.clifford`` holds the gates in the order they were
conjugated in.  The original product of exponentials equals ``clifford``
followed by the diagonal terms followed by ``adjoint(clifford)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .circuit import CX, Circuit, Gate, single
from .conjugation import conjugate_set
from .pauli import PauliTerm, check_qubit_count, commutes

# single-qubit Clifford sending the letter to +-Z under conjugation
TO_Z = {"X": "H", "Y": "V", "Z": None}


class NonCommutingSetError(ValueError):
    """Raised when a set handed to the diagonaliser contains anti-commuting terms."""

    def __init__(self, i: int, j: int, a, b):
        super().__init__(f"terms {i} ({a.string}) and {j} ({b.string}) anti-commute")
        self.pair = (i, j)


@dataclass
class DiagonalisationResult:
    clifford: Circuit
    diagonal_terms: list[PauliTerm]
    greedy_steps: int = 0
    log: list[str] = field(default_factory=list)

    @property
    def cx_count(self) -> int:
        return self.clifford.cx_count


def _letters(terms, q: int) -> set[str]:
    return {t.string[q] for t in terms} - {"I"}


def _is_trivial(terms, q: int) -> bool:
    return len(_letters(terms, q)) <= 1


def find_trivial_qubit(terms, qubits) -> tuple[int, str] | None:
    """First live qubit whose letters are I or a single letter P, with that P."""
    for q in sorted(qubits):
        letters = _letters(terms, q)
        if len(letters) <= 1:
            return q, (letters.pop() if letters else "Z")
    return None


def _compatible(terms, i: int, j: int, a: str, b: str) -> bool:
    return all((t.string[i] in ("I", a)) == (t.string[j] in ("I", b)) for t in terms)


def find_compatible_pair(terms, qubits) -> tuple[int, int, str, str] | None:
    """
    First ordered pair (i, j) of live, non-trivial qubits and letters (A, B)
    with sigma_i in {I, A} <=> sigma_j in {I, B} for every term.

    Trivial qubits are skipped: an all-I qubit satisfies the relation
    vacuously but is handled by a basis change alone.
    """
    live = [q for q in sorted(qubits) if not _is_trivial(terms, q)]
    for i, j in itertools.permutations(live, 2):
        for a in "XYZ":
            for b in "XYZ":
                if _compatible(terms, i, j, a, b):
                    return i, j, a, b
    return None


def _basis_change(letter: str, q: int) -> list[Gate]:
    kind = TO_Z[letter]
    return [] if kind is None else [single(kind, q)]


def diagonalise_pair(terms, i: int, j: int, a: str, b: str):
    """
    Conjugate so that qubit ``j`` becomes diagonal.

    Maps A to Z on ``i`` and B to Z on ``j``, after which the pattern on
    (i, j) lies in {II, IZ, ZI, ZZ, XX, XY, YX, YY} and CX(i, j) diagonalises
    the target.
    """
    if i == j or not _compatible(terms, i, j, a, b):
        raise ValueError(f"qubits ({i}, {j}) are not compatible with A={a}, B={b}")
    gates = _basis_change(a, i) + _basis_change(b, j) + [CX(i, j)]
    return conjugate_set(gates, terms), gates


def greedy_step(terms, qubits):
    """
    Collapse the lowest-weight term (on the live qubits) to a single Z.

    Returns ``(terms, gates, target)``; ``target`` is diagonal afterwards.
    Ties between equal weights go to the earliest term.
    """
    best = None
    for t in terms:
        live = [q for q in t.string.support if q in qubits]
        if live and (best is None or len(live) < len(best)):
            best = live
            chosen = t
    if best is None:
        raise ValueError("no term acts non-trivially on the live qubits")
    target = best[-1]
    gates: list[Gate] = []
    for q in best:
        gates += _basis_change(chosen.string[q], q)
    gates += [CX(q, target) for q in best[:-1]]
    return conjugate_set(gates, terms), gates, target


def check_commuting(terms):
    for (i, a), (j, b) in itertools.combinations(enumerate(terms), 2):
        if not commutes(a.string, b.string):
            raise NonCommutingSetError(i, j, a, b)


def diagonalise_set(terms, n_qubits: int | None = None) -> DiagonalisationResult:
    terms = list(terms)
    n = check_qubit_count(terms) or n_qubits
    if not n:
        raise ValueError("cannot infer the qubit count of an empty set")
    check_commuting(terms)

    gates: list[Gate] = []
    live = set(range(n))
    greedy = 0
    log = []
    while live:
        for q in sorted(live):
            letters = _letters(terms, q)
            if len(letters) <= 1:
                step = _basis_change(letters.pop(), q) if letters else []
                terms = conjugate_set(step, terms)
                gates += step
                live.discard(q)
                log.append(f"trivial {q}")
        if not live:
            break
        pair = find_compatible_pair(terms, live)
        if pair is not None:
            terms, step = diagonalise_pair(terms, *pair)
            live.discard(pair[1])
            log.append("pair {} {} {}{}".format(*pair))
        else:
            terms, step, target = greedy_step(terms, live)
            live.discard(target)
            greedy += 1
            log.append(f"greedy {target}")
        gates += step

    assert all(t.string.is_diagonal for t in terms)
    return DiagonalisationResult(
        Circuit(n, gates), [t.normalised() for t in terms], greedy, log
    )
