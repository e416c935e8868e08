"""
Enumeration checks for the n-1 CX bounds of the diagonaliser.

Both checks reduce to the same question: does a commuting set always offer
the diagonaliser a trivial qubit or a compatible pair, so that the greedy
fallback (the only step costing more than one CX) is never needed?

* ``check_corollary_54`` enumerates every tuple of ``m`` two-qubit Pauli
  strings.  A pair of qubits of a larger commuting set need not commute on
  its own, so the tuples are not filtered for commutation.
* ``check_corollary_55`` enumerates every commuting group on four qubits.
  After the basis change sending A to Z on qubit i and B to Z on qubit j,
  compatibility says the X-bits of i and j agree on every element, and a
  trivial qubit has a zero X-bit everywhere.  Both are linear conditions, so
  a set passes exactly when the group it generates passes; enumerating the
  isotropic subspaces of F_2^8 of every dimension covers all commuting sets
  on at most four qubits.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .diagonalise import find_compatible_pair
from .pauli import LETTERS, PauliString, PauliTerm, commutes


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        lines = [f"{self.name}: {status}, {self.checked} sets checked"]
        lines += self.notes
        for v in self.violations[:5]:
            lines.append("  violating set: " + " ".join(v))
        return "\n".join(lines)


def _as_terms(strings) -> list[PauliTerm]:
    return [PauliTerm(s, 1.0) for s in strings]


def _nontrivial(terms, n: int) -> list[int]:
    return [q for q in range(n) if len({t.string[q] for t in terms} - {"I"}) > 1]


def admits_cheap_step(strings) -> bool:
    """
    True iff no qubit needs the greedy fallback: every non-trivial qubit set
    is empty or contains a compatible pair.
    """
    strings = list(strings)
    if not strings:
        return True
    terms = _as_terms(strings)
    live = _nontrivial(terms, strings[0].n_qubits)
    return not live or find_compatible_pair(terms, live) is not None


def pair_is_cheap(strings) -> bool:
    """Two-qubit restriction: one qubit is trivial or the two are compatible."""
    terms = _as_terms(strings)
    return len(_nontrivial(terms, 2)) < 2 or find_compatible_pair(terms, (0, 1)) is not None


def check_corollary_54(m: int = 3) -> CheckReport:
    """
    All ``m``-tuples of two-qubit strings have a trivial qubit or a
    compatible pair.  Any two live qubits of an m-term commuting set then
    allow a one-CX step, so the greedy fallback never runs.
    """
    report = CheckReport(f"pair check (m={m}, two-qubit restrictions)")
    pairs = [PauliString.from_str(a + b) for a in LETTERS for b in LETTERS]
    for combo in itertools.product(pairs, repeat=m):
        report.checked += 1
        if not pair_is_cheap(combo):
            report.violations.append([str(s) for s in combo])
    return report


def _span_add(span: frozenset, g: int) -> frozenset:
    return span | {v ^ g for v in span}


def _commute_bits(a: int, b: int, n: int) -> bool:
    mask = (1 << n) - 1
    ax, az, bx, bz = a & mask, a >> n, b & mask, b >> n
    return ((ax & bz) ^ (az & bx)).bit_count() % 2 == 0


def _to_string(v: int, n: int) -> PauliString:
    return PauliString(n, v & ((1 << n) - 1), v >> n)


def commuting_groups(n: int = 4):
    """
    Yield ``(generators, elements)`` for every isotropic subspace of the
    n-qubit Pauli group modulo phase, every dimension from 1 to n.

    Elements are encoded as ``x | z << n``.
    """
    universe = range(1, 1 << (2 * n))
    level = {frozenset({0, g}): (g,) for g in universe}
    while level:
        yield from ((gens, span) for span, gens in level.items())
        nxt: dict[frozenset, tuple] = {}
        for span, gens in level.items():
            for g in universe:
                if g in span or not all(_commute_bits(g, h, n) for h in gens):
                    continue
                bigger = _span_add(span, g)
                if bigger not in nxt:
                    nxt[bigger] = gens + (g,)
        level = nxt


def check_corollary_55(n: int = 4) -> CheckReport:
    """Every commuting group on ``n`` qubits admits a trivial qubit or compatible pair."""
    report = CheckReport(f"group check (n={n}, all commuting groups)")
    by_dim: dict[int, int] = {}
    for gens, _ in commuting_groups(n):
        report.checked += 1
        by_dim[len(gens)] = by_dim.get(len(gens), 0) + 1
        strings = [_to_string(g, n) for g in gens]
        if not admits_cheap_step(strings):
            report.violations.append([str(s) for s in strings])
    report.notes.append(
        "  groups by dimension: " + ", ".join(f"{d}: {c}" for d, c in sorted(by_dim.items()))
    )
    return report


def sample_corollary_55(samples: int = 500, n: int = 4, seed: int = 0) -> CheckReport:
    """Random commuting generator sets; a fast smoke test before the full run."""
    rng = random.Random(seed)
    report = CheckReport(f"group check (n={n}, {samples} random generator sets)")
    strings = [PauliString(n, v & ((1 << n) - 1), v >> n) for v in range(1, 1 << (2 * n))]
    for _ in range(samples):
        gens: list[PauliString] = []
        for s in rng.sample(strings, len(strings)):
            if all(commutes(s, g) for g in gens):
                gens.append(s)
            if len(gens) == n:
                break
        report.checked += 1
        if not admits_cheap_step(gens):
            report.violations.append([str(s) for s in gens])
    return report
