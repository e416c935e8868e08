import random

import numpy as np
import pytest

from gadgetsynth.circuit import Circuit, Gate
from gadgetsynth.conjugation import conjugate_set
from gadgetsynth.pauli import PauliTerm

WORKED_EXAMPLE = ["IXZIZ", "IYIZY", "XXIYI", "YYXII", "ZIYXX", "ZXIZZ", "ZYZIY"]

CLIFFORD_1Q = ("H", "S", "Sdg", "V", "Vdg", "X", "Z")


def random_string(rng, n, letters="IXYZ", nonidentity=True):
    while True:
        s = "".join(rng.choice(letters) for _ in range(n))
        if not nonidentity or set(s) != {"I"}:
            return s


def random_terms(rng, n, m):
    return [PauliTerm.from_str(random_string(rng, n), rng.uniform(-np.pi, np.pi)) for _ in range(m)]


def random_clifford_gates(rng, n, depth):
    gates = []
    for _ in range(depth):
        if n > 1 and rng.random() < 0.4:
            a, b = rng.sample(range(n), 2)
            gates.append(Gate("CX", (a, b)))
        else:
            gates.append(Gate(rng.choice(CLIFFORD_1Q), (rng.randrange(n),)))
    return gates


def random_circuit(rng, n, depth):
    c = Circuit(n)
    for g in random_clifford_gates(rng, n, depth):
        c.append(g)
        if rng.random() < 0.3:
            c.rz(rng.uniform(-np.pi, np.pi), rng.randrange(n))
    return c


def random_commuting_set(rng, n, m, depth=None):
    """R (diagonal set) R^dagger for a random Clifford R; distinct, non-identity strings."""
    diag = set()
    while len(diag) < min(m, 2**n - 1):
        diag.add(random_string(rng, n, "IZ"))
    terms = [PauliTerm.from_str(s, rng.uniform(-np.pi, np.pi)) for s in sorted(diag)]
    rng.shuffle(terms)
    gates = random_clifford_gates(rng, n, depth if depth is not None else 4 * n * n)
    return [t.normalised() for t in conjugate_set(gates, terms)]


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def worked_example():
    r = random.Random(7)
    return [PauliTerm.from_str(s, r.uniform(-1, 1)) for s in WORKED_EXAMPLE]


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
