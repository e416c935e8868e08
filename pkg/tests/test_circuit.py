
import numpy as np
import pytest
from conftest import random_circuit

from gadgetsynth.circuit import CX, Circuit, Gate, Rz, adjoint, compose, cx_count, cx_depth
from gadgetsynth.naive import synth_phase_gadget
from gadgetsynth.oracle import unitary_of_circuit


def test_empty_metrics():
    c = Circuit(3)
    assert cx_count(c) == 0
    assert cx_depth(c) == 0


def test_repeated_cx_count():
    c = Circuit(2, [CX(0, 1)] * 5)
    assert cx_count(c) == 5
    assert cx_depth(c) == 5


def test_disjoint_cx_parallel():
    assert cx_depth(Circuit(4, [CX(0, 1), CX(2, 3)])) == 1


def test_ladder_depth_four_qubits():
    # 4-qubit ladder gadget: three CX in, three CX out, each sharing a qubit
    c = synth_phase_gadget([0, 1, 2, 3], 0.3, "ladder")
    assert cx_count(c) == 6
    assert cx_depth(c) == 6


def test_single_qubit_gates_do_not_change_depth(rng):
    for _ in range(20):
        c = random_circuit(rng, 4, 15)
        stripped = Circuit(4, [g for g in c.gates if g.kind == "CX"])
        assert cx_depth(c) == cx_depth(stripped)
        assert cx_count(c) == cx_count(stripped)
        assert cx_depth(c) <= cx_count(c)


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("CX", (1, 1))
    with pytest.raises(ValueError):
        Gate("T", (0,))
    with pytest.raises(ValueError):
        Gate("H", (0,), 0.1)
    with pytest.raises(ValueError):
        Circuit(2).cx(0, 2)


def test_compose_identity_and_mismatch(rng):
    c = random_circuit(rng, 3, 10)
    assert compose(Circuit(3), c) == c
    assert compose(c, Circuit(3)) == c
    with pytest.raises(ValueError):
        compose(Circuit(2), Circuit(3))


def test_compose_matrix_order(rng):
    for _ in range(10):
        a, b = random_circuit(rng, 3, 8), random_circuit(rng, 3, 8)
        ua, ub = unitary_of_circuit(a), unitary_of_circuit(b)
        assert np.allclose(unitary_of_circuit(compose(a, b)), ub @ ua, atol=1e-12)


def test_compose_associative(rng):
    a, b, c = (random_circuit(rng, 3, 6) for _ in range(3))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_adjoint():
    assert adjoint(Circuit(1)) == Circuit(1)
    assert adjoint(Circuit(1, [Gate("S", (0,))])).gates == [Gate("Sdg", (0,))]
    assert adjoint(Circuit(1, [Rz(0.4, 0)])).gates == [Rz(-0.4, 0)]


def test_adjoint_inverts(rng):
    for _ in range(10):
        c = random_circuit(rng, 3, 12)
        u = unitary_of_circuit(c)
        assert np.allclose(unitary_of_circuit(adjoint(c)) @ u, np.eye(8), atol=1e-12)
        assert adjoint(adjoint(c)) == c
