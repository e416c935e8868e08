import pytest

from gadgetsynth.checks import (
    admits_cheap_step,
    check_corollary_54,
    check_corollary_55,
    commuting_groups,
    pair_is_cheap,
    sample_corollary_55,
)
from gadgetsynth.pauli import PauliString


def strings(*s):
    return [PauliString.from_str(x) for x in s]


def test_predicates():
    assert pair_is_cheap(strings("XI", "XZ"))
    assert pair_is_cheap(strings("XX", "ZZ"))
    assert not pair_is_cheap(strings("IX", "IY", "XI", "YI"))
    assert admits_cheap_step(strings("ZZ", "IZ"))
    assert admits_cheap_step(strings("XX", "ZZ"))


def test_corollary_54_m3_passes():
    r = check_corollary_54(3)
    assert r.passed and r.checked == 16**3


def test_corollary_54_m4_has_violation():
    r = check_corollary_54(4)
    assert not r.passed
    assert not pair_is_cheap(strings(*r.violations[0]))


def test_group_counts_two_qubits():
    # isotropic subspaces of F2^4: 15 lines and 15 Lagrangian planes
    dims = {}
    for gens, span in commuting_groups(2):
        assert len(span) == 2 ** len(gens)
        dims[len(gens)] = dims.get(len(gens), 0) + 1
    assert dims == {1: 15, 2: 15}


def test_group_counts_three_qubits():
    dims = {}
    for gens, _ in commuting_groups(3):
        dims[len(gens)] = dims.get(len(gens), 0) + 1
    assert dims == {1: 63, 2: 315, 3: 135}


def test_sampled_corollary_55():
    assert sample_corollary_55(200).passed


@pytest.mark.slow
def test_corollary_55_full():
    r = check_corollary_55(4)
    assert r.passed
    # 2295 maximal groups on four qubits
    assert "4: 2295" in r.notes[0]
    assert r.checked == 255 + 5355 + 11475 + 2295
