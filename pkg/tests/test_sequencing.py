import itertools

import pytest
from conftest import random_terms

from gadgetsynth.pauli import PauliTerm, commutes
from gadgetsynth.sequencing import (
    CommutingPartition,
    build_graph,
    greedy_color,
    partition_terms,
    sequence,
)

TWELVE = [
    "IIXY", "IIYX", "XYII", "YXII", "XXXY", "XXYX",
    "XYXX", "XYYY", "YXXX", "YXYY", "YYXY", "YYYX",
]


def terms_of(strings):
    return [PauliTerm.from_str(s, 0.1 * (k + 1)) for k, s in enumerate(strings)]


def assert_valid_partition(partition, terms):
    flat = [t for s in partition.sets for t in s]
    assert sorted(flat, key=repr) == sorted(terms, key=repr)
    for s in partition.sets:
        for a, b in itertools.combinations(s, 2):
            assert commutes(a.string, b.string)


def test_single_vertex():
    g = build_graph(terms_of(["XZ"]))
    assert len(g.terms) == 1 and g.n_edges == 0


def test_twelve_strings_first_four_commute():
    g = build_graph(terms_of(["IIXY", "IIYX", "XYII", "YXII"]))
    assert g.n_edges == 0


def test_duplicate_string_no_edge():
    g = build_graph(terms_of(["XYZ", "XYZ"]))
    assert g.n_edges == 0


def test_mixed_qubit_counts_rejected():
    with pytest.raises(ValueError):
        build_graph(terms_of(["X", "XX"]))


def test_adjacency_is_anticommutation(rng):
    terms = random_terms(rng, 4, 15)
    g = build_graph(terms)
    for i, j in itertools.combinations(range(15), 2):
        assert g.has_edge(i, j) == (not commutes(terms[i].string, terms[j].string))
        assert g.has_edge(i, j) == g.has_edge(j, i)
    assert all(i not in g.adjacency[i] for i in range(15))


def test_edgeless_one_colour():
    terms = terms_of(["ZII", "IZI", "ZZZ"])
    assert len(greedy_color(build_graph(terms))) == 1


def test_clique_k_colours():
    terms = terms_of(["X", "Y", "Z"])
    p = greedy_color(build_graph(terms))
    assert [len(s) for s in p.sets] == [1, 1, 1]


def test_twelve_strings_partition_and_ordering():
    terms = terms_of(TWELVE)
    p = greedy_color(build_graph(terms))
    assert_valid_partition(p, terms)
    # the quoted ordering is one set of four followed by one set of eight
    assert [str(t.string) for t in sequence(p)] == TWELVE


def test_twelve_strings_partition_from_shuffled_input(rng):
    shuffled = TWELVE[:]
    rng.shuffle(shuffled)
    terms = terms_of(shuffled)
    p = greedy_color(build_graph(terms))
    assert_valid_partition(p, terms)


def test_sequence_examples():
    p = CommutingPartition([terms_of(["ZZ", "IX"])])
    assert [str(t.string) for t in sequence(p)] == ["IX", "ZZ"]
    assert sequence(CommutingPartition([])) == []


def test_partition_properties_random(rng):
    for _ in range(40):
        terms = random_terms(rng, rng.randint(2, 6), rng.randint(1, 25))
        g = build_graph(terms)
        p = greedy_color(g)
        assert_valid_partition(p, terms)
        max_degree = max((g.degree(v) for v in range(len(terms))), default=0)
        assert len(p) <= 1 + max_degree


def test_deterministic(rng):
    terms = random_terms(rng, 5, 20)
    assert partition_terms(terms).sets == partition_terms(terms).sets


def test_duplicates_fused_before_colouring():
    terms = [PauliTerm.from_str("ZZ", 0.1), PauliTerm.from_str("XX", 0.2), PauliTerm.from_str("ZZ", 0.3)]
    p = partition_terms(terms)
    assert p.n_terms == 2
    (zz,) = [t for s in p.sets for t in s if str(t.string) == "ZZ"]
    assert zz.angle == pytest.approx(0.4)
