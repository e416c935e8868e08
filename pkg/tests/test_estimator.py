import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from gadgetsynth.circuit import Circuit
from gadgetsynth.estimator import CommutingSetPartitioner, PauliSetCompiler
from gadgetsynth.pauli import PauliTerm
from gadgetsynth.validation import check_terms

PAIRS = [("IXZIZ", 0.05), ("IYIZY", 0.1), ("XXIYI", 0.15), ("YYXII", 0.2),
         ("ZIYXX", 0.25), ("ZXIZZ", 0.3), ("ZYZIY", 0.35)]


def test_params_and_clone():
    est = PauliSetCompiler(strategy="naive", repeat=2)
    assert est.get_params() == {"strategy": "naive", "mode": "ladder", "repeat": 2, "verify": False}
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est
    est.set_params(mode="tree")
    assert est.mode == "tree"


def test_fit_attributes():
    est = PauliSetCompiler(verify=True).fit(PAIRS)
    assert isinstance(est.circuit_, Circuit)
    assert est.n_qubits_ == 5
    assert est.report_.cx_count <= 24
    assert len(est.sequence_) == 7


def test_naive_matches_worked_example():
    c = PauliSetCompiler(strategy="naive").fit_transform(PAIRS)
    assert (c.cx_count, c.cx_depth) == (34, 34)


def test_score_prefers_sets():
    naive = PauliSetCompiler(strategy="naive").fit(PAIRS)
    sets = PauliSetCompiler().fit(PAIRS)
    assert sets.score(PAIRS) > naive.score(PAIRS)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        PauliSetCompiler().transform(PAIRS)
    with pytest.raises(NotFittedError):
        CommutingSetPartitioner().transform(PAIRS)


def test_bad_params_raise_at_fit():
    with pytest.raises(ValueError):
        PauliSetCompiler(strategy="best").fit(PAIRS)
    with pytest.raises(ValueError):
        PauliSetCompiler(mode="star").fit(PAIRS)


def test_transform_checks_width():
    est = PauliSetCompiler().fit(PAIRS)
    with pytest.raises(ValueError):
        est.transform([("XX", 0.1)])


def test_partitioner():
    part = CommutingSetPartitioner().fit({"XX": 0.1, "ZZ": 0.2, "XI": 0.3})
    assert [len(s) for s in part.sets_] == [2, 1]
    out = part.transform({"XX": 0.1, "ZZ": 0.2, "XI": 0.3})
    assert [str(t.string) for t in out] == ["XX", "ZZ", "XI"]


def test_check_terms_forms():
    t = PauliTerm.from_str("XZ", -0.2)
    assert check_terms([t]) == [t]
    assert check_terms([("XZ", 0.1)]) == [t]
    assert check_terms({"XZ": 0.1}) == [t]
    with pytest.raises(TypeError):
        check_terms([3])
    with pytest.raises(ValueError):
        check_terms([("XZ", float("nan"))])
    with pytest.raises(ValueError):
        check_terms([("X", 0.1), ("XX", 0.1)])
