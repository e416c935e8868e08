"""scikit-learn style front end: set parameters, then ``fit`` on a term list."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .oracle import MAX_QUBITS, equiv_up_to_phase, unitary_of_circuit, unitary_of_terms
from .pipeline import compile_terms, plan
from .validation import check_mode, check_strategy, check_terms


class CommutingSetPartitioner(TransformerMixin, BaseEstimator):
    """
    Split terms into mutually commuting sets.

    After ``fit``: ``sets_`` (list of lists of terms) and ``n_qubits_``.
    ``transform`` returns the flattened, resequenced term list.
    """

    def fit(self, X, y=None):
        terms = check_terms(X)
        self.sets_ = plan(terms)
        self.n_qubits_ = terms[0].n_qubits if terms else 0
        return self

    def transform(self, X):
        check_is_fitted(self, "sets_")
        terms = check_terms(X, self.n_qubits_ or None)
        return [t for s in plan(terms) for t in s]


class PauliSetCompiler(TransformerMixin, BaseEstimator):
    """
    Compile a product of Pauli exponentials to CX, Rz and single-qubit Cliffords.

    Parameters
    ----------
    strategy : {"sets", "naive"}
        ``sets`` diagonalises commuting sets and synthesises phase polynomials;
        ``naive`` emits one CX tree per exponential.
    mode : {"ladder", "tree"}
        CX arrangement for individually synthesised phase gadgets.
    repeat : int
        Number of Trotter steps.
    verify : bool
        Check the result against the dense product of exponentials
        (only up to ``MAX_QUBITS`` qubits).

    Attributes set by ``fit``: ``circuit_``, ``report_``, ``sequence_``,
    ``n_qubits_``.
    """

    def __init__(self, strategy="sets", mode="ladder", repeat=1, verify=False):
        self.strategy = strategy
        self.mode = mode
        self.repeat = repeat
        self.verify = verify

    def _compile(self, terms, n_qubits=None):
        check_strategy(self.strategy)
        check_mode(self.mode)
        circuit, report = compile_terms(terms, self.strategy, self.mode, n_qubits, self.repeat)
        if self.verify:
            if circuit.n_qubits > MAX_QUBITS:
                raise ValueError(f"verification is limited to {MAX_QUBITS} qubits")
            sequence = [t for s in plan(terms) for t in s] * self.repeat
            target = unitary_of_terms(sequence, circuit.n_qubits)
            if not equiv_up_to_phase(unitary_of_circuit(circuit), target, 1e-9):
                raise RuntimeError("compiled circuit does not match the product of exponentials")
        return circuit, report

    def fit(self, X, y=None, n_qubits=None):
        terms = check_terms(X, n_qubits)
        self.circuit_, self.report_ = self._compile(terms, n_qubits)
        self.sequence_ = [t for s in plan(terms) for t in s]
        self.n_qubits_ = self.circuit_.n_qubits
        return self

    def transform(self, X):
        """Compile ``X`` with the fitted settings; returns a :class:`Circuit`."""
        check_is_fitted(self, "circuit_")
        terms = check_terms(X, self.n_qubits_)
        return self._compile(terms, self.n_qubits_)[0]

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y, **fit_params).circuit_

    def score(self, X, y=None):
        """Negative CX count, so that larger is better."""
        return -self.transform(X).cx_count
