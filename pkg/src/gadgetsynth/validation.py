"""Input coercion shared by the estimators and the CLI."""
from __future__ import annotations

import math
from collections.abc import Mapping

from .io import coefficient_to_angle
from .naive import MODES
from .pauli import PauliString, PauliTerm, check_qubit_count
from .pipeline import STRATEGIES


def check_terms(X, n_qubits: int | None = None) -> list[PauliTerm]:
    """
    Coerce ``X`` to a list of :class:`PauliTerm`.

    Accepted forms: an iterable of ``PauliTerm``; an iterable of
    ``(paulis, coefficient)`` pairs; a mapping ``{paulis: coefficient}``.
    Coefficients follow the operator-file convention (angle = -2 * coefficient).
    """
    if isinstance(X, Mapping):
        X = list(X.items())
    terms = []
    for k, item in enumerate(X):
        if isinstance(item, PauliTerm):
            terms.append(item)
            continue
        try:
            paulis, coeff = item
        except (TypeError, ValueError):
            raise TypeError(f"item {k}: expected PauliTerm or (paulis, coefficient), got {item!r}") from None
        coeff = float(coeff)
        if not math.isfinite(coeff):
            raise ValueError(f"item {k}: coefficient must be finite")
        s = paulis if isinstance(paulis, PauliString) else PauliString.from_str(paulis)
        terms.append(PauliTerm(s, coefficient_to_angle(coeff)))
    n = check_qubit_count(terms)
    if n_qubits is not None and terms and n != n_qubits:
        raise ValueError(f"expected {n_qubits}-qubit terms, got {n}")
    return terms


def check_strategy(strategy: str) -> str:
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    return strategy


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode
