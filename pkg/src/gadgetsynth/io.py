"""
Operator files and OpenQASM 2.0 output.

Operator files are UTF-8 JSON::

    {"n_qubits": 2, "terms": [{"paulis": "ZZ", "coefficient": 0.1}, ...]}

A coefficient ``t`` denotes ``exp(i*t*P)``; the term angle is ``-2*t``.
"""
from __future__ import annotations

import json
import math
import re
from pathlib import Path

from .circuit import Circuit, Gate
from .pauli import LETTERS, PauliString, PauliTerm, fuse_terms


class OperatorFormatError(ValueError):
    """Malformed operator file; ``line`` is 1-based when known."""

    def __init__(self, message: str, path=None, line: int | None = None):
        where = str(path) if path is not None else "<operator>"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


class QasmFormatError(ValueError):
    pass


def coefficient_to_angle(coefficient: float) -> float:
    return -2.0 * coefficient


def angle_to_coefficient(angle: float) -> float:
    return -0.5 * angle


def _term_lines(text: str) -> list[int]:
    return [text.count("\n", 0, m.start()) + 1 for m in re.finditer(r'"paulis"', text)]


def parse_operator(text: str, path=None) -> tuple[int, list[PauliTerm]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise OperatorFormatError(f"invalid JSON: {e.msg} (column {e.colno})", path, e.lineno) from None
    if not isinstance(data, dict):
        raise OperatorFormatError("top level must be an object", path)
    n = data.get("n_qubits")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise OperatorFormatError(f"'n_qubits' must be a positive integer, got {n!r}", path)
    raw = data.get("terms")
    if not isinstance(raw, list):
        raise OperatorFormatError("'terms' must be a list", path)
    lines = _term_lines(text)
    terms = []
    for k, entry in enumerate(raw):
        line = lines[k] if k < len(lines) else None
        if not isinstance(entry, dict) or "paulis" not in entry or "coefficient" not in entry:
            raise OperatorFormatError(f"term {k} needs 'paulis' and 'coefficient'", path, line)
        paulis, coeff = entry["paulis"], entry["coefficient"]
        if not isinstance(paulis, str) or any(ch not in LETTERS for ch in paulis):
            raise OperatorFormatError(f"term {k}: bad Pauli string {paulis!r}", path, line)
        if len(paulis) != n:
            raise OperatorFormatError(
                f"term {k}: string {paulis!r} has length {len(paulis)}, expected {n}", path, line
            )
        if isinstance(coeff, bool) or not isinstance(coeff, (int, float)) or not math.isfinite(coeff):
            raise OperatorFormatError(f"term {k}: coefficient must be a finite number, got {coeff!r}", path, line)
        terms.append(PauliTerm(PauliString.from_str(paulis), coefficient_to_angle(float(coeff))))
    return n, fuse_terms(terms)


def load_operator(path) -> list[PauliTerm]:
    """Terms of an operator file, duplicate strings fused."""
    return read_operator(path)[1]


def read_operator(path) -> tuple[int, list[PauliTerm]]:
    path = Path(path)
    return parse_operator(path.read_text(encoding="utf-8"), path)


def operator_dict(terms, n_qubits: int, canonical: bool = True) -> dict:
    terms = fuse_terms(terms)
    if canonical:
        terms = sorted(terms, key=lambda t: str(t.string))
    return {
        "n_qubits": n_qubits,
        "terms": [
            {"paulis": str(t.string), "coefficient": angle_to_coefficient(t.signed_angle)}
            for t in terms
        ],
    }


def save_operator(terms, path, n_qubits: int | None = None, canonical: bool = True):
    terms = list(terms)
    n = n_qubits if n_qubits is not None else terms[0].n_qubits
    Path(path).write_text(json.dumps(operator_dict(terms, n, canonical), indent=1) + "\n", encoding="utf-8")


_QASM_NAMES = {"CX": "cx", "H": "h", "S": "s", "Sdg": "sdg", "X": "x", "Z": "z"}
_QASM_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


def _fmt_angle(a: float) -> str:
    return f"{a:.17g}"


def qasm_line(g: Gate) -> str:
    if g.kind == "CX":
        return f"cx q[{g.qubits[0]}],q[{g.qubits[1]}];"
    q = g.qubits[0]
    if g.kind == "Rz":
        return f"rz({_fmt_angle(g.angle)}) q[{q}];"
    if g.kind == "V":
        return f"rx(pi/2) q[{q}];"
    if g.kind == "Vdg":
        return f"rx(-pi/2) q[{q}];"
    return f"{_QASM_NAMES[g.kind]} q[{q}];"


def to_qasm(c: Circuit) -> str:
    lines = [_QASM_HEADER + f"qreg q[{c.n_qubits}];"]
    lines += [qasm_line(g) for g in c.gates]
    return "\n".join(lines) + "\n"


def emit_qasm(c: Circuit, path):
    Path(path).write_text(to_qasm(c), encoding="ascii")


_QASM_STMT = re.compile(
    r"^(?P<name>cx|rz|rx|h|s|sdg|x|z)"
    r"(?:\((?P<arg>[^)]*)\))?\s+"
    r"q\[(?P<a>\d+)\](?:\s*,\s*q\[(?P<b>\d+)\])?;$"
)


def parse_qasm(text: str) -> Circuit:
    """
    Parse the OpenQASM 2.0 subset written by :func:`to_qasm`.

    Anything outside that subset is rejected.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("//")]
    if len(lines) < 3 or lines[0] != "OPENQASM 2.0;" or lines[1] != 'include "qelib1.inc";':
        raise QasmFormatError("missing OpenQASM 2.0 header")
    m = re.fullmatch(r"qreg q\[(\d+)\];", lines[2])
    if not m:
        raise QasmFormatError(f"expected a single qreg declaration, got {lines[2]!r}")
    c = Circuit(int(m.group(1)))
    for k, ln in enumerate(lines[3:], start=4):
        st = _QASM_STMT.match(ln)
        if not st:
            raise QasmFormatError(f"statement {k}: cannot parse {ln!r}")
        name, arg = st.group("name"), st.group("arg")
        a = int(st.group("a"))
        b = st.group("b")
        try:
            if name == "cx":
                if b is None or arg is not None:
                    raise QasmFormatError(f"statement {k}: malformed cx")
                c.cx(a, int(b))
                continue
            if b is not None:
                raise QasmFormatError(f"statement {k}: {name} takes one qubit")
            if name == "rz":
                c.rz(float(arg), a)
            elif name == "rx":
                kind = {"pi/2": "V", "-pi/2": "Vdg"}.get((arg or "").replace(" ", ""))
                if kind is None:
                    raise QasmFormatError(f"statement {k}: only rx(+-pi/2) is supported")
                c.add(kind, a)
            else:
                if arg is not None:
                    raise QasmFormatError(f"statement {k}: {name} takes no parameter")
                c.add({v: key for key, v in _QASM_NAMES.items()}[name], a)
        except (TypeError, ValueError) as e:
            if isinstance(e, QasmFormatError):
                raise
            raise QasmFormatError(f"statement {k}: {e}") from None
    return c


def load_qasm(path) -> Circuit:
    return parse_qasm(Path(path).read_text(encoding="ascii"))
