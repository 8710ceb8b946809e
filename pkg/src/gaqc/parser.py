"""Line-oriented circuit files.

::

    # Bell pair
    qubits 2
    H 0
    CNOT 0 1

The first non-comment line declares the register size (1 or 2).  Every
following line holds one gate; ``RZ``, ``ZPOW`` and ``HPOW`` take one decimal
parameter before the qubit index.  ``#`` starts a comment anywhere on a line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .circuit import Circuit, GateKind, Op

__all__ = ["Diagnostic", "CircuitSyntaxError", "parse_circuit", "format_circuit"]

MAX_QUBITS = 2


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


class CircuitSyntaxError(ValueError):
    """Raised with every diagnostic collected while parsing a file."""

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with 1-based start columns."""
    out, col, n = [], 0, len(line)
    while col < n:
        while col < n and line[col].isspace():
            col += 1
        start = col
        while col < n and not line[col].isspace():
            col += 1
        if col > start:
            out.append((start + 1, line[start:col]))
    return out


def _parse_int(tok: str):
    try:
        return int(tok)
    except ValueError:
        return None


def _parse_float(tok: str):
    try:
        v = float(tok)
    except ValueError:
        return None
    return v if math.isfinite(v) else None


def parse_circuit(text: str) -> Circuit:
    """Parse circuit text; raise :class:`CircuitSyntaxError` listing every problem found."""
    diags: list[Diagnostic] = []
    n = None
    ops: list[Op] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]
        args = toks[1:]

        if n is None:
            if head != "qubits":
                diags.append(Diagnostic(lineno, col, f"expected 'qubits <n>' before any gate, got {head!r}"))
                n = 0  # keep checking the remaining lines
                continue
            if len(args) != 1:
                diags.append(Diagnostic(lineno, col, "'qubits' takes exactly one argument"))
                n = 0
                continue
            value = _parse_int(args[0][1])
            if value is None or not 1 <= value <= MAX_QUBITS:
                diags.append(Diagnostic(lineno, args[0][0], f"qubit count must be 1 or 2, got {args[0][1]!r}"))
                n = 0
                continue
            n = value
            continue

        if head == "qubits":
            diags.append(Diagnostic(lineno, col, "duplicate 'qubits' declaration"))
            continue
        try:
            kind = GateKind(head.upper())
        except ValueError:
            diags.append(Diagnostic(lineno, col, f"unknown gate {head!r}"))
            continue
        expected = kind.n_params + kind.n_qubits
        if len(args) != expected:
            diags.append(Diagnostic(lineno, col, f"{kind.value} expects {expected} argument(s), got {len(args)}"))
            continue

        bad = False
        params = []
        for pcol, tok in args[: kind.n_params]:
            v = _parse_float(tok)
            if v is None:
                diags.append(Diagnostic(lineno, pcol, f"invalid number {tok!r}"))
                bad = True
            params.append(v)
        qubits = []
        for qcol, tok in args[kind.n_params :]:
            q = _parse_int(tok)
            if q is None:
                diags.append(Diagnostic(lineno, qcol, f"invalid qubit index {tok!r}"))
                bad = True
            elif n and not 0 <= q < n:
                diags.append(Diagnostic(lineno, qcol, f"qubit index {q} out of range for {n} qubit(s)"))
                bad = True
            qubits.append(q)
        if bad:
            continue
        if len(set(qubits)) != len(qubits):
            diags.append(Diagnostic(lineno, col, "distinct indices required"))
            continue
        if kind.n_qubits > (n or MAX_QUBITS):
            diags.append(Diagnostic(lineno, col, f"{kind.value} needs 2 qubits, register has {n}"))
            continue
        ops.append(Op(kind, tuple(qubits), tuple(params)))

    if n is None:
        diags.append(Diagnostic(1, 1, "missing 'qubits <n>' declaration"))
    if diags:
        raise CircuitSyntaxError(diags)
    return Circuit(n, tuple(ops))


def format_circuit(c: Circuit) -> str:
    """Inverse of :func:`parse_circuit` (parameters written with ``repr`` so they round-trip)."""
    lines = [f"qubits {c.n}"]
    for op in c.ops:
        parts = [op.kind.value, *(repr(p) for p in op.params), *(str(q) for q in op.qubits)]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
