"""Plain complex-matrix quantum simulator used as ground truth.

Nothing here touches multivectors.  Qubit 0 is the leftmost tensor factor,
i.e. the most significant bit of a basis label.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from .circuit import Circuit, GateKind, Op

__all__ = [
    "PAULI",
    "IDENTITY",
    "gate_matrix",
    "op_matrix",
    "su2_axis_angle",
    "z_power",
    "h_power",
    "deutsch_gate",
    "barenco_gate",
    "basis_state",
    "run_statevector",
    "circuit_unitary",
    "approx_error",
    "phase_invariant_error",
    "partial_trace",
    "is_unitary",
]

IDENTITY = np.eye(2, dtype=complex)
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_H = (PAULI[0] + PAULI[2]) / math.sqrt(2)


def z_power(alpha: float) -> np.ndarray:
    return np.diag([1.0, np.exp(1j * math.pi * alpha)])


def h_power(beta: float) -> np.ndarray:
    """Principal power of H: eigenvalue +1 kept, -1 mapped to e^{i pi beta}."""
    plus = (IDENTITY + _H) / 2
    minus = (IDENTITY - _H) / 2
    return plus + np.exp(1j * math.pi * beta) * minus


def su2_axis_angle(axis, theta: float) -> np.ndarray:
    """exp(-i theta/2 n.Sigma) = cos(theta/2) I - i sin(theta/2) n.Sigma."""
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-9:
        raise ValueError("axis must be a unit 3-vector")
    n_sigma = sum(c * p for c, p in zip(n, PAULI))
    return math.cos(theta / 2) * IDENTITY - 1j * math.sin(theta / 2) * n_sigma


def _cnot() -> np.ndarray:
    m = np.eye(4, dtype=complex)
    m[2:, 2:] = PAULI[0]
    return m


def gate_matrix(kind: GateKind, params=()) -> np.ndarray:
    """Matrix of a gate on its own qubits (first listed qubit is the MSB)."""
    if kind is GateKind.X:
        return PAULI[0].copy()
    if kind is GateKind.Y:
        return PAULI[1].copy()
    if kind is GateKind.Z:
        return PAULI[2].copy()
    if kind is GateKind.H:
        return _H.copy()
    if kind is GateKind.S:
        return np.diag([1, 1j]).astype(complex)
    if kind is GateKind.T:
        return np.diag([1, np.exp(1j * math.pi / 4)])
    if kind is GateKind.RZ:
        return np.diag([1, np.exp(1j * params[0])])
    if kind is GateKind.ZPOW:
        return z_power(params[0])
    if kind is GateKind.HPOW:
        return h_power(params[0])
    if kind is GateKind.CNOT:
        return _cnot()
    if kind is GateKind.CPHASE:
        return np.diag([1, 1, 1, -1]).astype(complex)
    if kind is GateKind.SWAP:
        return np.eye(4, dtype=complex)[[0, 2, 1, 3]]
    raise ValueError(f"unsupported gate {kind}")


def _apply_local(state: np.ndarray, matrix: np.ndarray, qubits, n: int) -> np.ndarray:
    k = len(qubits)
    psi = state.reshape([2] * n)
    psi = np.moveaxis(psi, list(qubits), list(range(k)))
    shape = psi.shape
    psi = (matrix @ psi.reshape(2**k, -1)).reshape(shape)
    return np.moveaxis(psi, list(range(k)), list(qubits)).reshape(-1)


def op_matrix(op: Op, n: int) -> np.ndarray:
    """Full 2**n x 2**n matrix of one operation."""
    cols = [_apply_local(col, gate_matrix(op.kind, op.params), op.qubits, n) for col in np.eye(2**n, dtype=complex)]
    return np.array(cols).T


def basis_state(bits: str) -> np.ndarray:
    out = np.zeros(2 ** len(bits), dtype=complex)
    out[int(bits, 2)] = 1.0
    return out


def run_statevector(c: Circuit, state) -> np.ndarray:
    psi = np.asarray(state, dtype=complex).ravel()
    if psi.size != 2**c.n:
        raise ValueError(f"state has {psi.size} amplitudes, circuit needs {2**c.n}")
    for op in c.ops:
        psi = _apply_local(psi, gate_matrix(op.kind, op.params), op.qubits, c.n)
    return psi


def circuit_unitary(c: Circuit) -> np.ndarray:
    u = np.eye(2**c.n, dtype=complex)
    for op in c.ops:
        u = op_matrix(op, c.n) @ u
    return u


def deutsch_gate(gamma: float) -> np.ndarray:
    """8x8 Deutsch gate in the basis order |000>,|100>,|010>,|001>,|110>,|101>,|011>,|111>."""
    c, s = math.cos(math.pi * gamma / 2), math.sin(math.pi * gamma / 2)
    m = np.eye(8, dtype=complex)
    m[6:, 6:] = [[1j * c, s], [s, 1j * c]]
    return m


def barenco_gate(phi: float, alpha: float, theta: float) -> np.ndarray:
    """4x4 Barenco gate in the basis order |00>,|10>,|01>,|11>."""
    e = np.exp(1j * alpha)
    m = np.eye(4, dtype=complex)
    m[2:, 2:] = [
        [e * math.cos(theta), -1j * np.exp(1j * (alpha - phi)) * math.sin(theta)],
        [-1j * np.exp(1j * (alpha + phi)) * math.sin(theta), e * math.cos(theta)],
    ]
    return m


def is_unitary(u: np.ndarray, atol: float = 1e-10) -> bool:
    u = np.asarray(u)
    return u.shape[0] == u.shape[1] and np.allclose(u @ u.conj().T, np.eye(u.shape[0]), atol=atol)


def approx_error(u: np.ndarray, v: np.ndarray) -> float:
    """max over unit states of ||(U - V) psi||: the largest singular value of U - V."""
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return float(np.linalg.svd(u - v, compute_uv=False)[0])


def phase_invariant_error(u: np.ndarray, v: np.ndarray) -> float:
    """min over phi of approx_error(U, e^{i phi} V) for unitary U, V.

    ||U - e^{i phi} V|| = max_j |w_j - e^{i phi}| over the eigenvalues w_j of
    V^dag U, and the minimising phase is equidistant from two eigenphases.
    """
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    w = np.linalg.eigvals(v.conj().T @ u)
    angles = np.angle(w)
    candidates = list(angles)
    for a, b in itertools.combinations(angles, 2):
        mid = (a + b) / 2
        candidates += [mid, mid + math.pi]
    return float(min(np.max(np.abs(w - np.exp(1j * phi))) for phi in candidates))


def partial_trace(rho: np.ndarray, keep, n: int) -> np.ndarray:
    keep = sorted(keep)
    drop = [q for q in range(n) if q not in keep]
    t = np.asarray(rho).reshape([2] * (2 * n))
    for q in reversed(drop):
        t = np.trace(t, axis1=q, axis2=q + t.ndim // 2)
    d = 2 ** len(keep)
    return t.reshape(d, d)
