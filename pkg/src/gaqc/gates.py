"""Quantum gates written as multivector formulas acting on :class:`MstaState`.

One-qubit states use the Pauli action ``s_k psi s3``.  On two-qubit states a
Pauli operator on qubit ``a`` is ``-i s_k^a psi J`` and the complex unit is
right multiplication by ``J``.  Every gate below is built from those two
primitives, exactly as the controlled gates are expanded in terms of Pauli
products.
"""
from __future__ import annotations

import math

import numpy as np

from .circuit import Circuit, GateKind, Op
from .clifford import Multivector, exp_bivector
from .msta import (
    MstaState,
    complex_structure,
    correlator,
    particle_bivector,
    particle_vector,
)

__all__ = [
    "apply_pauli",
    "apply_hadamard",
    "apply_hadamard_power",
    "apply_rotation",
    "apply_phase_S",
    "apply_T",
    "apply_z_power",
    "apply_cnot",
    "apply_cnot_exponential",
    "apply_cphase",
    "apply_swap",
    "apply_op",
    "run_circuit",
]


def _check_qubit(m: MstaState, q: int):
    if not 0 <= q < m.n:
        raise IndexError(f"qubit index {q} out of range for a {m.n}-qubit state")


def _check_pair(m: MstaState, q1: int, q2: int):
    if m.n != 2:
        raise ValueError("two-qubit gates need a two-qubit state")
    _check_qubit(m, q1)
    _check_qubit(m, q2)
    if q1 == q2:
        raise ValueError("distinct qubit indices required")


def _pauli_mv(k: int, q: int, psi: Multivector, n: int) -> Multivector:
    if n == 1:
        return particle_vector(1, 0, k) * psi * particle_vector(1, 0, 3)
    return -(particle_bivector(n, q, k) * psi * complex_structure(n))


def _times_i(psi: Multivector, n: int) -> Multivector:
    return psi * complex_structure(n)


def _phase_split(angle: float, q: int, m: MstaState) -> MstaState:
    """Multiply the |1>-component of qubit ``q`` by e^{i angle}."""
    _check_qubit(m, q)
    psi = m.mv
    flipped = _pauli_mv(3, q, psi, m.n)
    keep = (psi + flipped) * 0.5
    turn = (psi - flipped) * 0.5
    out = keep + turn * math.cos(angle) + _times_i(turn, m.n) * math.sin(angle)
    return MstaState(m.n, out)


def apply_pauli(k: int, qubit: int, m: MstaState) -> MstaState:
    if k not in (1, 2, 3):
        raise ValueError(f"Pauli axis must be 1, 2 or 3, got {k}")
    _check_qubit(m, qubit)
    return MstaState(m.n, _pauli_mv(k, qubit, m.mv, m.n))


def apply_hadamard(qubit: int, m: MstaState) -> MstaState:
    _check_qubit(m, qubit)
    n = m.n
    if n == 1:
        axis = (particle_vector(1, 0, 1) + particle_vector(1, 0, 3)) / math.sqrt(2)
        return MstaState(1, axis * m.mv * particle_vector(1, 0, 3))
    plane = (particle_bivector(n, qubit, 1) + particle_bivector(n, qubit, 3)) / math.sqrt(2)
    return MstaState(n, -(plane * m.mv * complex_structure(n)))


def apply_hadamard_power(beta: float, qubit: int, m: MstaState) -> MstaState:
    """Principal power H^beta = e^{i pi beta/2} exp(-i (pi beta/2) n.Sigma), n = (x+z)/sqrt 2.

    The SU(2) part acts as the rotor exp(-i n pi beta / 2) on the left, the
    leftover phase as right multiplication by cos + J sin.  At beta = 1 this
    reduces to the Hadamard action.
    """
    _check_qubit(m, qubit)
    n = m.n
    half = math.pi * beta / 2
    plane = (particle_bivector(n, qubit, 1) + particle_bivector(n, qubit, 3)) / math.sqrt(2)
    rotor = exp_bivector(plane * -half)
    psi = rotor * m.mv
    return MstaState(n, psi * math.cos(half) + _times_i(psi, n) * math.sin(half))


def apply_z_power(alpha: float, qubit: int, m: MstaState) -> MstaState:
    """Z^alpha = diag(1, e^{i pi alpha}) via the split into Z-eigenspace halves."""
    return _phase_split(math.pi * alpha, qubit, m)


def apply_rotation(theta: float, qubit: int, m: MstaState) -> MstaState:
    """R_theta = diag(1, e^{i theta})."""
    return _phase_split(theta, qubit, m)


def apply_phase_S(qubit: int, m: MstaState) -> MstaState:
    return _phase_split(math.pi / 2, qubit, m)


def apply_T(qubit: int, m: MstaState) -> MstaState:
    return _phase_split(math.pi / 4, qubit, m)


def apply_cnot(control: int, target: int, m: MstaState) -> MstaState:
    """(psi - i s3^c psi J - i s1^t psi J + i s3^c i s1^t psi E) / 2."""
    _check_pair(m, control, target)
    psi, J, E = m.mv, complex_structure(2), correlator(2)
    zc = particle_bivector(2, control, 3)
    xt = particle_bivector(2, target, 1)
    out = psi - zc * psi * J - xt * psi * J + zc * xt * psi * E
    return MstaState(2, out * 0.5)


def apply_cphase(q1: int, q2: int, m: MstaState) -> MstaState:
    """(psi - i s3^1 psi J - i s3^2 psi J + i s3^1 i s3^2 psi E) / 2."""
    _check_pair(m, q1, q2)
    psi, J, E = m.mv, complex_structure(2), correlator(2)
    za = particle_bivector(2, q1, 3)
    zb = particle_bivector(2, q2, 3)
    out = psi - za * psi * J - zb * psi * J + za * zb * psi * E
    return MstaState(2, out * 0.5)


def apply_swap(q1: int, q2: int, m: MstaState) -> MstaState:
    """(psi - sum_k i s_k^1 i s_k^2 psi E) / 2."""
    _check_pair(m, q1, q2)
    psi, E = m.mv, correlator(2)
    out = psi
    for k in (1, 2, 3):
        out = out - particle_bivector(2, q1, k) * particle_bivector(2, q2, k) * psi * E
    return MstaState(2, out * 0.5)


def apply_cnot_exponential(control: int, target: int, m: MstaState) -> MstaState:
    """exp(-i (pi/2) X_t (1 - Z_c) / 2) applied to ``m``.

    This is the exponential reading of CNOT.  It agrees with :func:`apply_cnot`
    only up to a phase of -i on the control-set branch, i.e. it equals CNOT
    followed by Z^(-1/2) on the control.
    """
    _check_pair(m, control, target)
    psi = m.mv
    z_psi = _pauli_mv(3, control, psi, 2)
    proj = (psi - z_psi) * 0.5
    gen = (_pauli_mv(1, target, psi, 2) - _pauli_mv(1, target, z_psi, 2)) * 0.5
    return MstaState(2, psi - proj - _times_i(gen, 2))


def apply_op(op: Op, m: MstaState) -> MstaState:
    k = op.kind
    q = op.qubits
    if k is GateKind.X:
        return apply_pauli(1, q[0], m)
    if k is GateKind.Y:
        return apply_pauli(2, q[0], m)
    if k is GateKind.Z:
        return apply_pauli(3, q[0], m)
    if k is GateKind.H:
        return apply_hadamard(q[0], m)
    if k is GateKind.S:
        return apply_phase_S(q[0], m)
    if k is GateKind.T:
        return apply_T(q[0], m)
    if k is GateKind.RZ:
        return apply_rotation(op.params[0], q[0], m)
    if k is GateKind.ZPOW:
        return apply_z_power(op.params[0], q[0], m)
    if k is GateKind.HPOW:
        return apply_hadamard_power(op.params[0], q[0], m)
    if k is GateKind.CNOT:
        return apply_cnot(q[0], q[1], m)
    if k is GateKind.CPHASE:
        return apply_cphase(q[0], q[1], m)
    if k is GateKind.SWAP:
        return apply_swap(q[0], q[1], m)
    raise ValueError(f"unsupported gate {k}")


def run_circuit(c: Circuit, state: MstaState) -> MstaState:
    if c.n != state.n:
        raise ValueError(f"circuit has {c.n} qubit(s) but the state has {state.n}")
    for op in c.ops:
        state = apply_op(op, state)
    return state
