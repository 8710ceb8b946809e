"""Qubit states as multivectors of the multiparticle Pauli algebra.

A single qubit lives in the even subalgebra of Cl(3) (basis 1, i s1, i s2,
i s3).  Two qubits live in two commuting copies of Cl(3), right-projected by
the correlator E so that right multiplication by i s3 of either particle acts
as the same imaginary unit.

Qubit ``a`` (0-based) is particle ``a + 1`` and is the most significant bit
of the computational basis label, so ``"01"`` means qubit 0 in |0> and
qubit 1 in |1>.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .clifford import CL3, Multivector, ProductSignature, Signature

__all__ = [
    "MstaState",
    "StateError",
    "msta_algebra",
    "particle_vector",
    "particle_bivector",
    "particle_pseudoscalar",
    "correlator",
    "complex_structure",
    "spinor_to_mv",
    "mv_to_spinor",
    "encode_basis",
    "bell_state",
    "singlet",
    "apply_imaginary",
    "reduced_basis",
]

MAX_STATE_QUBITS = 2
ATOL = 1e-12


class StateError(ValueError):
    """Raised for multivectors that do not represent a qubit state."""


def msta_algebra(n: int):
    """Cl(3) for one particle, otherwise ``n`` commuting copies of it."""
    if n < 1:
        raise ValueError("qubit count must be at least 1")
    return CL3 if n == 1 else ProductSignature(CL3, n)


def _check_particle(n: int, a: int):
    if not 0 <= a < n:
        raise IndexError(f"qubit index {a} out of range for {n} qubit(s)")


def particle_vector(n: int, a: int, k: int) -> Multivector:
    """The vector s_k of particle ``a`` (qubit index, 0-based; k in 1..3)."""
    _check_particle(n, a)
    if k not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {k}")
    return Multivector.blade(msta_algebra(n), 1 << (3 * a + k - 1))


def particle_pseudoscalar(n: int, a: int) -> Multivector:
    _check_particle(n, a)
    return Multivector.blade(msta_algebra(n), 0b111 << (3 * a))


def particle_bivector(n: int, a: int, k: int) -> Multivector:
    """i s_k of particle ``a``."""
    return particle_pseudoscalar(n, a) * particle_vector(n, a, k)


@lru_cache(maxsize=None)
def correlator(n: int) -> Multivector:
    """E_n = prod over b >= 2 of (1 - i s3^1 i s3^b) / 2."""
    alg = msta_algebra(n)
    out = Multivector.scalar(alg)
    if n == 1:
        return out
    first = particle_bivector(n, 0, 3)
    for b in range(1, n):
        out = out * ((1 - first * particle_bivector(n, b, 3)) * 0.5)
    return out


@lru_cache(maxsize=None)
def complex_structure(n: int) -> Multivector:
    """J_n = E_n i s3^1; right multiplication by it is the imaginary unit."""
    return correlator(n) * particle_bivector(n, 0, 3)


@dataclass(frozen=True)
class MstaState:
    """An ``n``-qubit state held as a multivector.

    The constructor checks the structural invariants (even in every particle
    space, and for ``n = 2`` the phase constraint ``psi i s3^1 = psi i s3^2``).
    """

    n: int
    mv: Multivector

    def __post_init__(self):
        if not 1 <= self.n <= MAX_STATE_QUBITS:
            raise StateError(f"states support 1..{MAX_STATE_QUBITS} qubits, got {self.n}")
        if self.mv.sig != msta_algebra(self.n):
            raise StateError("multivector does not belong to the n-particle algebra")
        scale = max(1.0, self.mv.norm())
        tol = 1e-9 * scale
        if np.max(np.abs(self.mv.coeffs[_odd_mask(self.n)]), initial=0.0) > tol:
            raise StateError("state has odd-grade components in some particle space")
        if self.n > 1:
            ref = self.mv * particle_bivector(self.n, 0, 3)
            for b in range(1, self.n):
                if ref.max_diff(self.mv * particle_bivector(self.n, b, 3)) > tol:
                    raise StateError("state violates the phase constraint psi i s3^a = psi i s3^b")

    @property
    def normalized(self) -> bool:
        return abs(np.linalg.norm(mv_to_spinor(self)) - 1.0) <= 1e-12

    def __add__(self, other: "MstaState") -> "MstaState":
        return MstaState(self.n, self.mv + other.mv)

    def __sub__(self, other: "MstaState") -> "MstaState":
        return MstaState(self.n, self.mv - other.mv)

    def __mul__(self, scalar: float) -> "MstaState":
        return MstaState(self.n, self.mv * float(scalar))

    __rmul__ = __mul__

    def is_close(self, other: "MstaState", atol: float = ATOL) -> bool:
        return self.n == other.n and self.mv.is_close(other.mv, atol)


@lru_cache(maxsize=None)
def _odd_mask(n: int) -> np.ndarray:
    masks = np.arange(8**n)
    odd = np.zeros(masks.shape, dtype=bool)
    for a in range(n):
        part = (masks >> (3 * a)) & 0b111
        odd |= np.array([bin(int(p)).count("1") % 2 == 1 for p in part])
    return odd


@lru_cache(maxsize=None)
def _basis_multivectors(n: int) -> tuple[Multivector, ...]:
    """psi_b for every computational basis label b (qubit 0 is the MSB)."""
    out = []
    for label in range(2**n):
        bits = format(label, f"0{n}b")
        out.append(_encode_bits(n, bits))
    return tuple(out)


def _encode_bits(n: int, bits: str) -> Multivector:
    psi = Multivector.scalar(msta_algebra(n))
    for a, bit in enumerate(bits):
        if bit == "1":
            psi = psi * -particle_bivector(n, a, 2)
    return psi * correlator(n)


@lru_cache(maxsize=None)
def _spinor_frame(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Columns: coefficient images of Re and Im of each amplitude, and their pseudo-inverse."""
    J = complex_structure(n)
    cols = []
    for psi_b in _basis_multivectors(n):
        cols.append(psi_b.coeffs)
        cols.append((psi_b * J).coeffs)
    frame = np.array(cols).T
    return frame, np.linalg.pinv(frame)


def spinor_to_mv(s: Sequence[complex]) -> MstaState:
    """Map a column of 2**n complex amplitudes to its multivector.

    Each amplitude ``x + i y`` on basis label ``b`` contributes
    ``x psi_b + y psi_b J``.  For one qubit this is
    ``(a0 + i a3, -a2 + i a1) -> a0 + a_k i s_k``.
    """
    amps = np.asarray(s, dtype=complex).ravel()
    n = int(round(np.log2(amps.size))) if amps.size else 0
    if amps.size != 2**n or not 1 <= n <= MAX_STATE_QUBITS:
        raise StateError(f"need 2 or 4 amplitudes, got {amps.size}")
    frame, _ = _spinor_frame(n)
    reals = np.empty(2 * amps.size)
    reals[0::2] = amps.real
    reals[1::2] = amps.imag
    return MstaState(n, Multivector(msta_algebra(n), frame @ reals))


def mv_to_spinor(m: MstaState) -> np.ndarray:
    """Inverse of :func:`spinor_to_mv`."""
    frame, pinv = _spinor_frame(m.n)
    reals = pinv @ m.mv.coeffs
    residual = np.max(np.abs(frame @ reals - m.mv.coeffs), initial=0.0)
    if residual > 1e-9 * max(1.0, m.mv.norm()):
        raise StateError(f"multivector is not in the reduced state space (residual {residual:.2e})")
    return reals[0::2] + 1j * reals[1::2]


def encode_basis(bits: str) -> MstaState:
    """Computational basis state: 1 for |0>, -i s2 for |1>, times E."""
    n = len(bits)
    if not 1 <= n <= MAX_STATE_QUBITS or set(bits) - {"0", "1"}:
        raise StateError(f"invalid basis label {bits!r}")
    return MstaState(n, _encode_bits(n, bits))


def bell_state(k: int) -> MstaState:
    """The four Bell states written directly as multivectors."""
    one = Multivector.scalar(msta_algebra(2))
    s2a, s2b = particle_bivector(2, 0, 2), particle_bivector(2, 1, 2)
    s3a, s3b = particle_bivector(2, 0, 3), particle_bivector(2, 1, 3)
    tail = one - s3a * s3b
    heads = {
        1: one + s2a * s2b,
        2: -(s2a + s2b),
        3: one - s2a * s2b,
        4: s2a - s2b,
    }
    if k not in heads:
        raise ValueError(f"Bell state index must be 1..4, got {k}")
    return MstaState(2, heads[k] * tail * 2**-1.5)


def singlet() -> MstaState:
    s2a, s2b = particle_bivector(2, 0, 2), particle_bivector(2, 1, 2)
    s3a, s3b = particle_bivector(2, 0, 3), particle_bivector(2, 1, 3)
    return MstaState(2, (s2a - s2b) * (1 - s3a * s3b) * 2**-1.5)


def apply_imaginary(m: MstaState) -> MstaState:
    return MstaState(m.n, m.mv * complex_structure(m.n))


def reduced_basis() -> tuple[Multivector, ...]:
    """Eight multivectors spanning the two-qubit state space (before projection)."""
    one = Multivector.scalar(msta_algebra(2))
    a1 = particle_bivector(2, 0, 1)
    b = [particle_bivector(2, 1, k) for k in (1, 2, 3)]
    return (one, *b, a1, a1 * b[0], a1 * b[1], a1 * b[2])
