"""Density operators as multivectors.

For one qubit the density operator is ``(1 + P) / 2`` with ``P`` a vector of
length at most one.  For several qubits it is ``(psi E) E+ (psi E)~`` with
``E+`` the product of the idempotents ``(1 + s3^a) / 2``, averaged over an
ensemble.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .clifford import CL3, Multivector, reversion
from .msta import MstaState, correlator, msta_algebra, mv_to_spinor, particle_vector
from .rotors import as_vector

__all__ = [
    "DensityGA",
    "pure_density",
    "mixed_density",
    "multiqubit_density",
    "ensemble_density",
    "expectation",
    "polarization",
    "density_matrix",
]


@dataclass(frozen=True)
class DensityGA:
    n: int
    mv: Multivector
    kind: str = "pure"


def _s3() -> Multivector:
    return Multivector.blade(CL3, 0b100)


def _require_normalized(m: MstaState):
    norm = float(np.linalg.norm(mv_to_spinor(m)))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"state is not normalised (|psi| = {norm:.6g})")


def pure_density(m: MstaState) -> DensityGA:
    """psi (1 + s3)/2 psi^dag = (1 + s)/2 with spin vector s = psi s3 psi^dag."""
    if m.n != 1:
        raise ValueError("pure_density is defined for one qubit; use multiqubit_density")
    _require_normalized(m)
    spin = (m.mv * _s3() * reversion(m.mv)).grade(1)
    return DensityGA(1, (1 + spin) * 0.5, "pure")


def mixed_density(entries: Iterable[tuple[float, object]]) -> DensityGA:
    """(1 + P)/2 with P the probability-weighted mean of unit spin vectors."""
    entries = list(entries)
    probs = np.array([p for p, _ in entries], dtype=float)
    if probs.size == 0 or np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
        raise ValueError("probabilities must be non-negative and sum to 1")
    P = Multivector(CL3)
    for p, s in entries:
        v = as_vector(s)
        if abs(v.norm() - 1.0) > 1e-9:
            raise ValueError("spin vectors must have unit length")
        P = P + v * p
    kind = "pure" if abs(P.norm() - 1.0) <= 1e-12 else "mixed"
    return DensityGA(1, (1 + P) * 0.5, kind)


@lru_cache(maxsize=None)
def _e_plus(n: int) -> Multivector:
    out = Multivector.scalar(msta_algebra(n))
    for a in range(n):
        out = out * ((1 + particle_vector(n, a, 3)) * 0.5)
    return out


def multiqubit_density(m: MstaState) -> DensityGA:
    """(psi E_n) E+ (psi E_n)~ for a single normalised state."""
    _require_normalized(m)
    psi = m.mv * correlator(m.n)
    return DensityGA(m.n, psi * _e_plus(m.n) * reversion(psi), "pure")


def ensemble_density(entries: Sequence[tuple[float, MstaState]]) -> DensityGA:
    """Probability-weighted average of the whole product (psi E) E+ (psi E)~."""
    probs = np.array([p for p, _ in entries], dtype=float)
    if probs.size == 0 or np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
        raise ValueError("probabilities must be non-negative and sum to 1")
    n = entries[0][1].n
    total = Multivector(msta_algebra(n))
    for p, state in entries:
        if state.n != n:
            raise ValueError("all ensemble members need the same qubit count")
        total = total + multiqubit_density(state).mv * p
    kind = "pure" if len(entries) == 1 else "mixed"
    return DensityGA(n, total, kind)


def polarization(d: DensityGA) -> np.ndarray:
    """Components of P in rho = (1 + P)/2 (one qubit)."""
    if d.n != 1:
        raise ValueError("polarization is defined for one qubit")
    return 2 * np.array([d.mv.coeffs[1], d.mv.coeffs[2], d.mv.coeffs[4]])


def expectation(d: DensityGA, k: int) -> float:
    """tr(rho Sigma_k) = 2 <rho s_k>_0."""
    if d.n != 1:
        raise ValueError("expectation is defined for one qubit")
    if k not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {k}")
    return 2 * (d.mv * particle_vector(1, 0, k)).scalar_part


_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@lru_cache(maxsize=None)
def _blade_matrices() -> tuple[np.ndarray, ...]:
    """Pauli-matrix image of each Cl(3) blade (s_k -> Sigma_k, ascending product)."""
    out = []
    for mask in range(8):
        m = _PAULI[0]
        for k in range(3):
            if mask >> k & 1:
                m = m @ _PAULI[k + 1]
        out.append(m)
    return tuple(out)


def density_matrix(d: DensityGA) -> np.ndarray:
    """Complex matrix image: each particle's blade maps to a Pauli product, particles to Kronecker factors."""
    blades = _blade_matrices()
    dim = 2**d.n
    out = np.zeros((dim, dim), dtype=complex)
    for mask, c in d.mv.terms():
        m = np.eye(1, dtype=complex)
        for a in range(d.n):
            m = np.kron(m, blades[(mask >> (3 * a)) & 0b111])
        out += c * m
    return out
