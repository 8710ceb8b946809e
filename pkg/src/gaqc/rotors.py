"""Rotors of Cl(3), their SU(2) images, and H/T gate-set universality.

A rotor ``r0 + r1 i s1 + r2 i s2 + r3 i s3`` corresponds to the SU(2) matrix
``r0 I + i (r1 X + r2 Y + r3 Z)``; left multiplication of a one-qubit state by
the rotor is the matrix acting on the spinor.  Rotors ``R`` and ``-R`` give the
same rotation of vectors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from .clifford import CL3, Multivector, exp_bivector, pseudoscalar

__all__ = [
    "Rotor",
    "AxisAngle",
    "GateWord",
    "DegenerateRotorError",
    "as_vector",
    "rotor_from_axis_angle",
    "rotate_vector",
    "bivector_basis",
    "commutator",
    "commutator_product",
    "rotor_from_su2",
    "su2_from_rotor",
    "canonical_sign",
    "rotor_distance",
    "hadamard_rotor",
    "z_power_rotor",
    "h_power_rotor",
    "universality_rotors",
    "extract_axis_angle",
    "boykin_axes",
    "euler_rotor",
    "euler_decompose",
    "ht_words",
    "approximate_with_ht",
]

ATOL = 1e-12
_I = pseudoscalar(CL3)
# masks of 1, i s1 = e2e3, i s2 = e3e1, i s3 = e1e2 and the sign of each in canonical order
_EVEN_MASKS = np.array([0b000, 0b110, 0b101, 0b011])
_EVEN_SIGNS = np.array([1.0, 1.0, -1.0, 1.0])


class DegenerateRotorError(ValueError):
    """The rotor is +-1, so its rotation axis is undefined."""


def _vec3(mv: Multivector) -> np.ndarray:
    return np.array([mv.coeffs[1], mv.coeffs[2], mv.coeffs[4]])


def as_vector(v: Union[Multivector, Sequence[float]]) -> Multivector:
    """Grade-1 Cl(3) multivector from either a multivector or three components."""
    if isinstance(v, Multivector):
        if v.sig != CL3 or not v.is_grade(1):
            raise ValueError("expected a grade-1 Cl(3) multivector")
        return v
    x, y, z = (float(c) for c in v)
    c = np.zeros(8)
    c[[1, 2, 4]] = x, y, z
    return Multivector(CL3, c)


def _even_from4(r: Sequence[float]) -> Multivector:
    c = np.zeros(8)
    c[_EVEN_MASKS] = np.asarray(r, dtype=float) * _EVEN_SIGNS
    return Multivector(CL3, c)


@dataclass(frozen=True)
class Rotor:
    """Unit even element of Cl(3)."""

    mv: Multivector

    def __post_init__(self):
        if self.mv.sig != CL3:
            raise ValueError("rotors live in Cl(3)")
        if not self.mv.grades_present(1e-9) <= {0, 2}:
            raise ValueError("rotor must be even")
        norm = (self.mv * ~self.mv).scalar_part
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"rotor is not normalised (R R^dag = {norm:.3g})")

    @classmethod
    def from_components(cls, r: Sequence[float]) -> "Rotor":
        """From (r0, r1, r2, r3) on (1, i s1, i s2, i s3)."""
        return cls(_even_from4(r))

    @property
    def components(self) -> np.ndarray:
        return self.mv.coeffs[_EVEN_MASKS] * _EVEN_SIGNS

    def __mul__(self, other: "Rotor") -> "Rotor":
        return Rotor(self.mv * other.mv)

    def __neg__(self) -> "Rotor":
        return Rotor(-self.mv)

    def reverse(self) -> "Rotor":
        return Rotor(~self.mv)

    def is_close(self, other: "Rotor", atol: float = ATOL) -> bool:
        return self.mv.is_close(other.mv, atol)


@dataclass(frozen=True)
class AxisAngle:
    """``rotor = cos(angle) + sin(angle) i axis``; ``lam`` is ``angle / pi``."""

    axis: np.ndarray
    angle: float

    @property
    def lam(self) -> float:
        return self.angle / math.pi

    @property
    def axis_mv(self) -> Multivector:
        return as_vector(self.axis)


@dataclass(frozen=True)
class GateWord:
    letters: str
    value: Rotor
    error: float

    def __len__(self):
        return len(self.letters)


def rotor_from_axis_angle(axis, theta: float) -> Rotor:
    """exp(-i n theta / 2): rotation by ``theta`` about the unit vector ``n``."""
    n = as_vector(axis)
    length = n.norm()
    if abs(length - 1.0) > 1e-9:
        raise ValueError(f"rotation axis must be a unit vector, |n| = {length:.6g}")
    return Rotor(exp_bivector(_I * n * (-theta / 2)))


def rotate_vector(r: Rotor, a) -> Multivector:
    v = as_vector(a)
    return (r.mv * v * ~r.mv).grade(1)


def bivector_basis() -> tuple[Multivector, Multivector, Multivector]:
    """B1 = s2 s3, B2 = s3 s1, B3 = s1 s2."""
    s = [Multivector.blade(CL3, 1 << k) for k in range(3)]
    return s[1] * s[2], s[2] * s[0], s[0] * s[1]


def commutator(x: Multivector, y: Multivector) -> Multivector:
    """[x, y] = xy - yx."""
    return x * y - y * x


def commutator_product(x: Multivector, y: Multivector) -> Multivector:
    """x cross y = (xy - yx) / 2."""
    return commutator(x, y) * 0.5


def rotor_from_su2(u, atol: float = 1e-9) -> Rotor:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if not np.allclose(u @ u.conj().T, np.eye(2), atol=atol):
        raise ValueError("matrix is not unitary")
    if abs(np.linalg.det(u) - 1) > atol:
        raise ValueError("matrix does not have unit determinant")
    x, y, z = (np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.diag([1, -1]))
    r0 = np.trace(u).real / 2
    rk = [(np.trace(u @ p) / 2j).real for p in (x, y, z)]
    return Rotor.from_components([r0, *rk])


def su2_from_rotor(r: Rotor) -> np.ndarray:
    r0, r1, r2, r3 = r.components
    return np.array([[r0 + 1j * r3, 1j * r1 + r2], [1j * r1 - r2, r0 - 1j * r3]])


def canonical_sign(r: Rotor, atol: float = ATOL) -> Rotor:
    """Pick the representative of {r, -r} with non-negative scalar part.

    A zero scalar part is resolved by making the first non-zero bivector
    component positive.
    """
    for c in r.components:
        if abs(c) > atol:
            return r if c > 0 else -r
    return r


def rotor_distance(a: Rotor, b: Rotor) -> float:
    """min(||a - b||, ||a + b||) over the four rotor components.

    Equals min_phi ||U - e^{i phi} V||_op for the corresponding SU(2) matrices.
    """
    d = a.components - b.components
    s = a.components + b.components
    return float(min(np.linalg.norm(d), np.linalg.norm(s)))


_HADAMARD_AXIS = (1 / math.sqrt(2), 0.0, 1 / math.sqrt(2))


def hadamard_rotor() -> Rotor:
    """-i (s1 + s3)/sqrt 2, the rotation by pi about (s1 + s3)/sqrt 2."""
    return rotor_from_axis_angle(_HADAMARD_AXIS, math.pi)


def z_power_rotor(alpha: float) -> Rotor:
    """SU(2) part of diag(1, e^{i pi alpha}) = e^{i pi alpha/2} exp(-i s3 pi alpha / 2)."""
    return rotor_from_axis_angle((0, 0, 1), math.pi * alpha)


def h_power_rotor(beta: float) -> Rotor:
    """SU(2) part of the principal power H^beta."""
    return rotor_from_axis_angle(_HADAMARD_AXIS, math.pi * beta)


def universality_rotors() -> tuple[Rotor, Rotor]:
    """Rotors of Z^(-1/4) X^(1/4) and H^(-1/2) Z^(-1/4) X^(1/4) H^(1/2), X^(1/4) = H Z^(1/4) H.

    Built from the rotor of each factor; the global phases drop out and the
    overall sign is fixed by :func:`canonical_sign`.
    """
    h = hadamard_rotor()
    x_quarter = h * z_power_rotor(0.25) * h
    r1 = canonical_sign(z_power_rotor(-0.25) * x_quarter)
    r2 = canonical_sign(h_power_rotor(-0.5) * r1 * h_power_rotor(0.5))
    return r1, r2


def extract_axis_angle(r: Rotor, atol: float = 1e-12) -> AxisAngle:
    """Write ``r`` as cos(lam pi) + sin(lam pi) i n with lam in (0, 1)."""
    r0, *rk = r.components
    s = math.sqrt(max(0.0, 1.0 - min(1.0, r0 * r0)))
    rk = np.array(rk)
    bivector_size = float(np.linalg.norm(rk))
    if bivector_size <= atol:
        raise DegenerateRotorError("rotor is +-1; the axis is undefined")
    angle = math.atan2(bivector_size, r0)
    axis = rk / bivector_size
    if s > 0 and abs(s - bivector_size) > 1e-9:
        raise ValueError("rotor components are not normalised")
    return AxisAngle(axis=axis, angle=angle)


def boykin_axes() -> tuple[AxisAngle, AxisAngle]:
    r1, r2 = universality_rotors()
    return extract_axis_angle(r1), extract_axis_angle(r2)


def _exp_i_axis(n: np.ndarray, angle: float) -> Rotor:
    """exp(i n angle) = cos(angle) + sin(angle) i n."""
    return Rotor.from_components([math.cos(angle), *(math.sin(angle) * np.asarray(n))])


def euler_rotor(n1, n2, alpha: float, beta: float, gamma: float) -> Rotor:
    n1, n2 = np.asarray(n1, float), np.asarray(n2, float)
    return _exp_i_axis(n1, alpha) * _exp_i_axis(n2, beta) * _exp_i_axis(n1, gamma)


def euler_decompose(target: Rotor, n1, n2, atol: float = 1e-10) -> tuple[float, float, float]:
    """Angles with target = exp(i n1 alpha) exp(i n2 beta) exp(i n1 gamma).

    With n3 = n1 x n2 and the target written as w + x1 i n1 + x2 i n2 + x3 i n3:
    cos(b) e^{i(a+g)} = w + i x1 and sin(b) e^{i(g-a)} = x2 + i x3.  beta is
    returned in [0, pi/2].
    """
    n1, n2 = _vec3(as_vector(n1)), _vec3(as_vector(n2))
    for n in (n1, n2):
        if abs(np.linalg.norm(n) - 1) > 1e-9:
            raise ValueError("Euler axes must be unit vectors")
    if abs(n1 @ n2) > 1e-9:
        raise ValueError("Euler axes must be orthogonal")
    n3 = np.cross(n1, n2)
    w, *rk = target.components
    rk = np.array(rk)
    x1, x2, x3 = rk @ n1, rk @ n2, rk @ n3
    cb, sb = math.hypot(w, x1), math.hypot(x2, x3)
    beta = math.atan2(sb, cb)
    if sb <= 1e-14:
        alpha, gamma = math.atan2(x1, w), 0.0
    elif cb <= 1e-14:
        diff = math.atan2(x3, x2)
        alpha, gamma = -diff / 2, diff / 2
    else:
        total, diff = math.atan2(x1, w), math.atan2(x3, x2)
        alpha, gamma = (total - diff) / 2, (total + diff) / 2
    rebuilt = euler_rotor(n1, n2, alpha, beta, gamma)
    residual = rotor_distance(rebuilt, target)
    if residual > atol:
        raise ValueError(f"Euler reconstruction failed (residual {residual:.2e})")
    return alpha, beta, gamma


_LETTERS = {"H": hadamard_rotor, "T": lambda: z_power_rotor(0.25)}
_GRID = 1e-6


def _sign_key(v: np.ndarray) -> tuple:
    for c in v:
        if abs(c) > _GRID:
            if c < 0:
                v = -v
            break
    return tuple(np.round(v / _GRID).astype(np.int64))


@lru_cache(maxsize=8)
def ht_words(max_len: int) -> tuple[tuple[str, ...], np.ndarray]:
    """Distinct (up to sign) rotors of all words over {H, T} up to ``max_len``.

    Breadth-first, letters expanded in the order H then T, so the stored word
    for each value is the shortest and, among those, lexicographically first.
    A word ``w1 w2 ... wk`` has the rotor product R_w1 R_w2 ... R_wk.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    gens = {k: f().components for k, f in _LETTERS.items()}
    words = [""]
    values = [np.array([1.0, 0.0, 0.0, 0.0])]
    seen = {_sign_key(values[0])}
    frontier = [0]
    for _ in range(max_len):
        nxt = []
        for idx in frontier:
            for letter in ("H", "T"):
                # right-append: value_new = value * R_letter
                v = _right_mult(values[idx], gens[letter])
                key = _sign_key(v)
                if key in seen:
                    continue
                seen.add(key)
                words.append(words[idx] + letter)
                values.append(v)
                nxt.append(len(values) - 1)
        frontier = nxt
    return tuple(words), np.array(values)


def _right_mult(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Components of (a0 + a.iS)(b0 + b.iS) using (i s_j)(i s_k) = -delta_jk - eps_jkl i s_l."""
    a0, av = a[0], a[1:]
    b0, bv = b[0], b[1:]
    return np.concatenate(([a0 * b0 - av @ bv], a0 * bv + b0 * av - np.cross(av, bv)))


def approximate_with_ht(target: Rotor, max_len: int) -> GateWord:
    """Best word over {H, T} of length <= ``max_len`` by the phase-invariant error."""
    if max_len > 20:
        raise ValueError("max_len is capped at 20 for exhaustive search")
    words, values = ht_words(max_len)
    t = target.components
    err = np.minimum(np.linalg.norm(values - t, axis=1), np.linalg.norm(values + t, axis=1))
    best = float(err.min())
    # ties: shortest, then lexicographically smallest
    ties = [i for i in np.flatnonzero(err <= best + 1e-15)]
    i = min(ties, key=lambda j: (len(words[j]), words[j]))
    value = Rotor.from_components(values[i] / np.linalg.norm(values[i]))
    return GateWord(words[i], value, float(err[i]))
