"""Dense real Clifford algebras Cl(p, q) and their tensor products.

Multivectors store one coefficient per basis blade.  A blade is addressed by
a bitmask: bit ``i`` set means basis vector ``e_i`` is a factor, and the
factors are kept in ascending index order.  Basis vectors ``0 .. p-1`` square
to +1, the remaining ``q`` square to -1.

:class:`ProductSignature` glues ``n`` copies of one algebra together with
*commuting* factors, which is how the multiparticle Pauli algebra is built.
Its masks are the concatenation of the factor masks (factor 0 in the low
bits), so products still combine masks by XOR.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "Signature",
    "ProductSignature",
    "Blade",
    "Multivector",
    "CL3",
    "STA",
    "blade_product",
    "gp",
    "wedge",
    "grade_project",
    "reversion",
    "clifford_conjugate",
    "grade_involution",
    "exp_bivector",
    "spacetime_split",
    "basis_vector",
    "pseudoscalar",
]

ATOL = 1e-12
MAX_DIM = 16
# Above this many blades the product tables are not cached.
_TABLE_LIMIT = 1024
# Up to this many blades the product is a dense gather (no sparsity scan).
_DENSE_LIMIT = 64


def _popcount(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    count = np.zeros_like(x)
    while np.any(x):
        count += x & 1
        x = x >> 1
    return count


def _reorder_parity(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Parity of the transpositions needed to sort the factors of e_a e_b."""
    a = np.asarray(a, dtype=np.int64) >> 1
    b = np.asarray(b, dtype=np.int64)
    swaps = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    while np.any(a):
        swaps += _popcount(a & b)
        a = a >> 1
    return swaps & 1


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q) of a real Clifford algebra."""

    p: int
    q: int = 0

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature counts must be non-negative, got ({self.p}, {self.q})")
        if self.p + self.q > MAX_DIM:
            raise ValueError(f"p + q = {self.p + self.q} exceeds the cap of {MAX_DIM}")

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def n_blades(self) -> int:
        return 1 << self.dim

    @cached_property
    def _neg_mask(self) -> int:
        return ((1 << self.dim) - 1) & ~((1 << self.p) - 1)

    def signs(self, a, b) -> np.ndarray:
        """Sign of e_a e_b relative to the canonical blade e_(a^b)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        flips = _reorder_parity(a, b) + _popcount(a & b & self._neg_mask)
        return 1 - 2 * (flips & 1)

    @cached_property
    def grades(self) -> np.ndarray:
        return _popcount(np.arange(self.n_blades))

    @cached_property
    def reversion_signs(self) -> np.ndarray:
        k = self.grades
        return np.where((k * (k - 1) // 2) % 2, -1.0, 1.0)

    @cached_property
    def involution_signs(self) -> np.ndarray:
        return np.where(self.grades % 2, -1.0, 1.0)

    def blade_name(self, mask: int) -> str:
        if mask == 0:
            return "1"
        return "e" + "".join(str(i) for i in range(self.dim) if mask >> i & 1)


@dataclass(frozen=True)
class ProductSignature:
    """``n`` mutually commuting copies of ``base`` (an ungraded tensor product)."""

    base: Signature
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a product needs at least one factor")
        if self.base.dim * self.n > MAX_DIM:
            raise ValueError("product algebra exceeds the dimension cap")

    @property
    def dim(self) -> int:
        return self.base.dim * self.n

    @property
    def n_blades(self) -> int:
        return 1 << self.dim

    def _split(self, mask):
        width = self.base.dim
        full = (1 << width) - 1
        mask = np.asarray(mask, dtype=np.int64)
        return [(mask >> (width * f)) & full for f in range(self.n)]

    def signs(self, a, b) -> np.ndarray:
        out = np.ones(np.broadcast(np.asarray(a), np.asarray(b)).shape, dtype=np.int64)
        for fa, fb in zip(self._split(a), self._split(b)):
            out = out * self.base.signs(fa, fb)
        return out

    @cached_property
    def grades(self) -> np.ndarray:
        return _popcount(np.arange(self.n_blades))

    @cached_property
    def reversion_signs(self) -> np.ndarray:
        out = np.ones(self.n_blades)
        for part in self._split(np.arange(self.n_blades)):
            out = out * self.base.reversion_signs[part]
        return out

    @cached_property
    def involution_signs(self) -> np.ndarray:
        return np.where(self.grades % 2, -1.0, 1.0)

    def blade_name(self, mask: int) -> str:
        if mask == 0:
            return "1"
        names = []
        for f, part in enumerate(self._split(mask)):
            if part:
                names.append(f"{self.base.blade_name(int(part))}^{f + 1}")
        return "".join(names)


Algebra = Union[Signature, ProductSignature]

CL3 = Signature(3, 0)
#: Spacetime algebra Cl(1,3); basis index 0 is the timelike vector.
STA = Signature(1, 3)


@lru_cache(maxsize=None)
def _tables(alg: Algebra) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(alg.n_blades)
    a, b = np.meshgrid(idx, idx, indexing="ij")
    return (a ^ b), alg.signs(a, b).astype(float)


@lru_cache(maxsize=None)
def _gather_tables(alg: Algebra) -> tuple[np.ndarray, np.ndarray]:
    """For output blade k and left blade i the right blade is j = i ^ k.

    Returns (j, sign) arrays of shape (n, n) indexed [k, i], so that
    (a * b)_k = sum_i sign[k, i] a_i b_j[k, i].
    """
    idx = np.arange(alg.n_blades)
    k, i = np.meshgrid(idx, idx, indexing="ij")
    j = k ^ i
    return j, alg.signs(i, j).astype(float)


@dataclass(frozen=True)
class Blade:
    mask: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"blade sign must be +1 or -1, got {self.sign}")


def blade_product(a: Blade, b: Blade, sig: Algebra) -> Blade:
    limit = sig.n_blades
    if not (0 <= a.mask < limit and 0 <= b.mask < limit):
        raise ValueError(f"blade masks {a.mask}, {b.mask} do not fit in {sig}")
    s = int(sig.signs(a.mask, b.mask))
    return Blade(a.mask ^ b.mask, a.sign * b.sign * s)


class Multivector:
    """Element of a Clifford algebra with dense real coefficients.

    Instances are treated as immutable; the coefficient array is read-only.
    ``*`` is the geometric product, ``^`` the outer product and ``~`` the
    reversion.
    """

    __slots__ = ("sig", "coeffs")
    __array_priority__ = 1000

    def __init__(self, sig: Algebra, coeffs=None):
        if coeffs is None:
            arr = np.zeros(sig.n_blades)
        else:
            arr = np.array(coeffs, dtype=float)
            if arr.shape != (sig.n_blades,):
                raise ValueError(
                    f"expected {sig.n_blades} coefficients for {sig}, got shape {arr.shape}"
                )
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # construction helpers
    @classmethod
    def scalar(cls, sig: Algebra, value: float = 1.0) -> "Multivector":
        c = np.zeros(sig.n_blades)
        c[0] = value
        return cls(sig, c)

    @classmethod
    def blade(cls, sig: Algebra, mask: int, value: float = 1.0) -> "Multivector":
        c = np.zeros(sig.n_blades)
        c[mask] = value
        return cls(sig, c)

    @classmethod
    def from_indices(cls, sig: Algebra, indices: Sequence[int], value: float = 1.0) -> "Multivector":
        """Product of basis vectors in the given order, e.g. ``(1, 0)`` is e1 e0."""
        out = cls.scalar(sig, value)
        for i in indices:
            out = out * cls.blade(sig, 1 << i)
        return out

    # arithmetic
    def _check(self, other: "Multivector"):
        if other.sig != self.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")

    def _coerce(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if np.isscalar(other):
            return Multivector.scalar(self.sig, float(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(self.sig, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if np.isscalar(other):
            return Multivector(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return Multivector(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if np.isscalar(other):
            return Multivector(self.sig, self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        return wedge(self, other)

    def __invert__(self):
        return reversion(self)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    # queries
    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.linalg.norm(self.coeffs))

    def is_close(self, other, atol: float = ATOL) -> bool:
        other = self._coerce(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs), initial=0.0) <= atol)

    def max_diff(self, other: "Multivector") -> float:
        self._check(other)
        return float(np.max(np.abs(self.coeffs - other.coeffs)))

    def grades_present(self, atol: float = ATOL) -> set[int]:
        nz = np.abs(self.coeffs) > atol
        return set(int(g) for g in self.sig.grades[nz])

    def is_grade(self, k: int, atol: float = ATOL) -> bool:
        return self.grades_present(atol) <= {k}

    def terms(self, atol: float = 0.0) -> Iterable[tuple[int, float]]:
        for mask in np.flatnonzero(np.abs(self.coeffs) > atol):
            yield int(mask), float(self.coeffs[mask])

    def __repr__(self):
        parts = [f"{c:+.6g}*{self.sig.blade_name(m)}" for m, c in self.terms(1e-15)]
        return f"Multivector({' '.join(parts) or '0'})"


def basis_vector(sig: Algebra, i: int) -> Multivector:
    if not 0 <= i < sig.dim:
        raise ValueError(f"basis index {i} out of range for dimension {sig.dim}")
    return Multivector.blade(sig, 1 << i)


def pseudoscalar(sig: Signature) -> Multivector:
    return Multivector.blade(sig, sig.n_blades - 1)


def gp(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product."""
    a._check(b)
    sig = a.sig
    n = sig.n_blades
    if n <= _DENSE_LIMIT:
        j, sign = _gather_tables(sig)
        return Multivector(sig, (sign * b.coeffs[j]) @ a.coeffs)
    ia = np.flatnonzero(a.coeffs)
    ib = np.flatnonzero(b.coeffs)
    out = np.zeros(n)
    if ia.size == 0 or ib.size == 0:
        return Multivector(sig, out)
    weights = np.outer(a.coeffs[ia], b.coeffs[ib])
    if sig.n_blades <= _TABLE_LIMIT:
        index, sign = _tables(sig)
        sub = np.ix_(ia, ib)
        target, weights = index[sub], weights * sign[sub]
    else:
        ga, gb = np.meshgrid(ia, ib, indexing="ij")
        target, weights = ga ^ gb, weights * sig.signs(ga, gb)
    out += np.bincount(target.ravel(), weights=weights.ravel(), minlength=sig.n_blades)
    return Multivector(sig, out)


def grade_project(m: Multivector, k: int) -> Multivector:
    if not 0 <= k <= m.sig.dim:
        raise ValueError(f"grade {k} out of range 0..{m.sig.dim}")
    return Multivector(m.sig, np.where(m.sig.grades == k, m.coeffs, 0.0))


def reversion(m: Multivector) -> Multivector:
    """Reverse the order of vector factors in every blade (the dagger)."""
    return Multivector(m.sig, m.coeffs * m.sig.reversion_signs)


def grade_involution(m: Multivector) -> Multivector:
    return Multivector(m.sig, m.coeffs * m.sig.involution_signs)


def clifford_conjugate(m: Multivector) -> Multivector:
    """Reversion composed with the grade involution."""
    return Multivector(m.sig, m.coeffs * m.sig.reversion_signs * m.sig.involution_signs)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Outer product: the grade r+s part of each pair of homogeneous pieces."""
    a._check(b)
    sig = a.sig
    ia = np.flatnonzero(a.coeffs)
    ib = np.flatnonzero(b.coeffs)
    out = np.zeros(sig.n_blades)
    if ia.size and ib.size:
        ga, gb = np.meshgrid(ia, ib, indexing="ij")
        keep = (ga & gb) == 0
        w = np.outer(a.coeffs[ia], b.coeffs[ib]) * sig.signs(ga, gb)
        out += np.bincount((ga ^ gb)[keep], weights=w[keep], minlength=sig.n_blades)
    return Multivector(sig, out)


def exp_bivector(b: Multivector, atol: float = 1e-10) -> Multivector:
    """Closed-form exponential of a bivector whose square is a non-positive scalar."""
    if not b.is_grade(2):
        raise ValueError("exp_bivector expects a pure bivector")
    phi = float(np.sqrt(max((reversion(b) * b).scalar_part, 0.0)))
    if phi == 0.0:
        if b.norm() > atol:
            raise ValueError("bivector does not square to a negative scalar")
        return Multivector.scalar(b.sig)
    sq = b * b
    if not sq.is_close(Multivector.scalar(b.sig, -phi * phi), atol=atol * max(1.0, phi * phi)):
        raise ValueError("bivector does not square to a negative scalar")
    return Multivector.scalar(b.sig, np.cos(phi)) + b * (np.sin(phi) / phi)


def spacetime_split(a: Multivector, timelike_index: int = 0) -> Multivector:
    """Relative scalar plus relative vector of an STA vector, ``a gamma_t``."""
    if not a.is_grade(1, atol=0.0):
        raise ValueError("spacetime_split expects a grade-1 multivector")
    return a * basis_vector(a.sig, timelike_index)
