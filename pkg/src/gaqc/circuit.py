"""Gate kinds and circuits shared by the multivector and matrix backends."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

__all__ = ["GateKind", "Op", "Circuit"]


class GateKind(Enum):
    X = "X"
    Y = "Y"
    Z = "Z"
    H = "H"
    S = "S"
    T = "T"
    #: diag(1, e^{i theta}); the rotation gate R_theta.
    RZ = "RZ"
    #: diag(1, e^{i pi alpha}).
    ZPOW = "ZPOW"
    #: principal power H^beta.
    HPOW = "HPOW"
    CNOT = "CNOT"
    CPHASE = "CPHASE"
    SWAP = "SWAP"

    @property
    def n_params(self) -> int:
        return 1 if self in (GateKind.RZ, GateKind.ZPOW, GateKind.HPOW) else 0

    @property
    def n_qubits(self) -> int:
        return 2 if self in (GateKind.CNOT, GateKind.CPHASE, GateKind.SWAP) else 1


@dataclass(frozen=True)
class Op:
    kind: GateKind
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if len(self.params) != self.kind.n_params:
            raise ValueError(
                f"{self.kind.value} takes {self.kind.n_params} parameter(s), got {len(self.params)}"
            )
        if len(self.qubits) != self.kind.n_qubits:
            raise ValueError(
                f"{self.kind.value} acts on {self.kind.n_qubits} qubit(s), got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind.value} requires distinct qubit indices")


@dataclass(frozen=True)
class Circuit:
    n: int
    ops: tuple[Op, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        if self.n < 1:
            raise ValueError("a circuit needs at least one qubit")
        for op in self.ops:
            if any(not 0 <= q < self.n for q in op.qubits):
                raise ValueError(f"{op.kind.value} index out of range for {self.n} qubit(s)")

    @classmethod
    def build(cls, n: int, ops: Iterable[tuple]) -> "Circuit":
        """Shorthand: ``Circuit.build(2, [("H", 0), ("CNOT", 0, 1), ("ZPOW", 0.25, 0)])``."""
        out = []
        for item in ops:
            kind = GateKind(item[0])
            rest = item[1:]
            params, qubits = rest[: kind.n_params], rest[kind.n_params :]
            out.append(Op(kind, tuple(qubits), tuple(params)))
        return cls(n, tuple(out))

    def __len__(self):
        return len(self.ops)
