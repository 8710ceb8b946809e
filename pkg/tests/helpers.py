"""Random generators shared by the test modules."""
import math

import numpy as np

from gaqc.circuit import Circuit, GateKind, Op
from gaqc.clifford import CL3, Multivector

ONE_QUBIT = [k for k in GateKind if k.n_qubits == 1]
TWO_QUBIT = [k for k in GateKind if k.n_qubits == 2]


def random_spinor(n, rng):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return v / np.linalg.norm(v)


def random_cl3(rng):
    return Multivector(CL3, rng.normal(size=8))


def random_unit_vector(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_rotor_components(rng):
    q = rng.normal(size=4)
    return q / np.linalg.norm(q)


def random_op(n, rng):
    kinds = ONE_QUBIT + (TWO_QUBIT if n == 2 else [])
    kind = kinds[rng.integers(len(kinds))]
    params = tuple(rng.uniform(-2 * math.pi, 2 * math.pi) for _ in range(kind.n_params))
    qubits = tuple(int(q) for q in rng.permutation(n)[: kind.n_qubits])
    return Op(kind, qubits, params)


def random_circuit(rng, n=None, max_len=20):
    n = int(rng.integers(1, 3)) if n is None else n
    length = int(rng.integers(0, max_len + 1))
    return Circuit(n, tuple(random_op(n, rng) for _ in range(length)))
