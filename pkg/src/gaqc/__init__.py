"""Quantum circuits in geometric algebra.

Qubit states are multivectors of the multiparticle Pauli algebra, gates are
multivector formulas, single-qubit unitaries are rotors, and every result can
be checked against a plain complex-matrix simulator in :mod:`gaqc.oracle`.
"""
from .circuit import Circuit, GateKind, Op
from .clifford import CL3, STA, Multivector, ProductSignature, Signature
from .density import DensityGA, density_matrix, ensemble_density, expectation, mixed_density, multiqubit_density, pure_density
from .gates import apply_op, run_circuit
from .msta import MstaState, StateError, bell_state, encode_basis, mv_to_spinor, spinor_to_mv
from .parser import CircuitSyntaxError, Diagnostic, format_circuit, parse_circuit
from .rotors import (
    AxisAngle,
    GateWord,
    Rotor,
    approximate_with_ht,
    boykin_axes,
    euler_decompose,
    rotor_from_axis_angle,
    rotor_from_su2,
    su2_from_rotor,
    universality_rotors,
)

__version__ = "0.1.0"
