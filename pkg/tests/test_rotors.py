import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaqc.circuit import GateKind
from gaqc.clifford import CL3, Multivector
from gaqc.gates import apply_hadamard, apply_T
from gaqc.msta import MstaState, mv_to_spinor, spinor_to_mv
from gaqc.oracle import gate_matrix, h_power, phase_invariant_error, su2_axis_angle, z_power
from gaqc.rotors import (
    AxisAngle,
    DegenerateRotorError,
    Rotor,
    approximate_with_ht,
    as_vector,
    bivector_basis,
    boykin_axes,
    canonical_sign,
    commutator,
    commutator_product,
    euler_decompose,
    euler_rotor,
    extract_axis_angle,
    hadamard_rotor,
    ht_words,
    rotate_vector,
    rotor_distance,
    rotor_from_axis_angle,
    rotor_from_su2,
    su2_from_rotor,
    universality_rotors,
    z_power_rotor,
)

from helpers import random_rotor_components, random_spinor, random_unit_vector

unit4 = st.lists(st.floats(-1, 1, allow_nan=False), min_size=4, max_size=4).filter(
    lambda v: np.linalg.norm(v) > 1e-3
)


def to_su2(u):
    """Scale a unitary into SU(2)."""
    return u / np.sqrt(np.linalg.det(u))


def test_axis_angle_examples():
    assert rotor_from_axis_angle((0, 0, 1), 0.0).is_close(Rotor.from_components([1, 0, 0, 0]))
    assert rotor_from_axis_angle((0, 0, 1), math.pi).is_close(Rotor.from_components([0, 0, 0, -1]))
    r = rotor_from_axis_angle((0, 0, 1), math.pi / 2)
    assert rotate_vector(r, (1, 0, 0)).is_close(as_vector((0, 1, 0)))
    with pytest.raises(ValueError):
        rotor_from_axis_angle((1, 1, 0), 1.0)


def test_hadamard_rotor_value():
    h = hadamard_rotor().components
    assert np.allclose(h, [0, -1 / math.sqrt(2), 0, -1 / math.sqrt(2)])


def test_rotor_validation():
    with pytest.raises(ValueError):
        Rotor(Multivector.scalar(CL3, 2.0))
    with pytest.raises(ValueError):
        Rotor(Multivector.blade(CL3, 1))


def test_rotate_vector_is_isometry_and_homomorphism():
    rng = np.random.default_rng(0)
    for _ in range(50):
        r1 = Rotor.from_components(random_rotor_components(rng))
        r2 = Rotor.from_components(random_rotor_components(rng))
        a = rng.normal(size=3)
        out = rotate_vector(r1, a)
        assert math.isclose(out.norm(), np.linalg.norm(a), rel_tol=1e-12)
        assert rotate_vector(r1 * r2, a).is_close(rotate_vector(r1, rotate_vector(r2, a)), 1e-12)
        assert rotate_vector(-r1, a).is_close(out, 1e-15)
    with pytest.raises(ValueError):
        rotate_vector(r1, Multivector.scalar(CL3))


def test_rotor_matches_oracle_rotation():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n, theta = random_unit_vector(rng), rng.uniform(0, 2 * math.pi)
        assert np.allclose(su2_from_rotor(rotor_from_axis_angle(n, theta)), su2_axis_angle(n, theta), atol=1e-12)


def test_rotor_left_multiplication_is_matrix_action():
    rng = np.random.default_rng(2)
    for _ in range(20):
        r = Rotor.from_components(random_rotor_components(rng))
        v = random_spinor(1, rng)
        got = mv_to_spinor(MstaState(1, r.mv * spinor_to_mv(v).mv))
        assert np.allclose(got, su2_from_rotor(r) @ v, atol=1e-12)


def test_table_iii_relations():
    B = bivector_basis()
    eps = np.zeros((3, 3, 3))
    for (a, b, c), sgn in zip(itertools.permutations(range(3)), (1, -1, -1, 1, 1, -1)):
        eps[a, b, c] = sgn
    one = Multivector.scalar(CL3)
    for l, m in itertools.product(range(3), repeat=2):
        comm = sum((B[k] * (-2 * eps[l, m, k]) for k in range(3)), Multivector(CL3))
        assert commutator(B[l], B[m]) == comm
        prod = one * -(l == m) - sum((B[k] * eps[l, m, k] for k in range(3)), Multivector(CL3))
        assert B[l] * B[m] == prod
    assert commutator_product(B[0], B[1]) == -B[2]
    assert (B[0] * B[0]) == -one


@settings(max_examples=100, deadline=None)
@given(unit4)
def test_su2_round_trip(v):
    r = Rotor.from_components(np.asarray(v) / np.linalg.norm(v))
    assert rotor_from_su2(su2_from_rotor(r)).is_close(r, 1e-12)
    u = su2_from_rotor(r)
    assert np.allclose(su2_from_rotor(rotor_from_su2(u)), u, atol=1e-12)


def test_rotor_from_su2_examples_and_errors():
    assert rotor_from_su2(np.eye(2)).is_close(Rotor.from_components([1, 0, 0, 0]))
    theta = 0.9
    r = rotor_from_su2(su2_axis_angle([0, 0, 1], theta))
    assert np.allclose(r.components, [math.cos(theta / 2), 0, 0, -math.sin(theta / 2)])
    with pytest.raises(ValueError):
        rotor_from_su2(np.diag([1, 1j]))  # det != 1
    with pytest.raises(ValueError):
        rotor_from_su2(np.eye(2) * 2)


def test_canonical_sign():
    assert canonical_sign(Rotor.from_components([-0.6, 0.8, 0, 0])).components[0] == 0.6
    assert canonical_sign(Rotor.from_components([0, -1, 0, 0])).components[1] == 1


def test_rotor_distance_equals_phase_invariant_error():
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = Rotor.from_components(random_rotor_components(rng))
        b = Rotor.from_components(random_rotor_components(rng))
        ref = phase_invariant_error(su2_from_rotor(a), su2_from_rotor(b))
        assert math.isclose(rotor_distance(a, b), ref, abs_tol=1e-12)
        assert rotor_distance(a, -b) == rotor_distance(a, b)


def test_gate_rotors_match_oracle_up_to_phase():
    assert phase_invariant_error(su2_from_rotor(hadamard_rotor()), gate_matrix(GateKind.H)) < 1e-12
    for alpha in (0.25, 0.5, -0.3):
        assert phase_invariant_error(su2_from_rotor(z_power_rotor(alpha)), z_power(alpha)) < 1e-12


def test_universality_rotors_coefficients():
    r2 = math.sqrt(2)
    R1, R2 = universality_rotors()
    c = 0.5 * (1 + 1 / r2)
    assert np.max(np.abs(R1.components - [c, -1 / (2 * r2), 0.5 * (1 - 1 / r2), 1 / (2 * r2)])) < 1e-12
    assert np.max(np.abs(R2.components - [c, -0.5 * (0.5 - 1 / r2), 0.5, 0.5 * (0.5 - 1 / r2)])) < 1e-12


def test_universality_rotors_match_matrix_products():
    H = gate_matrix(GateKind.H)
    x_quarter = H @ z_power(0.25) @ H
    u1 = z_power(-0.25) @ x_quarter
    u2 = h_power(-0.5) @ u1 @ h_power(0.5)
    R1, R2 = universality_rotors()
    for u, r in ((u1, R1), (u2, R2)):
        assert canonical_sign(rotor_from_su2(to_su2(u))).is_close(r, 1e-12)


def test_extract_axis_angle():
    a1, a2 = boykin_axes()
    c = 0.5 * (1 + 1 / math.sqrt(2))
    assert math.isclose(math.cos(a1.angle), c, abs_tol=1e-12)
    assert abs(a1.lam - a2.lam) < 1e-12
    assert 0 < a1.lam < 1
    assert abs(np.dot(a1.axis, a2.axis)) < 1e-12
    n1, n2 = a1.axis_mv, a2.axis_mv
    assert (n1 * n2).is_close(-(n2 * n1), 1e-12)
    with pytest.raises(DegenerateRotorError):
        extract_axis_angle(Rotor.from_components([-1, 0, 0, 0]))


def test_axis_angle_round_trip():
    rng = np.random.default_rng(4)
    for _ in range(20):
        r = canonical_sign(Rotor.from_components(random_rotor_components(rng)))
        aa = extract_axis_angle(r)
        rebuilt = [math.cos(aa.angle), *(math.sin(aa.angle) * aa.axis)]
        assert np.allclose(rebuilt, r.components, atol=1e-12)
        assert isinstance(aa, AxisAngle)


def test_euler_decompose_random():
    n1, n2 = (a.axis for a in boykin_axes())
    rng = np.random.default_rng(5)
    for _ in range(200):
        target = Rotor.from_components(random_rotor_components(rng))
        a, b, g = euler_decompose(target, n1, n2)
        assert rotor_distance(euler_rotor(n1, n2, a, b, g), target) < 1e-10
        assert abs(target.components[0] - math.cos(b) * math.cos(a + g)) < 1e-12
        assert -math.pi / 2 <= b <= math.pi / 2


def test_euler_single_axis():
    a1, a2 = boykin_axes()
    target = Rotor.from_components([math.cos(a1.angle), *(math.sin(a1.angle) * a1.axis)])
    a, b, g = euler_decompose(target, a1.axis, a2.axis)
    assert math.isclose(a, a1.angle, abs_tol=1e-12)
    assert abs(b) < 1e-12 and g == 0.0


def test_euler_rejects_bad_axes():
    target = Rotor.from_components([1, 0, 0, 0])
    with pytest.raises(ValueError):
        euler_decompose(target, (1, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        euler_decompose(target, (2, 0, 0), (0, 1, 0))


def test_ht_words_structure():
    words, values = ht_words(6)
    assert words[0] == ""
    assert len(set(words)) == len(words)
    assert all(set(w) <= {"H", "T"} for w in words)
    # every stored value is the left-to-right product
    gens = {"H": hadamard_rotor(), "T": z_power_rotor(0.25)}
    for w, v in zip(words[:40], values[:40]):
        r = Rotor.from_components([1, 0, 0, 0])
        for letter in w:
            r = r * gens[letter]
        assert np.allclose(r.components, v, atol=1e-12)
    # no word equals another up to sign
    keys = {tuple(np.round(canonical_sign(Rotor.from_components(v)).components, 8)) for v in values}
    assert len(keys) == len(words)


def test_ht_word_acts_like_circuit():
    # the word's rotor acts as the gate sequence applied right-to-left, up to phase
    word = approximate_with_ht(Rotor.from_components([1, 0, 0, 0]), 0)
    assert word.letters == "" and word.error == 0
    rng = np.random.default_rng(6)
    v = random_spinor(1, rng)
    m = spinor_to_mv(v)
    m = apply_T(0, apply_hadamard(0, m))  # H then T: matrix T H, word "TH"
    r = z_power_rotor(0.25) * hadamard_rotor()
    got = su2_from_rotor(r) @ v
    ref = mv_to_spinor(m)
    assert abs(abs(np.vdot(got, ref)) - 1) < 1e-12


def test_approximate_with_ht_examples():
    w = approximate_with_ht(hadamard_rotor(), 3)
    assert w.letters == "H" and w.error < 1e-12
    t2 = z_power_rotor(0.5)
    w = approximate_with_ht(t2, 4)
    assert len(w) == 2 and w.error < 1e-12
    with pytest.raises(ValueError):
        approximate_with_ht(t2, 21)


def test_ht_error_non_increasing():
    rng = np.random.default_rng(7)
    for _ in range(10):
        target = Rotor.from_components(random_rotor_components(rng))
        errs = [approximate_with_ht(target, L).error for L in (4, 8, 12)]
        assert errs[0] >= errs[1] >= errs[2]
