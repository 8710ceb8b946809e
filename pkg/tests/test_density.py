import math

import numpy as np
import pytest

from gaqc.clifford import CL3, Multivector
from gaqc.density import (
    density_matrix,
    ensemble_density,
    expectation,
    mixed_density,
    multiqubit_density,
    polarization,
    pure_density,
)
from gaqc.msta import bell_state, encode_basis, spinor_to_mv
from gaqc.oracle import PAULI, partial_trace

from helpers import random_spinor, random_unit_vector

ONE = Multivector.scalar(CL3)
S3 = Multivector.blade(CL3, 0b100)


def outer(v):
    return np.outer(v, v.conj())


def test_pure_density_of_zero_state():
    d = pure_density(encode_basis("0"))
    assert d.mv.is_close((ONE + S3) * 0.5)
    assert d.kind == "pure"


def test_pure_density_spin_vector_is_unit():
    rng = np.random.default_rng(0)
    for _ in range(200):
        d = pure_density(spinor_to_mv(random_spinor(1, rng)))
        assert abs(np.linalg.norm(polarization(d)) - 1) < 1e-12
        assert d.mv.grades_present() <= {0, 1}


def test_pure_density_requires_normalised_state():
    with pytest.raises(ValueError):
        pure_density(spinor_to_mv([2, 0]))
    with pytest.raises(ValueError):
        pure_density(encode_basis("00"))


def test_mixed_density():
    rng = np.random.default_rng(1)
    s = random_unit_vector(rng)
    d = mixed_density([(0.5, s), (0.5, -s)])
    assert d.mv.is_close(ONE * 0.5)
    assert d.kind == "mixed"
    same = mixed_density([(0.3, s), (0.7, s)])
    assert same.kind == "pure"
    for _ in range(100):
        k = int(rng.integers(1, 5))
        p = rng.dirichlet(np.ones(k))
        d = mixed_density([(pi, random_unit_vector(rng)) for pi in p])
        assert np.linalg.norm(polarization(d)) <= 1 + 1e-12
    with pytest.raises(ValueError):
        mixed_density([(0.5, s)])
    with pytest.raises(ValueError):
        mixed_density([(1.5, s), (-0.5, s)])
    with pytest.raises(ValueError):
        mixed_density([(1.0, 2 * s)])


def test_mixed_density_is_convex():
    rng = np.random.default_rng(2)
    a, b = random_unit_vector(rng), random_unit_vector(rng)
    mix = mixed_density([(0.25, a), (0.75, b)]).mv
    parts = mixed_density([(1.0, a)]).mv * 0.25 + mixed_density([(1.0, b)]).mv * 0.75
    assert mix.is_close(parts, 1e-15)


def test_expectation_matches_oracle_trace():
    rng = np.random.default_rng(3)
    assert expectation(pure_density(encode_basis("0")), 3) == 1
    for k in (1, 2, 3):
        assert expectation(mixed_density([(0.5, (0, 0, 1)), (0.5, (0, 0, -1))]), k) == 0
    for _ in range(50):
        p = rng.dirichlet(np.ones(3))
        d = mixed_density([(pi, random_unit_vector(rng)) for pi in p])
        rho = density_matrix(d)
        for k in (1, 2, 3):
            ref = np.trace(rho @ PAULI[k - 1]).real
            assert abs(expectation(d, k) - ref) < 1e-12
    with pytest.raises(ValueError):
        expectation(d, 4)


@pytest.mark.parametrize("n", [1, 2])
def test_multiqubit_density_image_is_projector(n):
    rng = np.random.default_rng(4)
    for _ in range(50):
        v = random_spinor(n, rng)
        rho = density_matrix(multiqubit_density(spinor_to_mv(v)))
        assert np.allclose(rho, outer(v), atol=1e-12)


def test_multiqubit_density_reduces_to_pure_density():
    rng = np.random.default_rng(5)
    for _ in range(50):
        m = spinor_to_mv(random_spinor(1, rng))
        assert multiqubit_density(m).mv.is_close(pure_density(m).mv, 1e-12)


def test_two_qubit_basis_density():
    rho = density_matrix(multiqubit_density(encode_basis("00")))
    assert np.allclose(rho, np.diag([1, 0, 0, 0]), atol=1e-15)


def test_bell_density_purity_and_reduced_state():
    rho = density_matrix(multiqubit_density(bell_state(1)))
    assert abs(np.trace(rho @ rho).real - 1) < 1e-12
    reduced = partial_trace(rho, [0], 2)
    P = [np.trace(reduced @ p).real for p in PAULI]
    assert max(abs(x) for x in P) < 1e-12


def test_ensemble_density_averages_products():
    rng = np.random.default_rng(6)
    states = [random_spinor(2, rng) for _ in range(3)]
    p = [0.2, 0.3, 0.5]
    d = ensemble_density([(pi, spinor_to_mv(v)) for pi, v in zip(p, states)])
    ref = sum(pi * outer(v) for pi, v in zip(p, states))
    assert np.allclose(density_matrix(d), ref, atol=1e-12)
    assert d.kind == "mixed"
    with pytest.raises(ValueError):
        ensemble_density([(0.5, spinor_to_mv(states[0]))])
    with pytest.raises(ValueError):
        ensemble_density([(0.5, spinor_to_mv(states[0])), (0.5, encode_basis("0"))])


def test_polarization_requires_one_qubit():
    with pytest.raises(ValueError):
        polarization(multiqubit_density(bell_state(2)))
    with pytest.raises(ValueError):
        expectation(multiqubit_density(bell_state(2)), 1)
    assert math.isclose(np.trace(density_matrix(multiqubit_density(bell_state(3)))).real, 1)
