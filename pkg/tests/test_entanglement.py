import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinnet.entanglement import (PHI_PLUS, concurrence, concurrence_eigen, concurrences, pure_pair, spin_flip,
                                  werner)
from spinnet.errors import InputError

from oracles import hermitian_concurrence, random_density, random_unitary

BELL = np.outer(PHI_PLUS, PHI_PLUS.conj())
KET00 = np.diag([1, 0, 0, 0]).astype(complex)


def test_spin_flip_examples():
    assert np.allclose(spin_flip(BELL), BELL)
    assert np.allclose(spin_flip(KET00), np.diag([0, 0, 0, 1]))
    assert np.allclose(spin_flip(np.eye(4) / 4), np.eye(4) / 4)


def test_concurrence_examples():
    assert concurrence(BELL) == pytest.approx(1, abs=1e-12)
    assert concurrence(KET00) == pytest.approx(0, abs=1e-12)
    assert concurrence(werner(0.25)) == pytest.approx(0, abs=1e-12)


def test_pure_pair_pi_over_6():
    v = pure_pair(np.pi / 6)
    rho = np.outer(v, v.conj())
    expected = hermitian_concurrence(rho)  # oracle
    assert expected == pytest.approx(np.sin(np.pi / 3), abs=1e-7)
    assert concurrence(rho) == pytest.approx(0.8660254037844386, abs=1e-12)
    assert concurrence(v) == pytest.approx(0.8660254037844386, abs=1e-12)


def test_werner_0_9():
    rho = werner(0.9)
    assert hermitian_concurrence(rho) == pytest.approx(0.8, abs=1e-10)
    assert concurrence(rho) == pytest.approx(0.8, abs=1e-12)


def test_pure_pair_examples():
    assert np.allclose(pure_pair(0), [1, 0, 0, 0])
    assert np.allclose(pure_pair(np.pi / 4), PHI_PLUS)
    assert np.allclose(pure_pair(np.pi / 2), [0, 0, 0, 1])
    with pytest.raises(InputError):
        pure_pair(2.0)


def test_werner_examples():
    assert np.allclose(werner(1), BELL)
    assert np.allclose(werner(0.25), np.eye(4) / 4)
    for f in (0.2, 1.1):
        with pytest.raises(InputError):
            werner(f)


@given(st.floats(0, np.pi / 2))
def test_pure_pair_concurrence_is_sin_2theta(theta):
    v = pure_pair(theta)
    assert abs(concurrence(np.outer(v, v.conj())) - abs(np.sin(2 * theta))) <= 1e-10


@given(st.floats(0.25, 1))
def test_werner_concurrence(f):
    assert abs(concurrence(werner(f)) - max(0, 2 * f - 1)) <= 1e-12


def test_bounds_on_random_states(rng):
    for rank in (1, 2, 3, 4):
        rhos = np.array([random_density(rng, 4, rank) for _ in range(250)])
        c = concurrences(rhos)
        assert np.all(c >= 0) and np.all(c <= 1 + 1e-9)


def test_agrees_with_independent_routes(rng):
    for _ in range(200):
        rho = random_density(rng, 4, rng.integers(1, 5))
        assert abs(concurrence(rho) - hermitian_concurrence(rho)) <= 1e-7
        assert abs(concurrence(rho) - concurrence_eigen(rho)) <= 1e-7


def test_local_unitary_invariance(rng):
    for _ in range(100):
        rho = random_density(rng, 4, rng.integers(1, 5))
        u = np.kron(random_unitary(rng), random_unitary(rng))
        assert abs(concurrence(u @ rho @ u.conj().T) - concurrence(rho)) <= 1e-9


def test_spin_flip_involution(rng):
    for _ in range(50):
        rho = random_density(rng)
        assert np.max(np.abs(spin_flip(spin_flip(rho)) - rho)) <= 1e-12


def test_shape_check():
    with pytest.raises(InputError):
        spin_flip(np.eye(2))
