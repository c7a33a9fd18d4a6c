import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinnet import graph as G
from spinnet.errors import InputError
from spinnet.hamiltonian import (Coupling, CouplingModel, build_hamiltonian, excitation_basis,
                                 single_excitation_block, total_z)

from oracles import pauli_hamiltonian

XY1 = CouplingModel(Coupling.XY, 1.0)
HEIS1 = CouplingModel(Coupling.HEISENBERG, 1.0)

graphs = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1]),
                       max_size=10).map(lambda pairs: G.from_edge_list(n, pairs)))
models = st.builds(CouplingModel, st.sampled_from(list(Coupling)), st.floats(0.1, 3.0))


def test_path2_matrix_elements():
    h = build_hamiltonian(G.path(2), XY1).matrix
    assert h[0b01, 0b10] == pytest.approx(-2)
    assert np.allclose(np.diag(h), 0)


def test_edgeless_is_zero():
    assert not build_hamiltonian(G.edgeless(3)).matrix.any()


def test_path2_heisenberg_diagonal():
    h = build_hamiltonian(G.path(2), HEIS1).matrix
    assert np.allclose(np.diag(h).real, [-1, 1, 1, -1])
    assert h[0b01, 0b10] == pytest.approx(-2)


@given(graphs, models)
def test_matches_pauli_products(g, model):
    expected = pauli_hamiltonian(g.adjacency_matrix(), model.scale, model.kind is Coupling.HEISENBERG)
    assert np.max(np.abs(build_hamiltonian(g, model).matrix - expected)) <= 1e-12


@given(graphs, models)
def test_conserves_excitations(g, model):
    h = build_hamiltonian(g, model).matrix
    z = np.diag(total_z(g.n))
    assert np.max(np.abs(h @ z - z @ h)) <= 1e-12


@given(graphs, models)
def test_block_is_restriction_of_full_operator(g, model):
    h = build_hamiltonian(g, model).matrix
    idx = excitation_basis(g.n)
    block = single_excitation_block(g, model).matrix
    assert np.max(np.abs(h[np.ix_(idx, idx)] - block)) <= 1e-12
    if model.kind is Coupling.XY:
        assert np.max(np.abs(block + 2 * model.scale * g.adjacency_matrix())) <= 1e-12


def test_block_examples():
    assert np.allclose(single_excitation_block(G.path(3)).matrix, -2 * G.path(3).adjacency_matrix())
    assert np.allclose(single_excitation_block(G.path(2), CouplingModel("xy", 0.5)).matrix,
                       -G.path(2).adjacency_matrix())
    w = np.linalg.eigvalsh(single_excitation_block(G.complete(3)).matrix)
    assert np.allclose(w, [-4, 2, 2])


def _qubit_permutation(perm, n):
    """Basis permutation sending qubit v to position perm[v-1]."""
    p = np.zeros((2**n, 2**n))
    for bits in itertools.product((0, 1), repeat=n):
        new = [0] * n
        for v, b in enumerate(bits, 1):
            new[perm[v - 1] - 1] = b
        p[int("".join(map(str, new)), 2), int("".join(map(str, bits)), 2)] = 1
    return p


@given(graphs.filter(lambda g: g.n >= 2), models, st.data())
def test_isomorphism_covariance(g, model, data):
    perm = data.draw(st.permutations(range(1, g.n + 1)))
    p = _qubit_permutation(perm, g.n)
    h = build_hamiltonian(g, model).matrix
    h_relabelled = build_hamiltonian(g.relabel(perm), model).matrix
    assert np.max(np.abs(h_relabelled - p @ h @ p.T)) <= 1e-12


def test_model_validation():
    with pytest.raises(InputError):
        CouplingModel("xy", 0.0)
    with pytest.raises(ValueError):
        CouplingModel("ising", 1.0)


def test_size_limit():
    with pytest.raises(InputError):
        build_hamiltonian(G.path(13))
