"""Entanglement transfer through two networks in the single-excitation sector.

A Bell pair (|01> + |10>)/sqrt(2) sits on vertex ``source_a`` of network A and
``source_b`` of network B, all other spins down. After free evolution the
concurrence between ``target_a`` and ``target_b`` is |alpha_j(t)| |beta_l(t)|,
the product of the two single-excitation transfer amplitudes.
:func:`joint_concurrence_oracle` recomputes the same number by brute force on
the full 2n-qubit space.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .entanglement import concurrence
from .errors import InputError
from .graph import Graph
from .hamiltonian import XY, CouplingModel, build_hamiltonian, excitation_basis, single_excitation_block
from .linalg import HermitianOperator, QuantumState, QubitRegister, kron, partial_trace, propagator

MAX_JOINT_QUBITS = 12


@dataclass(frozen=True)
class TransferScenario:
    graph_a: Graph
    graph_b: Graph
    source_a: int
    source_b: int
    target_a: int
    target_b: int
    model: CouplingModel = field(default=XY)

    def __post_init__(self):
        for name, g in (("source_a", self.graph_a), ("target_a", self.graph_a),
                        ("source_b", self.graph_b), ("target_b", self.graph_b)):
            v = getattr(self, name)
            if not 1 <= v <= g.n:
                raise InputError(f"{name}={v} outside 1..{g.n}")


def excitation_amplitudes(g: Graph, source: int, t: float, model: CouplingModel = XY) -> np.ndarray:
    """Amplitudes alpha_j(t) = <j| exp(-i H t) |source>, j = 1..n."""
    if not 1 <= source <= g.n:
        raise InputError(f"source {source} outside 1..{g.n}")
    u = propagator(single_excitation_block(g, model), t).matrix
    return u[:, source - 1].copy()


def pair_concurrence(s: TransferScenario, t: float) -> float:
    alpha = excitation_amplitudes(s.graph_a, s.source_a, t, s.model)
    beta = excitation_amplitudes(s.graph_b, s.source_b, t, s.model)
    return float(abs(alpha[s.target_a - 1]) * abs(beta[s.target_b - 1]))


def initial_joint_state(s: TransferScenario) -> QuantumState:
    """(|0>_A |k>_B + |i>_A |0>_B) / sqrt(2) on the register A1..An, B1..Bm."""
    na, nb = s.graph_a.n, s.graph_b.n
    if na + nb > MAX_JOINT_QUBITS:
        raise InputError(f"joint register of {na + nb} qubits exceeds {MAX_JOINT_QUBITS}")
    ia = excitation_basis(na)[s.source_a - 1]
    kb = excitation_basis(nb)[s.source_b - 1]
    psi = np.zeros(2 ** (na + nb), dtype=complex)
    psi[kb] += 1 / np.sqrt(2)               # A in vacuum, B excited at k
    psi[ia * 2**nb] += 1 / np.sqrt(2)       # A excited at i, B in vacuum
    labels = tuple(f"A{i}" for i in range(1, na + 1)) + tuple(f"B{i}" for i in range(1, nb + 1))
    return QuantumState.pure(labels, psi)


def joint_reduced_state(s: TransferScenario, t: float) -> np.ndarray:
    """4x4 state of (A_j, B_l) from full evolution of both networks.

    Uses the full joint Hamiltonian H_A x 1 + 1 x H_B, so excitation
    conservation is not assumed anywhere.
    """
    psi0 = initial_joint_state(s)
    ha = build_hamiltonian(s.graph_a, s.model).matrix
    hb = build_hamiltonian(s.graph_b, s.model).matrix
    joint = kron(ha, np.eye(hb.shape[0])) + kron(np.eye(ha.shape[0]), hb)
    u = propagator(HermitianOperator(joint), t).matrix
    psi_t = QuantumState(psi0.register, u @ psi0.data)
    return partial_trace(psi_t, [f"A{s.target_a}", f"B{s.target_b}"]).data


def joint_concurrence_oracle(s: TransferScenario, t: float) -> float:
    return concurrence(joint_reduced_state(s, t))


def reduced_state_template(alpha_j: complex, beta_l: complex) -> np.ndarray:
    """Closed-form 4x4 state of (A_j, B_l) in terms of the two amplitudes."""
    a2, b2 = abs(alpha_j) ** 2, abs(beta_l) ** 2
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1 - a2) + (1 - b2)
    rho[1, 1] = b2
    rho[2, 2] = a2
    rho[1, 2] = np.conj(alpha_j) * beta_l
    rho[2, 1] = alpha_j * np.conj(beta_l)
    return rho / 2
