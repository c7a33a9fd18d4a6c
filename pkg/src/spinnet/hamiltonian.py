"""XY and Heisenberg network Hamiltonians built from graph adjacency.

For coupling scale ``s`` the full operator is

    H = -s/2 * sum_{i != j} A_ij (X_i X_j + Y_i Y_j [+ Z_i Z_j])

where the ordered sum visits every edge twice. Qubit 1 is the most
significant bit of the basis index.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InputError
from .graph import Graph
from .linalg import HermitianOperator

MAX_SITES = 12


class Coupling(str, Enum):
    XY = "xy"
    HEISENBERG = "heisenberg"


@dataclass(frozen=True)
class CouplingModel:
    kind: Coupling = Coupling.XY
    scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Coupling(self.kind))
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise InputError(f"coupling scale must be positive, got {self.scale}")


XY = CouplingModel(Coupling.XY, 1.0)


def build_hamiltonian(g: Graph, model: CouplingModel = XY) -> HermitianOperator:
    """Full 2**n x 2**n network Hamiltonian."""
    n = g.n
    if n > MAX_SITES:
        raise InputError(f"{n} sites exceeds the dense limit of {MAX_SITES}")
    dim = 2**n
    h = np.zeros((dim, dim), dtype=complex)
    basis = np.arange(dim)
    for u, v in g.edges:
        bu = 1 << (n - u)
        bv = 1 << (n - v)
        # XX + YY flips an antiparallel pair with amplitude 2; each edge appears twice in the ordered sum.
        anti = ((basis & bu) > 0) != ((basis & bv) > 0)
        src = basis[anti]
        h[src ^ bu ^ bv, src] += -2.0 * model.scale
        if model.kind is Coupling.HEISENBERG:
            zz = np.where(anti, -1.0, 1.0)
            h[basis, basis] += -model.scale * zz
    return HermitianOperator(h)


def excitation_basis(n: int) -> np.ndarray:
    """Full-space indices of the states |i> (single excitation at vertex i), i = 1..n."""
    return np.array([1 << (n - i) for i in range(1, n + 1)])


def single_excitation_block(g: Graph, model: CouplingModel = XY) -> HermitianOperator:
    """n x n restriction of the network Hamiltonian to one excitation.

    Computed directly from the adjacency matrix: -2 s A for XY, plus the
    diagonal -s (|E| - 2 deg(i)) from the ZZ terms for Heisenberg coupling.
    """
    a = g.adjacency_matrix().astype(complex)
    h = -2.0 * model.scale * a
    if model.kind is Coupling.HEISENBERG:
        deg = a.real.sum(axis=1)
        h = h + np.diag(-model.scale * (g.num_edges - 2 * deg))
    return HermitianOperator(h)


def total_z(n: int) -> np.ndarray:
    """Diagonal of sum_i Z_i on n qubits."""
    basis = np.arange(2**n)
    ones = np.array([bin(x).count("1") for x in basis])
    return (n - 2 * ones).astype(float)
