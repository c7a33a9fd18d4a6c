"""Exact simulation of entanglement transfer, concentration and purification
between two identical spin-1/2 networks with XY coupling."""

from .errors import InputError, NumericError
from .graph import Graph, complete, cycle, from_edge_list, has_isolated_vertex, path
from .hamiltonian import Coupling, CouplingModel, build_hamiltonian, single_excitation_block
from .entanglement import concurrence, pure_pair, spin_flip, werner
from .protocol import (Ground, Protocol, Pure, Werner, efficiency, efficiency_curve, enumerate_outcomes,
                       evolve, initial_state, optimize_time)
from .transfer import TransferScenario, excitation_amplitudes, joint_concurrence_oracle, pair_concurrence

__version__ = "0.1.0"
