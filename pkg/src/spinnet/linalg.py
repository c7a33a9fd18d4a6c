"""Dense complex kernel: Hermitian eigensolves, propagators, qubit registers.

Register convention: the first label of a register is the most significant
bit of the computational-basis index.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import InputError, NumericError

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
STATE_TOL = 1e-10


def _as_square(m, name: str) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise InputError(f"{name} must be a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError(f"{name} has non-finite entries")
    return m


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    matrix: np.ndarray

    def __post_init__(self):
        m = _as_square(self.matrix, "Hermitian operator")
        err = np.max(np.abs(m - m.conj().T))
        if err > HERMITIAN_TOL:
            raise InputError(f"matrix is not Hermitian (max |M - M^dag| = {err:.3g})")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    matrix: np.ndarray

    def __post_init__(self):
        m = _as_square(self.matrix, "unitary operator")
        err = np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))
        if err > UNITARY_TOL:
            raise NumericError(f"matrix is not unitary (max |U^dag U - I| = {err:.3g})")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class QubitRegister:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise InputError(f"duplicate qubit labels in {labels}")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.labels)

    @property
    def dim(self) -> int:
        return 2 ** len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown qubit label {label!r}") from None

    @classmethod
    def two_networks(cls, n: int) -> "QubitRegister":
        """A1..An followed by B1..Bn."""
        return cls(tuple(f"A{i}" for i in range(1, n + 1)) + tuple(f"B{i}" for i in range(1, n + 1)))


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Pure vector or density matrix attached to a qubit register.

    Construction checks shapes only; states produced by projection are
    deliberately unnormalised. Call :meth:`validate` to check the physical
    invariants.
    """

    register: QubitRegister
    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=complex)
        d = self.register.dim
        if data.shape not in ((d,), (d, d)):
            raise InputError(f"state shape {data.shape} does not fit a {len(self.register)}-qubit register")
        object.__setattr__(self, "data", data)

    @property
    def is_pure(self) -> bool:
        return self.data.ndim == 1

    @property
    def labels(self) -> tuple[str, ...]:
        return self.register.labels

    def density(self) -> np.ndarray:
        if self.is_pure:
            return np.outer(self.data, self.data.conj())
        return self.data

    def trace(self) -> float:
        if self.is_pure:
            return float(np.vdot(self.data, self.data).real)
        return float(np.trace(self.data).real)

    def normalized(self) -> "QuantumState":
        return QuantumState(self.register, self.data / self.trace() ** (0.5 if self.is_pure else 1))

    def validate(self, tol: float = STATE_TOL) -> "QuantumState":
        if self.is_pure:
            norm = np.linalg.norm(self.data)
            if abs(norm - 1) > tol:
                raise InputError(f"state vector norm {norm} is not 1")
            return self
        rho = self.data
        if np.max(np.abs(rho - rho.conj().T)) > tol:
            raise InputError("density matrix is not Hermitian")
        if abs(np.trace(rho).real - 1) > tol:
            raise InputError(f"density matrix trace {np.trace(rho).real} is not 1")
        if np.linalg.eigvalsh(rho).min() < -tol:
            raise InputError("density matrix has negative eigenvalues")
        return self

    @classmethod
    def pure(cls, labels: Sequence[str], vector) -> "QuantumState":
        return cls(QubitRegister(tuple(labels)), vector).validate()

    @classmethod
    def mixed(cls, labels: Sequence[str], matrix) -> "QuantumState":
        return cls(QubitRegister(tuple(labels)), matrix).validate()


def hermitian_eig(h: HermitianOperator) -> tuple[np.ndarray, UnitaryOperator]:
    """Eigenvalues in ascending order and the unitary of eigenvectors (columns)."""
    m = h.matrix
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver did not converge on a {m.shape[0]}-dim operator: {exc}") from exc
    err = np.max(np.abs((v * w) @ v.conj().T - m)) if m.size else 0.0
    if err > 1e-10 * m.shape[0] * max(1.0, np.max(np.abs(w))):
        raise NumericError(f"eigendecomposition reconstruction error {err:.3g}")
    return w, UnitaryOperator(v)


def propagator(h: HermitianOperator, t: float) -> UnitaryOperator:
    """exp(-i H t) built from the spectral decomposition."""
    if t == 0:
        return UnitaryOperator(np.eye(h.dim, dtype=complex))
    w, v = hermitian_eig(h)
    return UnitaryOperator(_spectral_exp(w, v.matrix, t))


def _spectral_exp(w: np.ndarray, v: np.ndarray, t: float) -> np.ndarray:
    return (v * np.exp(-1j * w * t)) @ v.conj().T


class Spectrum:
    """Cached eigendecomposition of one Hamiltonian for repeated propagators."""

    def __init__(self, h: HermitianOperator):
        self.eigenvalues, vecs = hermitian_eig(h)
        self.vectors = vecs.matrix

    def unitary(self, t: float) -> np.ndarray:
        if t == 0:
            return np.eye(len(self.eigenvalues), dtype=complex)
        return _spectral_exp(self.eigenvalues, self.vectors, t)


def kron(*ms) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in ms:
        out = np.kron(out, np.asarray(m, dtype=complex))
    return out


def _keep_axes(register: QubitRegister, keep: Sequence[str]) -> list[int]:
    keep = list(keep)
    if not keep:
        raise InputError("must keep at least one qubit")
    idx = [register.index(lbl) for lbl in keep]
    if len(set(idx)) != len(idx):
        raise InputError(f"duplicate labels in {keep}")
    return sorted(idx)


def partial_trace(s: QuantumState, keep: Sequence[str]) -> QuantumState:
    """Reduced density matrix on ``keep``; kept qubits stay in register order."""
    kept = _keep_axes(s.register, keep)
    m = len(s.register)
    traced = [i for i in range(m) if i not in kept]
    k = len(kept)
    labels = tuple(s.register.labels[i] for i in kept)
    if s.is_pure:
        psi = s.data.reshape([2] * m).transpose(kept + traced).reshape(2**k, -1)
        rho = psi @ psi.conj().T
    else:
        t = s.data.reshape([2] * (2 * m))
        t = t.transpose(kept + traced + [m + i for i in kept] + [m + i for i in traced])
        t = t.reshape(2**k, 2 ** (m - k), 2**k, 2 ** (m - k))
        rho = np.einsum("ajbj->ab", t)
    return QuantumState(QubitRegister(labels), rho)


def branch_split(s: QuantumState, measured: Sequence[str]):
    """Blocks of ``s`` for every computational-basis outcome on ``measured``.

    Returns ``(kept_labels, blocks)``. Outcomes are indexed by the measured
    bits read as a binary number in the order given. For a pure state
    ``blocks`` has shape ``(2**k_meas, 2**k_kept)`` (unnormalised kets); for a
    density matrix ``(2**k_meas, 2**k_kept, 2**k_kept)``.
    """
    m = len(s.register)
    meas = [s.register.index(lbl) for lbl in measured]
    if len(set(meas)) != len(meas):
        raise InputError(f"duplicate labels in {list(measured)}")
    kept = [i for i in range(m) if i not in meas]
    if not kept:
        raise InputError("at least one qubit must remain unmeasured")
    labels = tuple(s.register.labels[i] for i in kept)
    km, kk = len(meas), len(kept)
    if s.is_pure:
        psi = s.data.reshape([2] * m).transpose(meas + kept).reshape(2**km, 2**kk)
        return labels, psi
    t = s.data.reshape([2] * (2 * m))
    t = t.transpose(meas + kept + [m + i for i in meas] + [m + i for i in kept])
    t = t.reshape(2**km, 2**kk, 2**km, 2**kk)
    blocks = np.einsum("okop->okp", t)
    return labels, blocks


def project_qubits(s: QuantumState, assignments: Mapping[str, int]) -> tuple[QuantumState, float]:
    """Project the assigned qubits onto the given bits.

    Returns the unnormalised state on the remaining qubits and the outcome
    probability (its trace).
    """
    measured = list(assignments)
    bits = [int(assignments[lbl]) for lbl in measured]
    if any(b not in (0, 1) for b in bits):
        raise InputError(f"bit values must be 0 or 1, got {bits}")
    labels, blocks = branch_split(s, measured)
    index = int("".join(map(str, bits)), 2) if bits else 0
    out = QuantumState(QubitRegister(labels), blocks[index])
    return out, out.trace()
