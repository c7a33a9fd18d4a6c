"""Two-qubit states and the Wootters concurrence."""
from __future__ import annotations

import numpy as np

from .errors import InputError

PAULI_Y = np.array([[0, -1j], [1j, 0]])
YY = np.kron(PAULI_Y, PAULI_Y)
CLAMP = 1e-10

_S = 1 / np.sqrt(2)
PHI_PLUS = np.array([_S, 0, 0, _S], dtype=complex)
PHI_MINUS = np.array([_S, 0, 0, -_S], dtype=complex)
PSI_PLUS = np.array([0, _S, _S, 0], dtype=complex)
PSI_MINUS = np.array([0, _S, -_S, 0], dtype=complex)


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """Wootters tilde: (Y x Y) rho* (Y x Y)."""
    rho = _as_two_qubit(rho)
    return YY @ rho.conj() @ YY


RANK_TOL = 1e-14


def concurrence(rho: np.ndarray) -> float:
    """Concurrence of a two-qubit density matrix or state vector.

    The square roots of the eigenvalues of rho * spin_flip(rho) are obtained
    as the singular values of tau = W^T (Y x Y) W for any factor rho = W W^dag.
    This avoids taking square roots of eigenvalues that are zero up to
    rounding, which would otherwise leave errors of order 1e-8.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape == (4,):
        norm2 = np.vdot(rho, rho).real
        if norm2 <= 0:
            raise InputError("zero state vector")
        return float(min(1.0, abs(rho @ YY @ rho) / norm2))
    return float(concurrences(_as_two_qubit(rho)[None])[0])


def concurrences(rhos: np.ndarray) -> np.ndarray:
    """Vectorised concurrence for a stack of 4x4 density matrices."""
    rhos = np.asarray(rhos, dtype=complex)
    p, v = np.linalg.eigh(rhos)
    # eigenvalues at rounding level are noise; their square roots (~1e-8)
    # would otherwise leak into the singular values
    floor = RANK_TOL * np.max(np.abs(p), axis=-1, keepdims=True)
    p = np.where(p <= floor, 0.0, p)
    w = v * np.sqrt(p)[..., None, :]
    return concurrences_from_factors(w)


def concurrences_from_factors(w: np.ndarray) -> np.ndarray:
    """Concurrence of rho = W W^dag for a stack of 4 x r factors."""
    tau = np.swapaxes(w, -1, -2) @ YY @ w
    sv = np.linalg.svd(tau, compute_uv=False)
    if sv.shape[-1] < 4:
        sv = np.concatenate([sv, np.zeros(sv.shape[:-1] + (4 - sv.shape[-1],))], axis=-1)
    c = sv[..., 0] - sv[..., 1:].sum(axis=-1)
    return np.clip(c, 0.0, None)


def concurrence_eigen(rho: np.ndarray) -> float:
    """Concurrence straight from the textbook definition.

    Eigenvalues of the non-Hermitian product rho * spin_flip(rho), clamped at
    zero and sorted descending. Kept as an independent cross-check of
    :func:`concurrence`; accurate to about 1e-8 on rank-deficient input.
    """
    rho = _as_two_qubit(rho)
    lam = np.linalg.eigvals(rho @ spin_flip(rho)).real
    lam = np.sort(np.clip(lam, 0.0, None))[::-1]
    r = np.sqrt(lam)
    return float(max(0.0, r[0] - r[1:].sum()))


def pure_pair(theta: float) -> np.ndarray:
    """cos(theta)|00> + sin(theta)|11> for theta in [0, pi/2]."""
    if not (0.0 <= theta <= np.pi / 2 + 1e-15):
        raise InputError(f"theta must lie in [0, pi/2], got {theta}")
    return np.array([np.cos(theta), 0, 0, np.sin(theta)], dtype=complex)


def werner(f: float) -> np.ndarray:
    """Werner mixture with singlet-fidelity f on |Phi+>, f in [1/4, 1]."""
    if not (0.25 <= f <= 1.0):
        raise InputError(f"Werner fidelity must lie in [0.25, 1], got {f}")
    rest = (1 - f) / 3
    out = f * np.outer(PHI_PLUS, PHI_PLUS.conj())
    for b in (PHI_MINUS, PSI_PLUS, PSI_MINUS):
        out += rest * np.outer(b, b.conj())
    return out


def _as_two_qubit(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InputError(f"expected a 4x4 two-qubit matrix, got shape {rho.shape}")
    return rho
