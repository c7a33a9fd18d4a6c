"""Entanglement concentration and purification by free evolution plus Z measurements.

Two identical networks A and B share one two-qubit pair per vertex, pair i
living on (A_i, B_i). Both networks evolve under the same Hamiltonian, then
every qubit except A1 and B1 is measured in the computational basis. The
efficiency is the probability-weighted concurrence gain of (A1, B1) over its
initial concurrence, summed over all 4**(n-1) outcomes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np
from scipy.optimize import minimize_scalar

from . import entanglement as ent
from .errors import InputError
from .graph import Graph
from .hamiltonian import XY, CouplingModel, build_hamiltonian
from .linalg import QuantumState, QubitRegister, Spectrum, branch_split, partial_trace

DEGENERATE_P = 1e-12
WINDOW_CAP = 8 * np.pi
DEFAULT_GRID = 2000
T_TOL = 1e-8
TIE_TOL = 1e-12


# -- pair specifications -----------------------------------------------------


@dataclass(frozen=True)
class Pure:
    """cos(theta)|00> + sin(theta)|11>."""

    theta: float

    def __post_init__(self):
        ent.pure_pair(self.theta)  # range check


@dataclass(frozen=True)
class Werner:
    f: float

    def __post_init__(self):
        ent.werner(self.f)


@dataclass(frozen=True)
class Ground:
    """Both qubits of the pair in |0>."""


PairSpec = Union[Pure, Werner, Ground]


def pair_vector(spec: PairSpec) -> np.ndarray:
    if isinstance(spec, Pure):
        return ent.pure_pair(spec.theta)
    if isinstance(spec, Ground):
        return np.array([1, 0, 0, 0], dtype=complex)
    raise InputError(f"{spec!r} has no pure-state representation")


def pair_density(spec: PairSpec) -> np.ndarray:
    if isinstance(spec, Werner):
        return ent.werner(spec.f)
    v = pair_vector(spec)
    return np.outer(v, v.conj())


def all_pure(n: int, theta: float) -> list[PairSpec]:
    return [Pure(theta)] * n


def first_only(n: int, theta: float) -> list[PairSpec]:
    return [Pure(theta)] + [Ground()] * (n - 1)


def all_werner(n: int, f: float) -> list[PairSpec]:
    return [Werner(f)] * n


# -- records -----------------------------------------------------------------


@dataclass
class OutcomeRecord:
    bits_a: str
    bits_b: str
    probability: float
    conditional: np.ndarray | None  # normalised 4x4 state of (A1, B1); None if degenerate
    concurrence_out: float
    gain: float

    @property
    def degenerate(self) -> bool:
        return self.conditional is None


@dataclass
class EfficiencyResult:
    parameter: float
    t_opt: float
    e_max: float
    baseline_concurrence: float
    records: list[OutcomeRecord] = field(default_factory=list, repr=False)


# -- state preparation and evolution -----------------------------------------


def initial_state(n: int, specs: Sequence[PairSpec]) -> QuantumState:
    """Product of the pair states on the register A1..An, B1..Bn.

    A state vector is returned when every pair is Pure or Ground, otherwise a
    density matrix.
    """
    specs = list(specs)
    if len(specs) != n:
        raise InputError(f"need one pair spec per vertex: got {len(specs)} for n={n}")
    register = QubitRegister.two_networks(n)
    # pair-ordered tensor (A1 B1 A2 B2 ...) -> register order (A1..An B1..Bn)
    perm = [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]
    if all(isinstance(s, (Pure, Ground)) for s in specs):
        psi = np.ones(1, dtype=complex)
        for s in specs:
            psi = np.kron(psi, pair_vector(s))
        psi = psi.reshape([2] * (2 * n)).transpose(perm).reshape(-1)
        return QuantumState(register, psi)
    rho = np.ones((1, 1), dtype=complex)
    for s in specs:
        rho = np.kron(rho, pair_density(s))
    m = 2 * n
    rho = rho.reshape([2] * (2 * m)).transpose(perm + [m + p for p in perm]).reshape(4**n, 4**n)
    return QuantumState(register, rho)


def _apply_local(data: np.ndarray, u: np.ndarray) -> np.ndarray:
    """(U x U) acting on the A block and the B block of a two-network state."""
    d = u.shape[0]
    if data.ndim == 1:
        m = data.reshape(d, d)
        return (u @ m @ u.T).reshape(-1)
    t = data.reshape(d, d, d, d)
    t = np.tensordot(u, t, axes=(1, 0))                              # a
    t = np.tensordot(u, t, axes=(1, 1)).transpose(1, 0, 2, 3)        # b
    t = np.tensordot(t, u.conj(), axes=(2, 1)).transpose(0, 1, 3, 2)  # a'
    t = np.tensordot(t, u.conj(), axes=(3, 1))                       # b'
    return t.reshape(d * d, d * d)


def evolve(s: QuantumState, graph: Graph, model: CouplingModel, t: float) -> QuantumState:
    """Evolve both identical networks for time t under exp(-i H t)."""
    n = graph.n
    if len(s.register) != 2 * n:
        raise InputError(f"state has {len(s.register)} qubits, expected {2 * n}")
    u = Spectrum(build_hamiltonian(graph, model)).unitary(t)
    return QuantumState(s.register, _apply_local(s.data, u))


# -- measurement ---------------------------------------------------------------


def measured_labels(n: int) -> list[str]:
    return [f"A{i}" for i in range(2, n + 1)] + [f"B{i}" for i in range(2, n + 1)]


def _branch_arrays(sigma: QuantumState):
    """Probabilities, normalised conditionals and concurrences for every outcome."""
    n = len(sigma.register) // 2
    _, blocks = branch_split(sigma, measured_labels(n))
    if sigma.is_pure:
        p = np.sum(np.abs(blocks) ** 2, axis=1)
    else:
        p = np.einsum("kii->k", blocks).real
    ok = p >= DEGENERATE_P
    conc = np.zeros(len(p))
    if np.any(ok):
        if sigma.is_pure:
            factors = blocks[ok][:, :, None] / np.sqrt(p[ok])[:, None, None]
            conc[ok] = ent.concurrences_from_factors(factors)
        else:
            conc[ok] = ent.concurrences(blocks[ok] / p[ok][:, None, None])
    return p, ok, conc, blocks


def enumerate_outcomes(sigma: QuantumState, baseline: float) -> list[OutcomeRecord]:
    """One record per Z outcome on A2..An, B2..Bn.

    Records are ordered by (bits_a, bits_b) read as binary numbers. With n=1
    nothing is measured and the single record carries the whole state.
    """
    n = len(sigma.register) // 2
    p, ok, conc, blocks = _branch_arrays(sigma)
    records = []
    k = n - 1
    for o in range(len(p)):
        bits = format(o, f"0{2 * k}b") if k else ""
        if ok[o]:
            cond = np.outer(blocks[o], blocks[o].conj()) if sigma.is_pure else blocks[o]
            cond = cond / p[o]
            gain = max(0.0, conc[o] - baseline)
        else:
            cond, gain = None, 0.0
        records.append(OutcomeRecord(bits[:k], bits[k:], float(p[o]), cond, float(conc[o]), float(gain)))
    return records


# -- efficiency ----------------------------------------------------------------


class Protocol:
    """Fixed graph, coupling and initial pairs; efficiency as a function of time.

    Caches the spectrum of the network Hamiltonian so that repeated
    evaluations (time scans, optimisation) only pay for two small matrix
    products per call on the pure path.
    """

    def __init__(self, graph: Graph, model: CouplingModel, specs: Sequence[PairSpec]):
        self.graph = graph
        self.model = model
        self.specs = list(specs)
        self.n = graph.n
        self.initial = initial_state(self.n, self.specs)
        self.spectrum = Spectrum(build_hamiltonian(graph, model))
        self.baseline = ent.concurrence(partial_trace(self.initial, ["A1", "B1"]).data)
        if self.initial.is_pure:
            v = self.spectrum.vectors
            d = v.shape[0]
            # coefficients in the product eigenbasis: M(t) = V (phase * Mt) V^T
            self._coeff = v.conj().T @ self.initial.data.reshape(d, d) @ v.conj()

    def state(self, t: float) -> QuantumState:
        if self.initial.is_pure:
            v, w = self.spectrum.vectors, self.spectrum.eigenvalues
            ph = np.exp(-1j * w * t)
            m = v @ (ph[:, None] * self._coeff * ph[None, :]) @ v.T
            return QuantumState(self.initial.register, m.reshape(-1))
        return QuantumState(self.initial.register, _apply_local(self.initial.data, self.spectrum.unitary(t)))

    def outcomes(self, t: float) -> list[OutcomeRecord]:
        return enumerate_outcomes(self.state(t), self.baseline)

    def probabilities(self, t: float) -> np.ndarray:
        return _branch_arrays(self.state(t))[0]

    def efficiency(self, t: float) -> float:
        p, ok, conc, _ = _branch_arrays(self.state(t))
        gain = np.where(ok, np.clip(conc - self.baseline, 0.0, None), 0.0)
        return float(np.sum(p * gain))

    def default_window(self) -> tuple[float, float]:
        period = revival_period(self.spectrum.eigenvalues)
        return (0.0, WINDOW_CAP if period is None else min(period, WINDOW_CAP))

    def maximize(self, window: tuple[float, float] | None = None,
                 grid_points: int = DEFAULT_GRID) -> tuple[float, float]:
        return maximize(self.efficiency, window or self.default_window(), grid_points)


def efficiency(graph: Graph, model: CouplingModel, specs: Sequence[PairSpec], t: float) -> float:
    return Protocol(graph, model, specs).efficiency(t)


def revival_period(eigenvalues: np.ndarray, tol: float = 1e-9, max_den: int = 64) -> float | None:
    """Smallest T > 0 with exp(-i H T) proportional to the identity, if the spectrum is commensurate.

    Returns None for incommensurate spectra and for a trivial (single-level)
    spectrum.
    """
    levels = []
    for w in np.sort(np.asarray(eigenvalues, dtype=float)):
        if not levels or w - levels[-1] > tol:
            levels.append(w)
    gaps = np.array(levels[1:]) - levels[0]
    if len(gaps) == 0:
        return None
    unit = gaps[0]
    den = 1
    for g in gaps / unit:
        frac = Fraction(float(g)).limit_denominator(max_den)
        if abs(g - float(frac)) > tol * max(1.0, g):
            return None
        den = math.lcm(den, frac.denominator)
    return 2 * np.pi * den / unit


def maximize(func, window: tuple[float, float], grid_points: int = DEFAULT_GRID) -> tuple[float, float]:
    """Grid scan of ``func`` on ``window`` followed by golden-section polishing.

    Every grid local maximum among the best few is refined to |dt| <= 1e-8.
    Among values within 1e-12 of the best, the smallest t wins.
    """
    lo, hi = map(float, window)
    if not (np.isfinite(lo) and np.isfinite(hi) and hi > lo):
        raise InputError(f"degenerate optimisation window {window}")
    if grid_points < 100:
        raise InputError("grid_points must be at least 100")
    ts = np.linspace(lo, hi, grid_points)
    vals = np.array([func(t) for t in ts])
    candidates = [(float(vals[i]), float(ts[i])) for i in range(len(ts))]
    interior = [i for i in range(1, len(ts) - 1) if vals[i] > vals[i - 1] and vals[i] >= vals[i + 1]]
    interior.sort(key=lambda i: -vals[i])
    for i in interior[:8]:
        a, b, c = ts[i - 1], ts[i], ts[i + 1]
        if vals[i] > vals[i + 1]:
            res = minimize_scalar(lambda t: -func(t), bracket=(a, b, c), method="golden",
                                  options={"xtol": T_TOL / (2 * max(abs(b), 1.0))})
        else:  # flat top, not a strict bracket
            res = minimize_scalar(lambda t: -func(t), bounds=(a, c), method="bounded", options={"xatol": T_TOL})
        if a <= res.x <= c:
            candidates.append((float(-res.fun), float(res.x)))
    best = max(v for v, _ in candidates)
    t_opt = min(t for v, t in candidates if v >= best - TIE_TOL)
    return t_opt, float(func(t_opt))


def optimize_time(graph: Graph, model: CouplingModel, specs: Sequence[PairSpec],
                  window: tuple[float, float] | None = None,
                  grid_points: int = DEFAULT_GRID) -> tuple[float, float]:
    """(t_opt, e_max) over ``window``; defaults to one revival period, capped at 8 pi."""
    return Protocol(graph, model, specs).maximize(window, grid_points)


# -- parameter sweeps ------------------------------------------------------------


@dataclass(frozen=True)
class PureSweep:
    thetas: tuple[float, ...]
    pairs: str = "all"  # "all" or "first-only"

    def specs(self, n: int, theta: float) -> list[PairSpec]:
        if self.pairs == "all":
            return all_pure(n, theta)
        if self.pairs == "first-only":
            return first_only(n, theta)
        raise InputError(f"unknown pair layout {self.pairs!r}")

    @property
    def grid(self):
        return self.thetas


@dataclass(frozen=True)
class WernerSweep:
    fs: tuple[float, ...]

    def specs(self, n: int, f: float) -> list[PairSpec]:
        return all_werner(n, f)

    @property
    def grid(self):
        return self.fs


def efficiency_curve(graph: Graph, model: CouplingModel, template: PureSweep | WernerSweep,
                     window: tuple[float, float] | None = None,
                     grid_points: int = DEFAULT_GRID) -> list[EfficiencyResult]:
    grid = np.asarray(template.grid, dtype=float)
    if len(grid) > 1 and not (np.all(np.diff(grid) > 0) or np.all(np.diff(grid) < 0)):
        raise InputError("parameter grid must be strictly monotone")
    out = []
    for x in grid:
        proto = Protocol(graph, model, template.specs(graph.n, float(x)))
        t_opt, e_max = proto.maximize(window, grid_points)
        out.append(EfficiencyResult(float(x), t_opt, e_max, proto.baseline, proto.outcomes(t_opt)))
    return out


def peak_efficiency(graph: Graph, model: CouplingModel, pairs: str = "all",
                    theta_range: tuple[float, float] = (np.pi / 4, np.pi / 2), theta_points: int = 13,
                    window: tuple[float, float] | None = None,
                    grid_points: int = DEFAULT_GRID) -> tuple[float, float, float]:
    """Maximum over theta and t of the pure-pair efficiency: (theta, t_opt, e_max).

    Scans a theta grid, then runs golden-section search in theta around the
    best grid point with the time optimisation nested inside.
    """
    sweep = PureSweep((), pairs)

    def best_t(theta):
        return Protocol(graph, model, sweep.specs(graph.n, theta)).maximize(window, grid_points)

    thetas = np.linspace(*theta_range, theta_points)
    vals = [best_t(th)[1] for th in thetas]
    i = int(np.argmax(vals))
    lo, hi = thetas[max(i - 1, 0)], thetas[min(i + 1, len(thetas) - 1)]
    res = minimize_scalar(lambda th: -best_t(th)[1], bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-7})
    theta = float(res.x) if -res.fun >= vals[i] else float(thetas[i])
    t_opt, e_max = best_t(theta)
    return theta, t_opt, e_max
