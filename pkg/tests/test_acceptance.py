"""Acceptance criteria 1-10. Each test records one PASS/FAIL line, printed in
the terminal summary, and then asserts the same verdict."""
import numpy as np
import pytest

from spinnet import closed_forms as cf
from spinnet import graph as G
from spinnet.entanglement import concurrences
from spinnet.hamiltonian import CouplingModel, single_excitation_block
from spinnet.linalg import HermitianOperator, propagator
from spinnet.protocol import Protocol, all_pure, all_werner, first_only, optimize_time, peak_efficiency
from spinnet.report import CONFIRMED, build_report
from spinnet.transfer import TransferScenario, joint_concurrence_oracle, pair_concurrence

from oracles import random_density

pytestmark = pytest.mark.acceptance

HALF = CouplingModel("xy", 0.5)
UNIT = CouplingModel("xy", 1.0)
THETAS = np.linspace(np.pi / 4, np.pi / 2, 20)
SPOT = 3 * np.pi / 8


@pytest.fixture(scope="module")
def report():
    return {c.key: c for c in build_report()}


def test_criterion_01_single_pair_surface(criterion):
    dev = 0.0
    for th in np.linspace(0, np.pi / 2, 25):
        proto = Protocol(G.path(2), HALF, first_only(2, th))
        for t in np.linspace(0, np.pi, 50):
            dev = max(dev, abs(proto.efficiency(t) - max(0.0, cf.single_pair_efficiency(th, t))))
    assert criterion(1, dev <= 1e-9, f"single-pair E(theta, t) on 25x50 grid, max dev {dev:.2e} (tol 1e-9)")


def test_criterion_02_optimal_time(criterion):
    dt = de = 0.0
    for th in (0.9, 1.1, 1.3):
        t_opt, e_max = optimize_time(G.path(2), HALF, first_only(2, th))
        dt = max(dt, abs(np.cos(t_opt) ** 2 - cf.single_pair_opt_cos2(th)))
        de = max(de, abs(e_max - cf.single_pair_max(th)))
    ok = dt <= 1e-4 and de <= 1e-8
    assert criterion(2, ok, f"|cos^2 t_opt - 1/(2 sin^2)| = {dt:.2e} (tol 1e-4), |e_max - closed form| = "
                            f"{de:.2e} (tol 1e-8)")


def _fixed_time_deviation(graph, t, formula):
    return max(abs(Protocol(graph, UNIT, all_pure(graph.n, th)).efficiency(t) - formula(th)) for th in THETAS)


def test_criterion_03_three_sites(criterion):
    d_path = _fixed_time_deviation(G.path(3), np.pi / np.sqrt(2), cf.three_site_max)
    d_k3 = _fixed_time_deviation(G.complete(3), np.pi, cf.three_site_max)
    e_path = Protocol(G.path(3), UNIT, all_pure(3, SPOT)).maximize()
    e_k3 = Protocol(G.complete(3), UNIT, all_pure(3, SPOT)).maximize()
    spot = cf.three_site_max(SPOT)
    ok = d_path <= 1e-8 and d_k3 <= 1e-8 and abs(e_path[1] - spot) <= 1e-8 and abs(e_k3[1] - spot) <= 1e-8
    assert criterion(3, ok, f"dev path(3) {d_path:.3g}, complete(3) {d_k3:.3g} (tol 1e-8); printed E(3pi/8) = "
                            f"{spot:.6f} vs simulated max {e_path[1]:.6f} (path) / {e_k3[1]:.6f} (complete); "
                            f"bound 1 - sin(2 theta) = {cf.concurrence_upper_bound(SPOT):.6f}")


def test_criterion_04_four_sites(criterion):
    d_c4 = _fixed_time_deviation(G.cycle(4), np.pi, cf.four_site_max)
    d_k4 = _fixed_time_deviation(G.complete(4), np.pi / 2, cf.four_site_max)
    spot = cf.four_site_max(SPOT)
    ok = d_c4 <= 1e-6 and d_k4 <= 1e-6 and abs(spot - 0.497648) <= 1e-5
    e_c4 = Protocol(G.cycle(4), UNIT, all_pure(4, SPOT)).maximize()[1]
    assert criterion(4, ok, f"dev cycle(4) at pi {d_c4:.3g}, complete(4) at pi/2 {d_k4:.3g} (tol 1e-6); printed "
                            f"E(3pi/8) = {spot:.6f}, simulated max {e_c4:.6f}, bound "
                            f"{cf.concurrence_upper_bound(SPOT):.6f}")


def test_criterion_05_five_sites(criterion, report):
    c = report["n5_cycle"]
    documented = (any("true optimum" in n for n in c.notes) and any("incommensurate" in n for n in c.notes)
                  and np.isfinite(c.max_deviation))
    ok = c.max_deviation <= 1e-3 or documented
    assert criterion(5, ok, f"cycle(5) at pi: printed {c.printed:.6f}, simulated {c.simulated:.3g}, "
                            f"max dev {c.max_deviation:.3g}; deviation, true optimum and incommensurate caveat "
                            f"{'documented' if documented else 'MISSING'} in report")


def test_criterion_06_purification_threshold(criterion, report):
    e_small = 0.0
    for g in (G.edgeless(1), G.path(2)):
        for model in (HALF, UNIT):
            for f in (0.3, 0.5, 0.7, 0.9, 1.0):
                proto = Protocol(g, model, all_werner(g.n, f))
                e_small = max(e_small, max(proto.efficiency(t) for t in np.linspace(0, 2 * np.pi, 41)))
    gap = report["werner_gap_f1"]
    compared = gap.printed == pytest.approx(-0.75) and gap.simulated is not None
    t_path, e_path = Protocol(G.path(3), UNIT, all_werner(3, 0.9)).maximize()
    t_k3, e_k3 = Protocol(G.complete(3), UNIT, all_werner(3, 0.9)).maximize()
    ok = e_small <= 1e-10 and compared and e_path > 0 and e_k3 > 0
    assert criterion(6, ok, f"n<=2 max E {e_small:.2e} (tol 1e-10); C_o - C at f=1 printed -0.75 vs simulated "
                            f"range min {gap.simulated:.4f} ({gap.verdict}); n=3, f=0.9: path(3) E = {e_path:.3g} "
                            f"at t={t_path:.4f}, complete(3) E = {e_k3:.4g} at t={t_k3:.4f}")


def _random_graph(rng, n):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.6]
    return G.from_edge_list(n, pairs)


def test_criterion_07_transfer_product_law(criterion, rng):
    dev = 0.0
    for _ in range(100):
        ga, gb = _random_graph(rng, rng.integers(1, 5)), _random_graph(rng, rng.integers(1, 5))
        s = TransferScenario(ga, gb, *(int(rng.integers(1, g.n + 1)) for g in (ga, gb, ga, gb)))
        t = rng.uniform(0, 2 * np.pi)
        dev = max(dev, abs(joint_concurrence_oracle(s, t) - pair_concurrence(s, t)))
    p2 = TransferScenario(G.path(2), G.path(2), 1, 1, 2, 2)
    p3 = TransferScenario(G.path(3), G.path(3), 1, 1, 3, 3)
    perfect = [joint_concurrence_oracle(p2, np.pi / 4), pair_concurrence(p2, np.pi / 4),
               joint_concurrence_oracle(p3, np.pi / (2 * np.sqrt(2))), pair_concurrence(p3, np.pi / (2 * np.sqrt(2)))]
    dp = max(abs(c - 1) for c in perfect)
    ok = dev <= 1e-10 and dp <= 1e-9
    assert criterion(7, ok, f"oracle vs product on 100 random cases, max dev {dev:.2e} (tol 1e-10); "
                            f"perfect transfer |C - 1| = {dp:.2e} (tol 1e-9)")


def test_criterion_08_structural_invariants(criterion, rng):
    runs = [(G.path(2), HALF, first_only(2, 1.0)), (G.path(2), HALF, all_pure(2, 1.2)),
            (G.path(3), UNIT, all_pure(3, 1.1)), (G.complete(3), UNIT, all_werner(3, 0.9)),
            (G.cycle(4), UNIT, all_pure(4, 0.9)), (G.complete(4), UNIT, all_werner(4, 0.6)),
            (G.cycle(5), UNIT, all_pure(5, SPOT))]
    dp = 0.0
    for g, m, specs in runs:
        proto = Protocol(g, m, specs)
        for t in rng.uniform(0, 8 * np.pi, 10):
            dp = max(dp, abs(proto.probabilities(t).sum() - 1))
    db = du = 0.0
    for g in (G.path(2), G.path(3), G.cycle(4), G.complete(4), G.cycle(5), _random_graph(rng, 6)):
        for s in (0.5, 1.0, 1.7):
            block = single_excitation_block(g, CouplingModel("xy", s))
            db = max(db, np.max(np.abs(block.matrix + 2 * s * g.adjacency_matrix())))
            for t in rng.uniform(0, 20, 3):
                u = propagator(block, t).matrix
                du = max(du, np.max(np.abs(u.conj().T @ u - np.eye(g.n))))
    h = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    u = propagator(HermitianOperator(h + h.conj().T), 3.3).matrix
    du = max(du, np.max(np.abs(u.conj().T @ u - np.eye(16))))
    rhos = np.array([random_density(rng, 4, int(rng.integers(1, 5))) for _ in range(1000)])
    c = concurrences(rhos)
    ok = dp <= 1e-9 and db <= 1e-12 and du <= 1e-10 and c.min() >= 0 and c.max() <= 1 + 1e-9
    assert criterion(8, ok, f"|sum P - 1| {dp:.1e}; block vs -2sA {db:.1e}; unitarity {du:.1e}; "
                            f"concurrence range [{c.min():.3g}, {c.max():.6f}] on 1000 densities")


# Graphs drawn for each network size in the concentration figure.
FIGURE_CONFIGS = [
    ("(2,1)", [(G.path(2), HALF, "first-only")]),
    ("(2,2)", [(G.path(2), HALF, "all")]),
    ("(3,3)", [(G.path(3), UNIT, "all"), (G.complete(3), UNIT, "all")]),
    ("(4,4)", [(G.cycle(4), UNIT, "all"), (G.complete(4), UNIT, "all")]),
    ("(5,5)", [(G.cycle(5), UNIT, "all")]),
]
# frozen from this package's optimizer; regression reference, not a criterion target
FROZEN_PEAKS = {"(2,1)": 0.106945, "(2,2)": 0.018337, "(3,3)": 0.012028, "(4,4)": 0.035459, "(5,5)": 0.009317}


def test_criterion_09_figure_trend(criterion):
    peaks = {}
    for label, cases in FIGURE_CONFIGS:
        peaks[label] = max(peak_efficiency(g, m, pairs)[2] for g, m, pairs in cases)
    seq = [peaks[label] for label, _ in FIGURE_CONFIGS]
    increasing = all(b > a for a, b in zip(seq, seq[1:]))
    ok = increasing and abs(peaks["(2,1)"] - 0.107) <= 0.01 and abs(peaks["(3,3)"] - 0.481) <= 0.01
    regression = max(abs(peaks[k] - v) for k, v in FROZEN_PEAKS.items())
    listing = ", ".join(f"{k} {v:.6f}" for k, v in peaks.items())
    assert regression <= 1e-5, f"optimizer drifted from frozen peaks: {listing}"
    assert criterion(9, ok, f"peaks over theta and t: {listing}; strictly increasing: {increasing}; "
                            f"(2,1) target 0.107 +- 0.01, (3,3) target 0.481 +- 0.01")


def test_criterion_10_heisenberg(criterion, report):
    keys = [k for k in report if k.startswith("heisenberg_")]
    documented = all(report[k].verdict == CONFIRMED or report[k].notes for k in keys)
    ok = len(keys) >= 3 and documented
    summary = ", ".join(f"{k[len('heisenberg_'):]} {report[k].max_deviation:.2g} {report[k].verdict}" for k in keys)
    assert criterion(10, ok, f"|E_XY - E_Heis| at matched times: {summary}")
