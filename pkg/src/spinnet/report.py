"""Discrepancy report: literature closed forms versus the exact simulator.

Each check evaluates a printed expression and the simulator on a small grid
and issues a verdict. The simulator is treated as ground truth.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as cf
from . import graph as G
from .hamiltonian import Coupling, CouplingModel
from .protocol import Protocol, all_pure, all_werner, first_only

CONFIRMED = "CONFIRMED"
DISCREPANT = "DISCREPANT"

HALF = CouplingModel(Coupling.XY, 0.5)
UNIT = CouplingModel(Coupling.XY, 1.0)


@dataclass
class Check:
    key: str
    title: str
    printed: float | None
    simulated: float | None
    max_deviation: float
    tolerance: float
    at: str = ""
    notes: list[str] = field(default_factory=list)
    verdict: str = ""

    def __post_init__(self):
        if not self.verdict:
            self.verdict = CONFIRMED if self.max_deviation <= self.tolerance else DISCREPANT

    def render(self) -> str:
        lines = [f"[{self.key}] {self.title}"]
        if self.printed is not None:
            lines.append(f"  printed formula{self.at}: {self.printed:.12g}")
        if self.simulated is not None:
            lines.append(f"  simulator{self.at}: {self.simulated:.12g}")
        lines.append(f"  max |deviation| over grid: {self.max_deviation:.6g} (tolerance {self.tolerance:g})")
        lines += [f"  note: {n}" for n in self.notes]
        lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)


def _outcome(proto: Protocol, t: float, bits: str):
    for r in proto.outcomes(t):
        if r.bits_a + r.bits_b == bits:
            return r
    raise KeyError(bits)


def check_single_pair(thetas, ts) -> list[Check]:
    dp = dc = de = 0.0
    for th in thetas:
        proto = Protocol(G.path(2), HALF, first_only(2, th))
        for t in ts:
            r = _outcome(proto, t, "00")
            dp = max(dp, abs(r.probability - cf.single_pair_p00(th, t)))
            dc = max(dc, abs(r.concurrence_out - cf.single_pair_c00(th, t)))
            de = max(de, abs(proto.efficiency(t) - max(0.0, cf.single_pair_efficiency(th, t))))
    th, t = np.pi / 3, np.pi / 3
    proto = Protocol(G.path(2), HALF, first_only(2, th))
    at = " (theta=pi/3, t=pi/3)"
    checks = [
        Check("single_p00", "single pair, probability of outcome 00 (scale 1/2)",
              cf.single_pair_p00(th, t), _outcome(proto, t, "00").probability, dp, 1e-10, at),
        Check("single_c00", "single pair, concurrence after outcome 00 (scale 1/2)",
              cf.single_pair_c00(th, t), _outcome(proto, t, "00").concurrence_out, dc, 1e-9, at),
        Check("single_eff", "single pair, efficiency E(theta, t) = max(0, expression) (scale 1/2)",
              max(0.0, cf.single_pair_efficiency(th, t)), proto.efficiency(t), de, 1e-9, at),
    ]
    dt = dm = 0.0
    for th in (0.9, 1.1, 1.3):
        t_opt, e_max = Protocol(G.path(2), HALF, first_only(2, th)).maximize()
        dt = max(dt, abs(np.cos(t_opt) ** 2 - cf.single_pair_opt_cos2(th)))
        dm = max(dm, abs(e_max - cf.single_pair_max(th)))
    checks.append(Check("single_opt_time", "single pair, cos^2(t_opt) = 1/(2 sin^2 theta)",
                        None, None, dt, 1e-4, notes=["theta in {0.9, 1.1, 1.3}"]))
    checks.append(Check("single_max", "single pair, maximum efficiency over t",
                        cf.single_pair_max(1.1), Protocol(G.path(2), HALF, first_only(2, 1.1)).maximize()[1],
                        dm, 1e-8, " (theta=1.1)"))
    return checks


def check_two_pairs(thetas, ts) -> list[Check]:
    forms = {
        "two_p00": ("probability of outcome 00", cf.two_pair_p00, lambda r: r.probability, "00"),
        "two_c00": ("concurrence after outcome 00", cf.two_pair_c00, lambda r: r.concurrence_out, "00"),
        "two_p11": ("probability of outcome 11 ('+-' read as '-')", cf.two_pair_p11, lambda r: r.probability, "11"),
        "two_c11": ("concurrence after outcome 11", cf.two_pair_c11, lambda r: r.concurrence_out, "11"),
    }
    dev = dict.fromkeys(forms, 0.0)
    de = 0.0
    neg_prob = False
    for th in thetas:
        proto = Protocol(G.path(2), HALF, all_pure(2, th))
        for t in ts:
            recs = {r.bits_a + r.bits_b: r for r in proto.outcomes(t)}
            for key, (_, fn, get, bits) in forms.items():
                with np.errstate(divide="ignore", invalid="ignore"):
                    val = fn(th, t)
                if key in ("two_p00", "two_p11") and val < 0:
                    neg_prob = True
                d = abs(get(recs[bits]) - val) if np.isfinite(val) else np.inf
                dev[key] = max(dev[key], d)
            de = max(de, abs(proto.efficiency(t) - cf.two_pair_efficiency(th, t)))
    th, t = np.pi / 3, np.pi
    proto = Protocol(G.path(2), HALF, all_pure(2, th))
    recs = {r.bits_a + r.bits_b: r for r in proto.outcomes(t)}
    at = " (theta=pi/3, t=pi)"
    checks = []
    for key, (title, fn, get, bits) in forms.items():
        notes = ["printed probabilities go negative on the grid"] if neg_prob and key in ("two_p00", "two_p11") else []
        checks.append(Check(key, f"two pairs, {title} (scale 1/2)", fn(th, t), get(recs[bits]),
                            dev[key], 1e-9, at, notes))
    checks.append(Check("two_eff", "two pairs, efficiency E(theta, t) (scale 1/2)",
                        cf.two_pair_efficiency(th, t), proto.efficiency(t), de, 1e-9, at))
    # claimed optimum at t = pi
    dmax = 0.0
    notes = ["the two-site propagator at t = pi is the identity up to excitation-parity phases that cancel "
             "between the networks, so E(pi) = 0 at both coupling scales"]
    for th in (np.pi / 3, 3 * np.pi / 8, 1.3):
        e_pi = Protocol(G.path(2), HALF, all_pure(2, th)).efficiency(np.pi)
        t_opt, e_max = Protocol(G.path(2), HALF, all_pure(2, th)).maximize()
        dmax = max(dmax, abs(cf.two_pair_max(th) - e_max))
        notes.append(f"theta={th:.6f}: printed {cf.two_pair_max(th):.6f}, simulator E(pi)={e_pi:.3g}, "
                     f"true max {e_max:.6f} at t={t_opt:.6f}")
    checks.append(Check("two_max", "two pairs, maximum efficiency (claimed at t = pi)",
                        cf.two_pair_max(np.pi / 3), Protocol(G.path(2), HALF, all_pure(2, np.pi / 3)).maximize()[1],
                        dmax, 1e-6, " (theta=pi/3)", notes))
    return checks


def _many_site_check(key, title, graph, t_eval, formula, thetas, tol):
    dev = 0.0
    bound_broken = 0
    for th in thetas:
        e = Protocol(graph, UNIT, all_pure(graph.n, th)).efficiency(t_eval)
        dev = max(dev, abs(e - formula(th)))
        if formula(th) > cf.concurrence_upper_bound(th) + 1e-12:
            bound_broken += 1
    th = 3 * np.pi / 8
    proto = Protocol(graph, UNIT, all_pure(graph.n, th))
    t_opt, e_max = proto.maximize()
    notes = [f"true optimum at theta=3pi/8 over t in [0, {proto.default_window()[1]:.6f}]: "
             f"E={e_max:.9f} at t={t_opt:.9f}"]
    if bound_broken:
        notes.append(f"printed values exceed the hard bound E <= 1 - sin(2 theta) at {bound_broken}/{len(thetas)} "
                     "grid points; no simulator can reach them")
    return Check(key, title, formula(th), proto.efficiency(t_eval), dev, tol,
                 f" (theta=3pi/8, t={t_eval:.6f})", notes)


def check_many_sites(thetas) -> list[Check]:
    return [
        _many_site_check("n3_path", "n=3 path, efficiency at t = pi/sqrt(2) (scale 1)", G.path(3),
                         np.pi / np.sqrt(2), cf.three_site_max, thetas, 1e-8),
        _many_site_check("n3_complete", "n=3 complete, efficiency at t = pi (scale 1)", G.complete(3),
                         np.pi, cf.three_site_max, thetas, 1e-8),
        _many_site_check("n4_cycle", "n=4 cycle, efficiency at t = pi (scale 1)", G.cycle(4),
                         np.pi, cf.four_site_max, thetas, 1e-6),
        _many_site_check("n4_complete", "n=4 complete, efficiency at t = pi/2 (scale 1)", G.complete(4),
                         np.pi / 2, cf.four_site_max, thetas, 1e-6),
        _five_site_check(thetas),
    ]


def _five_site_check(thetas) -> Check:
    c = _many_site_check("n5_cycle", "n=5 cycle, efficiency at t = pi (scale 1)", G.cycle(5),
                         np.pi, cf.five_site_max, thetas, 1e-3)
    c.notes.append("the 5-cycle spectrum is incommensurate, so no exact revival time exists; "
                   "t = pi is only an evaluation point and the optimum above is over the capped 8 pi window")
    return c


def check_werner_pairs(fs, ts) -> list[Check]:
    """C_o - C for Werner pairs on two-site networks against the printed constant."""
    checks = []
    for f in fs:
        gaps = []
        for t in ts:
            proto = Protocol(G.path(2), HALF, all_werner(2, f))
            gaps += [r.concurrence_out - proto.baseline for r in proto.outcomes(t) if not r.degenerate]
        gaps = np.array(gaps)
        printed = cf.werner_gain_gap(f)
        notes = [f"simulated C_o - C ranges over [{gaps.min():.6f}, {gaps.max():.6f}] across outcomes and times",
                 "time-independent and outcome-independent" if np.ptp(gaps) < 1e-9
                 else "C_o - C depends on the outcome and on t",
                 f"max C_o - C = {gaps.max():.3g} <= 0, so the efficiency vanishes as claimed"
                 if gaps.max() <= 1e-10 else "some outcome gains concurrence"]
        checks.append(Check(f"werner_gap_f{f:g}", f"Werner pairs, n=2: C_o - C at f={f:g}",
                            printed, float(gaps.min()), float(np.max(np.abs(gaps - printed))), 1e-9,
                            notes=notes))
    return checks


def check_purification_threshold(f: float = 0.9) -> Check:
    notes = []
    values = {}
    for name, g in (("path", G.path(3)), ("complete", G.complete(3))):
        t_opt, e_max = Protocol(g, UNIT, all_werner(3, f)).maximize(grid_points=400)
        values[name] = e_max
        notes.append(f"{name}(3): max E = {e_max:.6g} at t = {t_opt:.6f}")
    e12 = max(Protocol(g, HALF, all_werner(g.n, f)).efficiency(t)
              for g in (G.edgeless(1), G.path(2)) for t in np.linspace(0, np.pi, 25))
    notes.append(f"n in {{1, 2}}: max E over the t grid = {e12:.3g}")
    ok = all(v > 0 for v in values.values()) and e12 <= 1e-10
    return Check("purification_threshold", f"Werner pairs: E = 0 for n <= 2, E > 0 for n = 3 (f={f:g})",
                 None, None, e12, 1e-10, notes=notes, verdict=CONFIRMED if ok else DISCREPANT)


def check_heisenberg(thetas, ts) -> list[Check]:
    cases = [("path(2), first pair only", G.path(2), first_only),
             ("path(2), all pairs", G.path(2), all_pure),
             ("path(3), all pairs", G.path(3), all_pure),
             ("complete(3), all pairs", G.complete(3), all_pure)]
    heis = CouplingModel(Coupling.HEISENBERG, 1.0)
    checks = []
    for title, g, layout in cases:
        dev = 0.0
        for th in thetas:
            a = Protocol(g, UNIT, layout(g.n, th))
            b = Protocol(g, heis, layout(g.n, th))
            dev = max(dev, max(abs(a.efficiency(t) - b.efficiency(t)) for t in ts))
        notes = [] if dev <= 1e-9 else [
            "ZZ couplings are not a function of excitation number on this graph, so the dynamics differ "
            "beyond a sector phase"]
        key = "heisenberg_" + title.split(",")[0].replace("(", "").replace(")", "") + ("_first" if layout is first_only else "")
        checks.append(Check(key, f"Heisenberg vs XY efficiency at matched times, {title}",
                            None, None, dev, 1e-9, notes=notes))
    return checks


def build_report(quick: bool = False) -> list[Check]:
    thetas = np.linspace(np.pi / 4, np.pi / 2, 6 if quick else 20)
    ts = np.linspace(0, np.pi, 9 if quick else 25)
    checks = []
    checks += check_single_pair(thetas, ts)
    checks += check_two_pairs(thetas, ts)
    checks += check_many_sites(thetas)
    checks += check_werner_pairs([0.5, 0.9, 1.0], ts)
    checks.append(check_purification_threshold())
    checks += check_heisenberg(thetas[1:-1:2] if not quick else thetas[1:-1], np.linspace(0, 6, 31))
    return checks


def render_report(checks: list[Check]) -> str:
    head = ["Closed-form discrepancy report", "=" * 30, ""]
    body = "\n\n".join(c.render() for c in checks)
    summary = [f"{c.verdict:10s} {c.key}" for c in checks]
    return "\n".join(head) + body + "\n\nSummary\n-------\n" + "\n".join(summary) + "\n"
