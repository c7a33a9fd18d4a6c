"""Closed-form expressions from the literature that the simulator is checked against.

Single-pair and two-pair expressions are written for coupling scale 1/2
(transfer amplitudes cos t, sin t on a single edge). Expressions for three
or more vertices are functions of theta only, evaluated at a fixed time.
These are reproduced as printed, including their defects; the discrepancy
report decides which of them hold.
"""
from __future__ import annotations

import numpy as np


def single_pair_p00(theta, t):
    return np.cos(theta) ** 2 + np.sin(theta) ** 2 * np.cos(t) ** 4


def single_pair_c00(theta, t):
    s, c = np.sin(theta), np.cos(theta)
    return 2 * s * c * np.cos(t) ** 2 / single_pair_p00(theta, t)


def single_pair_efficiency(theta, t):
    """Signed expression; the efficiency itself is its positive part."""
    s, c = np.sin(theta), np.cos(theta)
    return 2 * s * c * (np.cos(t) ** 2 - c**2 - s**2 * np.cos(t) ** 4)


def single_pair_opt_cos2(theta):
    """cos^2 of the optimal time (needs theta >= pi/4)."""
    return 1 / (2 * np.sin(theta) ** 2)


def single_pair_max(theta):
    s, c = np.sin(theta), np.cos(theta)
    return c / (2 * s) * (1 - 4 * c**2 * s**2)


def two_pair_p00(theta, t):
    s2, c2 = np.sin(theta) ** 2, np.cos(theta) ** 2
    return 0.5 * c2 * (2 * c2 - s2 - s2 * np.cos(4 * t))


def two_pair_c00(theta, t):
    s, c = np.sin(theta), np.cos(theta)
    return 4 * s * c * np.cos(2 * t) / (2 * c**2 - s**2 - s**2 * np.cos(4 * t))


def two_pair_p11(theta, t):
    # printed with a stray "+-"; read as a minus sign
    s2, c2 = np.sin(theta) ** 2, np.cos(theta) ** 2
    return 0.5 * s2 * (c2 - 2 * s2 + c2 * np.cos(4 * t))


def two_pair_c11(theta, t):
    s, c = np.sin(theta), np.cos(theta)
    return 4 * s * c * np.cos(2 * t) / (c**2 - 2 * s**2 + c**2 * np.cos(4 * t))


def two_pair_efficiency(theta, t):
    s, c = np.sin(theta), np.cos(theta)
    c2t, c4t = np.cos(2 * t), np.cos(4 * t)
    return (c**4 * s**4
            * (c**2 - 2 * s**2 - 2 * c2t + c**2 * c4t)
            * (2 * c**2 - s**2 - 2 * c2t - s**2 * c4t)
            - 2 * c**5 * s * c4t)


def two_pair_max(theta):
    s, c = np.sin(theta), np.cos(theta)
    return 2 * c**4 * s * (8 * s**7 - c)


def three_site_max(theta):
    c2 = np.cos(theta) ** 2
    return 5 * c2 * (1 - c2) * (1 - 2 * c2)


def four_site_max(theta):
    s, c = np.sin(theta), np.cos(theta)
    return c * s**3 * (8 * np.cos(4 * theta) - 3 * np.cos(6 * theta) - 29 * np.cos(2 * theta) + 8) / 16


def five_site_max(theta):
    s, c = np.sin(theta), np.cos(theta)
    return c * s**3 * (np.cos(4 * theta) - np.cos(6 * theta) - 13 * np.cos(2 * theta) + 1) / 4


def werner_gain_gap(f):
    """Claimed outcome-independent C_o - C for Werner pairs on two-site networks."""
    return (1 + 4 * f - 32 * f**2) / 36


def concurrence_upper_bound(theta):
    """E <= 1 - C for any protocol, since no conditional concurrence exceeds 1."""
    return 1 - abs(np.sin(2 * theta))
