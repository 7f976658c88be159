"""Fitting phi to reference energies and the mean relative error metric."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .closed_forms import SystemPreset
from .errors import DomainError, InfeasibleError, NoBracketError, NonMonotoneError
from .et_solver import solve
from .hamiltonian import HamiltonianSpec
from .quantum_numbers import StateSpec, global_q_phi

PRESCAN_POINTS = 41
GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class FitResult:
    phi: float
    residual: float
    iterations: int
    bracket: tuple[float, float]


def mean_relative_error(approx: Sequence[float], exact: Sequence[float]) -> float:
    """Mean of ``|approx_i - exact_i| / |exact_i|``."""
    approx = np.asarray(approx, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if approx.shape != exact.shape or approx.ndim != 1 or approx.size == 0:
        raise DomainError("need two non-empty lists of equal length")
    if np.any(exact == 0):
        raise DomainError("exact values must be non-zero")
    return float(np.mean(np.abs(approx - exact) / np.abs(exact)))


def et_energy(system: SystemPreset | HamiltonianSpec, state: StateSpec, phi: float) -> float:
    """ET energy at Q_phi; NaN when the solution is not usable.

    Presets use their closed form, explicit Hamiltonians the numerical solver.
    """
    q = global_q_phi(state, system.D, phi)
    sol = solve(system, q, phi=phi) if isinstance(system, HamiltonianSpec) else system.closed_form(q, phi)
    return sol.energy if sol.ok else math.nan


def _check_bracket(bracket):
    lo, hi = bracket
    if not 0 < lo < hi:
        raise DomainError(f"need 0 < phi_lo < phi_hi, got {bracket!r}")
    return float(lo), float(hi)


def fit_phi(system: SystemPreset, state: StateSpec, e_ref: float, bracket=(0.5, 3.0)) -> FitResult:
    """Find phi such that the ET energy of ``state`` equals ``e_ref``.

    E(phi) is pre-scanned on a grid; it must be strictly monotone over the
    usable points, and the root is then polished by Brent's method.
    """
    lo, hi = _check_bracket(bracket)
    grid = np.linspace(lo, hi, PRESCAN_POINTS)
    values = np.array([et_energy(system, state, p) for p in grid])
    usable = np.isfinite(values)
    if not usable.any():
        raise InfeasibleError(f"no usable ET solution for phi in [{lo}, {hi}]")
    g, v = grid[usable], values[usable]
    steps = np.diff(v)
    if len(steps) and not (np.all(steps > 0) or np.all(steps < 0)):
        raise NonMonotoneError("E(phi) is not strictly monotone on the bracket")
    d = v - e_ref
    hits = np.flatnonzero(d == 0)
    if hits.size:
        return FitResult(float(g[hits[0]]), 0.0, 0, (lo, hi))
    change = np.flatnonzero(d[:-1] * d[1:] < 0)
    if not change.size:
        raise NoBracketError(
            f"E(phi) - e_ref keeps one sign on [{lo}, {hi}] (range {v.min():.6g} .. {v.max():.6g})"
        )
    a, b = g[change[0]], g[change[0] + 1]
    phi, info = brentq(
        lambda p: et_energy(system, state, p) - e_ref, a, b, xtol=1e-13, rtol=1e-15, full_output=True
    )
    return FitResult(float(phi), float(et_energy(system, state, phi) - e_ref), info.iterations, (lo, hi))


def dataset_error(system: SystemPreset, records, phi: float) -> float:
    approx = [et_energy(system, state, phi) for state, _ in records]
    if not all(math.isfinite(e) for e in approx):
        return math.inf
    return mean_relative_error(approx, [e for _, e in records])


def _golden_section(f, a, b, tol):
    c, d = b - GOLDEN * (b - a), a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    iterations = 0
    while b - a > tol:
        iterations += 1
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    return 0.5 * (a + b), iterations


def fit_phi_dataset(system: SystemPreset, records, bracket=(0.5, 3.0), tol=1e-7) -> FitResult:
    """phi minimising the mean relative error over ``records`` of ``(state, e_ref)``."""
    records = list(records)
    if not records:
        raise DomainError("need at least one reference record")
    lo, hi = _check_bracket(bracket)
    grid = np.linspace(lo, hi, PRESCAN_POINTS)
    errors = np.array([dataset_error(system, records, p) for p in grid])
    finite = np.isfinite(errors)
    if not finite.any():
        raise InfeasibleError(f"no usable ET solution for phi in [{lo}, {hi}]")
    g, e = grid[finite], errors[finite]
    i = int(np.argmin(e))
    # unimodal: non-increasing up to the minimum, non-decreasing after it
    if np.any(np.diff(e[: i + 1]) > 0) or np.any(np.diff(e[i:]) < 0):
        raise NonMonotoneError("mean relative error is not unimodal on the bracket")
    a, b = g[max(i - 1, 0)], g[min(i + 1, len(g) - 1)]
    phi, iterations = _golden_section(lambda p: dataset_error(system, records, p), a, b, tol)
    return FitResult(float(phi), dataset_error(system, records, phi), iterations, (lo, hi))
