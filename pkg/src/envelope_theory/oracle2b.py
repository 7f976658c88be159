"""Independent two-body radial solver (D = 3, l = 0) used as a reference.

The reduced radial equation ``-u''/(2 mu) + V(r) u = E u`` with
``u(0) = u(r_max) = 0`` is discretised by second-order finite differences.
The lowest eigenvalue of the symmetric tridiagonal matrix is located by
bisection on the Sturm count, then Richardson-extrapolated from the grids
with ``points`` and ``2 * points`` nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from scipy.linalg import solve_banded

from .errors import DomainError, GridError, UnboundError
from .hamiltonian import HamiltonianSpec, NonrelativisticKinetic, Term

Potential = Union[Term, Sequence[Term], Callable[[np.ndarray], np.ndarray]]

MIN_POINTS = 2000
TAIL_RATIO = 1e-8


@dataclass(frozen=True)
class RadialGrid:
    r_max: float
    points: int = 4000

    def __post_init__(self):
        if not self.r_max > 0:
            raise DomainError("r_max must be positive")
        if self.points < MIN_POINTS:
            raise DomainError(f"need at least {MIN_POINTS} grid points, got {self.points}")

    def nodes(self, points=None) -> np.ndarray:
        n = self.points if points is None else points
        # interior nodes only; u vanishes at both ends
        return np.arange(1, n + 1) * (self.r_max / (n + 1))


def _potential_values(potential: Potential, r: np.ndarray) -> np.ndarray:
    if isinstance(potential, Term):
        return np.asarray(potential.value(r), dtype=float)
    if callable(potential):
        return np.asarray(potential(r), dtype=float)
    return sum(np.asarray(t.value(r), dtype=float) for t in potential)


def two_body_problem(h: HamiltonianSpec):
    """Reduce an N = 2 nonrelativistic Hamiltonian to ``(mu, V_rel)``.

    Each particle sits at r/2 from the centre of mass, so the relative
    potential is ``2 U(r/2) + V(r)`` and the reduced mass is ``m/2``.
    """
    if h.N != 2 or h.D != 3 or not isinstance(h.kinetic, NonrelativisticKinetic):
        raise DomainError("the oracle handles N = 2, D = 3 nonrelativistic systems only")
    one, pair = h.one_body, h.pairwise

    def potential(r):
        return 2.0 * np.asarray(one.value(r / 2.0)) + np.asarray(pair.value(r))

    return h.kinetic.m / 2.0, potential


def sturm_count(diag: np.ndarray, off: float, energies: np.ndarray) -> np.ndarray:
    """Number of eigenvalues below each trial energy (vectorised over energies)."""
    energies = np.atleast_1d(np.asarray(energies, dtype=float))
    count = np.zeros(energies.shape, dtype=int)
    q = np.full_like(energies, np.inf)
    off2 = off * off
    tiny = np.finfo(float).tiny ** 0.5
    for d in diag:
        q = d - energies - off2 / q
        q = np.where(q == 0.0, -tiny, q)
        count += q < 0
    return count


def _lowest_eigenvalue(diag, off, tol):
    # Gershgorin interval for the spectrum
    lo = float(np.min(diag)) - 2 * abs(off)
    hi = float(np.min(diag)) + 2 * abs(off) + 1.0
    while sturm_count(diag, off, [hi])[0] < 1:
        hi += 2 * (hi - lo)
    for _ in range(200):
        if hi - lo <= tol * max(1.0, abs(lo), abs(hi)):
            break
        trial = np.linspace(lo, hi, 514)[1:-1]
        counts = sturm_count(diag, off, trial)
        above = np.flatnonzero(counts >= 1)
        k = above[0]
        hi = trial[k]
        if k > 0:
            lo = trial[k - 1]
    return 0.5 * (lo + hi)


def _matrix(mu, potential, r):
    h = r[1] - r[0]
    v = _potential_values(potential, r)
    if not np.all(np.isfinite(v)):
        raise DomainError("potential is not finite on the grid")
    return 1.0 / (mu * h * h) + v, -1.0 / (2.0 * mu * h * h), v


def _eigenvector(diag, off, energy):
    # one inverse-iteration solve, shifted slightly below the eigenvalue
    n = len(diag)
    shift = energy - 1e-9 * max(1.0, abs(energy))
    ab = np.zeros((3, n))
    ab[0, 1:] = off
    ab[1] = diag - shift
    ab[2, :-1] = off
    u = solve_banded((1, 1), ab, np.ones(n))
    u = solve_banded((1, 1), ab, u / np.max(np.abs(u)))
    return np.abs(u / np.max(np.abs(u)))


def ground_energy(mu: float, potential: Potential, grid: RadialGrid, *, tol: float = 1e-13) -> float:
    """Lowest s-wave energy of ``-u''/(2 mu) + V u = E u`` on ``grid``.

    Raises :class:`UnboundError` when the lowest level sits at or above the
    potential at ``r_max`` (a box state, not a bound state), and
    :class:`GridError` when the wavefunction tail at ``r_max`` exceeds
    1e-8 of its peak.
    """
    if not mu > 0:
        raise DomainError("reduced mass must be positive")
    estimates = []
    for points in (grid.points, 2 * grid.points):
        r = grid.nodes(points)
        diag, off, v = _matrix(mu, potential, r)
        e = _lowest_eigenvalue(diag, off, tol)
        if e >= v[-1]:
            raise UnboundError(f"lowest level {e:.6g} is not below V(r_max) = {v[-1]:.6g}")
        estimates.append(e)
    u = _eigenvector(diag, off, e)
    if u[-1] > TAIL_RATIO:
        raise GridError(f"wavefunction tail {u[-1]:.2e} at r_max = {grid.r_max} exceeds {TAIL_RATIO:g}")
    coarse, fine = estimates
    return fine + (fine - coarse) / 3.0
