"""Ground-state observables from the Gaussian pair correlation function."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .quantum_numbers import StateSpec, check_n


@dataclass(frozen=True)
class ScaleParams:
    lambdas: tuple[float, ...]


@dataclass(frozen=True)
class ObservableSet:
    lambda1: float
    delta: float
    moments: dict[int, float] = field(default_factory=dict)

    @property
    def mean_r(self) -> float:
        return self.moments[1]


def _positive(**values):
    for name, v in values.items():
        if not (v > 0 and math.isfinite(v)):
            raise DomainError(f"{name} must be a positive finite number, got {v!r}")


def scale_params(N: int, q_phi: float, r0: float) -> ScaleParams:
    """Inverse widths of the N-1 internal oscillators."""
    check_n(N)
    _positive(q_phi=q_phi, r0=r0)
    return ScaleParams(tuple(math.sqrt(i * N * q_phi / (i + 1)) / r0 for i in range(1, N)))


def pair_correlation(lambda1, D, r):
    """Gaussian pair density ``lambda1^D / pi^(D/2) * exp(-lambda1^2 r^2)``; accepts arrays."""
    _positive(lambda1=lambda1)
    r = np.asarray(r, dtype=float)
    c = lambda1**D / math.pi ** (D / 2) * np.exp(-((lambda1 * r) ** 2))
    return float(c) if c.ndim == 0 else c


def delta_at_origin(lambda1: float, D: int) -> float:
    _positive(lambda1=lambda1)
    return 2 * lambda1**D / math.gamma(D / 2)


def radial_moment(lambda1: float, D: int, k: int) -> float:
    """<r^k> over the Gaussian pair density."""
    _positive(lambda1=lambda1)
    if k < 0:
        raise DomainError(f"moment order must be non-negative, got {k!r}")
    if k == 0:
        return 1.0
    return math.exp(math.lgamma((D + k) / 2) - math.lgamma(D / 2)) * lambda1 ** (-k)


def ground_state_observables(
    N: int, D: int, q_phi: float, r0: float, state: StateSpec | None = None, orders=(1, 2)
) -> ObservableSet:
    """lambda_1, delta and moments for the bosonic ground state.

    Only the ground state has a closed-form pair density; any excitation is
    rejected.
    """
    if state is not None and not state.is_ground:
        raise DomainError("observables are only available for the ground state (all n = l = 0)")
    lam1 = scale_params(N, q_phi, r0).lambdas[0]
    moments = {0: 1.0}
    moments.update({k: radial_moment(lam1, D, k) for k in orders})
    return ObservableSet(lam1, delta_at_origin(lam1, D), moments)
