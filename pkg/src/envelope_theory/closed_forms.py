"""Analytic ET solutions of the four benchmark systems.

* ``wib``: nonrelativistic bosons with a Gaussian pair attraction
* ``sgb``: nonrelativistic bosons with an attractive ``-g/r`` pair potential
* ``cb``: harmonic confinement plus a repulsive ``g/r`` pair potential
* ``lnb``: massless particles, linear confinement, attractive ``-g/r``
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .et_solver import BoundTag, EtSolution, Status, bound_tag
from .hamiltonian import (
    Coulomb,
    Gaussian,
    HamiltonianSpec,
    Harmonic,
    Linear,
    NonrelativisticKinetic,
    UltrarelativisticKinetic,
    Zero,
)
from .quantum_numbers import check_n, pair_count
from .special_functions import BRANCH_POINT, g_root, lambert_w0


def _positive(**values):
    for name, v in values.items():
        if v is None or not (v > 0 and math.isfinite(v)):
            raise DomainError(f"{name} must be a positive finite number, got {v!r}")


def _non_negative(**values):
    for name, v in values.items():
        if v is None or not (v >= 0 and math.isfinite(v)):
            raise DomainError(f"{name} must be a non-negative finite number, got {v!r}")


def wib_argument(N, m, V0, R, q_phi) -> float:
    """Lambert argument Y of the Gaussian system (always negative)."""
    return -q_phi / (math.sqrt(N) * (N - 1) * R * math.sqrt(2 * m * V0))


def wib_solution(N, D, m, V0, R, q_phi):
    """Weakly interacting bosons. Returns ``(r0, E, status)``.

    ``Y < -1/e`` has no real solution (``NoSolution``); a real but
    non-negative energy is flagged ``Irrelevant``. ``D`` enters only via Q.
    """
    check_n(N)
    _positive(m=m, V0=V0, R=R, q_phi=q_phi)
    y = wib_argument(N, m, V0, R, q_phi)
    if y < BRANCH_POINT:
        return math.nan, math.nan, Status.NO_SOLUTION
    w = lambert_w0(y)
    r0 = math.sqrt(N * (N - 1) * -w) * R
    energy = -0.5 * N * (N - 1) * V0 * y * y * (1 + 2 * w) / (w * w)
    return r0, energy, Status.OK if energy < 0 else Status.IRRELEVANT


def sgb_solution(N, m, g, q_phi):
    """Self-gravitating bosons, ``V = -g/r``. Returns ``(r0, E)``."""
    check_n(N)
    _positive(m=m, g=g, q_phi=q_phi)
    r0 = 2**1.5 * q_phi**2 / (math.sqrt(N) * (N - 1) ** 1.5 * m * g)
    energy = -(N**2) * (N - 1) ** 3 * m * g**2 / (16 * q_phi**2)
    return r0, energy


def cb_argument(N, m, omega, g, q_phi) -> float:
    return (
        2 ** (16 / 3) / 3
        / (N ** (4 / 3) * (N - 1) ** 2)
        * (omega / (m * g * g)) ** (2 / 3)
        * q_phi**2
    )


def cb_solution(N, m, omega, g, q_phi):
    """Confined bosons (internal energy, no centre-of-mass term). Returns ``(r0, E)``."""
    check_n(N)
    _positive(m=m, omega=omega, q_phi=q_phi)
    _non_negative(g=g)
    if g == 0:
        return math.sqrt(N * q_phi / (m * omega)), omega * q_phi
    y = cb_argument(N, m, omega, g, q_phi)
    gm = g_root("minus", y)
    r0 = N ** (5 / 6) * math.sqrt(N - 1) / 2 ** (5 / 6) * (g / (m * omega**2)) ** (1 / 3) * gm
    energy = N ** (2 / 3) * (N - 1) / 2 ** (5 / 3) * (m * omega**2 * g**2) ** (1 / 3) * (gm**2 + 1 / gm)
    return r0, energy


def add_cm_offset(energy, D, omega):
    """Add the ground-state energy ``D omega / 2`` of the centre-of-mass oscillator."""
    return energy + 0.5 * D * omega


def lnb_solution(N, tension, g, q_phi):
    """Large-N baryons (mass in the units of ``sqrt(tension)``). Returns ``(r0, E, status)``.

    ``S = N Q - C_N^(3/2) g <= 0`` signals collapse and is returned as
    ``NoSolution`` instead of raising.
    """
    check_n(N)
    _positive(tension=tension, q_phi=q_phi)
    _non_negative(g=g)
    s = N * q_phi - pair_count(N) ** 1.5 * g
    if s <= 0:
        return math.nan, math.nan, Status.NO_SOLUTION
    return math.sqrt(s / tension), math.sqrt(4 * tension) * math.sqrt(s), Status.OK


class SystemKind(enum.Enum):
    WIB = "wib"
    SGB = "sgb"
    CB = "cb"
    LNB = "lnb"

    def __str__(self):
        return self.value


_REQUIRED = {
    SystemKind.WIB: ("m", "V0", "R"),
    SystemKind.SGB: ("m", "g"),
    SystemKind.CB: ("m", "omega", "g"),
    SystemKind.LNB: ("tension", "g"),
}


@dataclass(frozen=True)
class SystemPreset:
    """One of the four analytic systems with its parameters.

    ``g`` is always the positive strength used in that system's formulas;
    the sign of the pair force is fixed by ``kind``.
    """

    kind: SystemKind
    N: int
    D: int = 3
    m: float | None = None
    V0: float | None = None
    R: float | None = None
    g: float | None = None
    omega: float | None = None
    tension: float | None = None
    units: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", SystemKind(self.kind))
        check_n(self.N)
        if int(self.D) != self.D or self.D < 2:
            raise DomainError(f"need an integer dimension D >= 2, got {self.D!r}")
        for name in _REQUIRED[self.kind]:
            value = getattr(self, name)
            if name == "g" and self.kind in (SystemKind.CB, SystemKind.LNB):
                _non_negative(g=value)
            else:
                _positive(**{name: value})

    def replace(self, **changes) -> "SystemPreset":
        return dataclasses.replace(self, **changes)

    def hamiltonian(self) -> HamiltonianSpec:
        k = self.kind
        if k is SystemKind.WIB:
            return HamiltonianSpec(self.N, self.D, NonrelativisticKinetic(self.m), Zero(), Gaussian(self.V0, self.R))
        if k is SystemKind.SGB:
            return HamiltonianSpec(self.N, self.D, NonrelativisticKinetic(self.m), Zero(), Coulomb(-self.g))
        if k is SystemKind.CB:
            return HamiltonianSpec(
                self.N, self.D, NonrelativisticKinetic(self.m), Harmonic(self.m, self.omega), Coulomb(self.g)
            )
        return HamiltonianSpec(self.N, self.D, UltrarelativisticKinetic(), Linear(self.tension), Coulomb(-self.g))

    def closed_form(self, q_phi: float, phi: float | None = 2.0) -> EtSolution:
        """Analytic solution packaged like the numerical one."""
        k = self.kind
        status = Status.OK
        if k is SystemKind.WIB:
            r0, energy, status = wib_solution(self.N, self.D, self.m, self.V0, self.R, q_phi)
        elif k is SystemKind.SGB:
            r0, energy = sgb_solution(self.N, self.m, self.g, q_phi)
        elif k is SystemKind.CB:
            r0, energy = cb_solution(self.N, self.m, self.omega, self.g, q_phi)
        else:
            r0, energy, status = lnb_solution(self.N, self.tension, self.g, q_phi)
        tag = bound_tag(self.hamiltonian(), phi)
        if status is Status.NO_SOLUTION:
            return EtSolution(math.nan, math.nan, math.nan, q_phi, tag, status, roots=0, residual=math.nan)
        return EtSolution(energy, r0, q_phi / r0, q_phi, tag, status)

    def energy(self, q_phi: float) -> float:
        """Closed-form energy, NaN when there is no real solution."""
        return self.closed_form(q_phi, None).energy


__all__ = [
    "BoundTag",
    "SystemKind",
    "SystemPreset",
    "add_cm_offset",
    "cb_argument",
    "cb_solution",
    "lnb_solution",
    "sgb_solution",
    "wib_argument",
    "wib_solution",
]
