"""Numerical solution of the envelope-theory equations for any Hamiltonian.

With ``p0 = Q / r0`` the stationarity condition becomes a single equation in
``r0``::

    N p0 T'(p0) = r0 U'(r0/N) + sqrt(C_N) r0 V'(r0/sqrt(C_N))

and the energy is ``E = N T(p0) + N U(r0/N) + C_N V(r0/sqrt(C_N))``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError
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

SCAN_DECADES = 8
SCAN_POINTS_PER_DECADE = 40
RESIDUAL_RTOL = 1e-12
WIDTH_RTOL = 1e-14


class Status(enum.Enum):
    OK = "Ok"
    IRRELEVANT = "Irrelevant"
    NO_SOLUTION = "NoSolution"

    def __str__(self):
        return self.value


class BoundTag(enum.Enum):
    UPPER = "UpperBound"
    LOWER = "LowerBound"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EtSolution:
    energy: float
    r0: float
    p0: float
    q_phi: float
    bound_tag: BoundTag
    status: Status
    roots: int = 1
    residual: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status is Status.OK


def _check_q(q_phi):
    if not (q_phi > 0 and math.isfinite(q_phi)):
        raise DomainError(f"Q_phi must be a positive finite number, got {q_phi!r}")


def _pieces(h: HamiltonianSpec, q_phi, r0):
    r0 = np.asarray(r0, dtype=float)
    sq = math.sqrt(h.pairs)
    p0 = q_phi / r0
    kin = h.N * p0 * h.kinetic.derivative(p0)
    one = r0 * h.one_body.derivative(r0 / h.N)
    two = sq * r0 * h.pairwise.derivative(r0 / sq)
    return kin, one, two


def residual(h: HamiltonianSpec, q_phi: float, r0):
    """Stationarity residual at ``r0`` (with ``p0 = Q/r0``); zero at a solution."""
    _check_q(q_phi)
    if np.any(np.asarray(r0) <= 0):
        raise DomainError("r0 must be positive")
    kin, one, two = _pieces(h, q_phi, r0)
    res = kin - one - two
    if np.ndim(res) == 0:
        res = float(res)
        if not math.isfinite(res):
            raise NumericError("non-finite residual", r=float(r0))
    return res


def _residual_slope(h, q_phi, r0):
    sq = math.sqrt(h.pairs)
    p0 = q_phi / r0
    dp = -p0 / r0
    t1, t2 = h.kinetic.derivative(p0), h.kinetic.second_derivative(p0)
    kin = h.N * dp * (t1 + p0 * t2)
    s = r0 / h.N
    one = h.one_body.derivative(s) + s * h.one_body.second_derivative(s)
    x = r0 / sq
    two = sq * (h.pairwise.derivative(x) + x * h.pairwise.second_derivative(x))
    return kin - one - two


def energy_at(h: HamiltonianSpec, q_phi: float, r0: float) -> float:
    p0 = q_phi / r0
    e = (
        h.N * h.kinetic.value(p0)
        + h.N * h.one_body.value(r0 / h.N)
        + h.pairs * h.pairwise.value(r0 / math.sqrt(h.pairs))
    )
    if not math.isfinite(e):
        raise NumericError("non-finite energy", r=r0)
    return float(e)


def characteristic_length(h: HamiltonianSpec, q_phi: float) -> float:
    """Length around which the root scan is centred.

    Geometric mean of the lengths each potential defines with the kinetic
    term (R, Bohr radius 1/(m|g|), (m omega)^(-1/2), lambda^(-1/2) or
    (m lambda)^(-1/3)), times ``Q * sqrt(N)`` because r0 grows with both.
    The 16-decade scan leaves ample room for the remaining powers of Q and N.
    """
    lengths = [
        t.length_scale(h.kinetic) for t in (h.one_body, h.pairwise) if not isinstance(t, Zero)
    ]
    lengths = [x for x in lengths if x is not None and math.isfinite(x) and x > 0]
    base = math.exp(sum(math.log(x) for x in lengths) / len(lengths)) if lengths else 1.0
    return base * max(q_phi, 1.0) * math.sqrt(h.N)


def bound_tag(h: HamiltonianSpec, phi: float | None = 2.0) -> BoundTag:
    """Variational direction of the ET energy for the known term combinations."""
    if phi is None or phi != 2.0:
        return BoundTag.UNKNOWN
    kin, one, two = h.kinetic, h.one_body, h.pairwise
    if isinstance(kin, NonrelativisticKinetic) and isinstance(one, Zero):
        if isinstance(two, Gaussian) or (isinstance(two, Coulomb) and two.g < 0):
            return BoundTag.UPPER
    if isinstance(kin, NonrelativisticKinetic) and isinstance(one, Harmonic):
        if isinstance(two, Zero) or (isinstance(two, Coulomb) and two.g >= 0):
            return BoundTag.LOWER
    if isinstance(kin, UltrarelativisticKinetic) and isinstance(one, Linear):
        if isinstance(two, Zero) or (isinstance(two, Coulomb) and two.g <= 0):
            return BoundTag.UPPER
    return BoundTag.UNKNOWN


def _refine(h, q_phi, lo, hi, f_lo):
    """Bisection with Newton steps accepted only when they stay inside the bracket."""
    x = math.sqrt(lo * hi)
    for _ in range(400):
        f = residual(h, q_phi, x)
        if f == 0.0:
            return x
        if (f < 0) == (f_lo < 0):
            lo, f_lo = x, f
        else:
            hi = x
        if hi - lo <= WIDTH_RTOL * x:
            return x
        slope = _residual_slope(h, q_phi, x)
        x_new = x - f / slope if slope != 0 and math.isfinite(slope) else math.nan
        if not lo < x_new < hi:
            # geometric midpoint keeps the bracket shrinking on log scale
            x_new = math.sqrt(lo * hi) if hi / lo > 4 else 0.5 * (lo + hi)
        elif abs(x_new - x) <= 0.25 * WIDTH_RTOL * x:
            return x_new
        x = x_new
    return x


def _binding_required(h: HamiltonianSpec) -> bool:
    # only for potentials vanishing at infinity does E >= 0 mean "not bound"
    return isinstance(h.one_body, Zero) and h.pairwise.vanishes_at_infinity and not isinstance(
        h.pairwise, Zero
    )


def solve(
    h: HamiltonianSpec,
    q_phi: float,
    bracket_hint: tuple[float, float] | None = None,
    *,
    phi: float | None = 2.0,
) -> EtSolution:
    """Solve the ET equations for ``q_phi``.

    The residual is scanned on a log grid (or inside ``bracket_hint``), every
    sign change is refined, and the root with the lowest energy is returned;
    ``roots`` reports how many were found. ``phi`` only drives the bound tag.
    """
    _check_q(q_phi)
    tag = bound_tag(h, phi)
    if bracket_hint is not None:
        lo, hi = bracket_hint
        if not 0 < lo < hi:
            raise DomainError(f"bad bracket {bracket_hint!r}")
        n_dec = max(math.log10(hi / lo), 1e-3)
        grid = np.geomspace(lo, hi, int(math.ceil(n_dec * SCAN_POINTS_PER_DECADE)) + 1)
    else:
        length = characteristic_length(h, q_phi)
        grid = length * np.logspace(
            -SCAN_DECADES, SCAN_DECADES, 2 * SCAN_DECADES * SCAN_POINTS_PER_DECADE + 1
        )
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        values = residual(h, q_phi, grid)
    bad = ~np.isfinite(values)
    if np.any(bad):
        raise NumericError("non-finite residual during scan", r=float(grid[np.argmax(bad)]))

    candidates = []
    for i in range(len(grid) - 1):
        a, b = values[i], values[i + 1]
        if a == 0.0:
            candidates.append(float(grid[i]))
        elif a * b < 0:
            candidates.append(_refine(h, q_phi, float(grid[i]), float(grid[i + 1]), float(a)))
    if values[-1] == 0.0:
        candidates.append(float(grid[-1]))
    if not candidates:
        nan = math.nan
        return EtSolution(nan, nan, nan, q_phi, tag, Status.NO_SOLUTION, roots=0, residual=nan)

    best_e, best_r = min((energy_at(h, q_phi, r), r) for r in candidates)
    status = Status.OK
    if _binding_required(h) and best_e >= 0:
        status = Status.IRRELEVANT
    return EtSolution(
        energy=best_e,
        r0=best_r,
        p0=q_phi / best_r,
        q_phi=q_phi,
        bound_tag=tag,
        status=status,
        roots=len(candidates),
        residual=residual(h, q_phi, best_r),
    )
