import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from envelope_theory.closed_forms import SystemKind
from envelope_theory.errors import DomainError
from envelope_theory.et_solver import BoundTag, Status, energy_at, residual, solve
from envelope_theory.hamiltonian import (
    Coulomb,
    Gaussian,
    HamiltonianSpec,
    Harmonic,
    Linear,
    NonrelativisticKinetic,
    PowerLaw,
    UltrarelativisticKinetic,
    Zero,
)
from envelope_theory.quantum_numbers import StateSpec, global_q_phi
from envelope_theory.refdata import preset


def sgb_h(n, m=1.0, g=1.0):
    return HamiltonianSpec(n, 3, NonrelativisticKinetic(m), Zero(), Coulomb(-g))


def bisect(f, lo, hi, steps=200):
    f_lo = f(lo)
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if (f(mid) < 0) == (f_lo < 0):
            lo, f_lo = mid, f(mid)
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_residual_vanishes_at_sgb_closed_form():
    n, q = 2, 1.5
    r0 = 2**1.5 * q**2 / (math.sqrt(n) * (n - 1) ** 1.5)
    assert abs(residual(sgb_h(n), q, r0)) < 1e-10


def test_residual_vanishes_for_pure_harmonic():
    n, m, omega, q = 2, 1.0, 1.0, 3.0
    h = HamiltonianSpec(n, 3, NonrelativisticKinetic(m), Harmonic(m, omega))
    r0 = (n * n * q * q / (m * m * omega * omega)) ** 0.25
    assert abs(residual(h, q, r0)) < 1e-12


def test_residual_asymptotic_sign():
    confined = preset("cb", 3).hamiltonian()
    assert residual(confined, 3.0, 1e12) < 0  # confining term wins
    attractive = sgb_h(3)
    assert residual(attractive, 3.0, 1e12) < 0  # -V' term wins over p^2 decay


def test_residual_domain():
    with pytest.raises(DomainError):
        residual(sgb_h(3), 3.0, 0.0)
    with pytest.raises(DomainError):
        residual(sgb_h(3), -1.0, 1.0)
    with pytest.raises(DomainError):
        solve(sgb_h(3), 0.0)


def test_sgb_preset_value():
    sol = solve(sgb_h(3), 3.0)
    assert sol.status is Status.OK
    assert sol.energy == pytest.approx(-0.5, rel=1e-12)
    assert sol.bound_tag is BoundTag.UPPER


def test_lnb_ground_state_matches_printed_mass():
    h = preset("lnb", 3).hamiltonian()
    sol = solve(h, 3.0)
    assert sol.energy == pytest.approx(2.468, abs=5e-4)
    assert sol.bound_tag is BoundTag.UPPER


def test_wib_four_bodies_irrelevant():
    h = preset("wib", 4).hamiltonian()
    q = global_q_phi(StateSpec.ground(4), 3, 2.0)
    sol = solve(h, q)
    assert sol.status is Status.IRRELEVANT
    assert sol.energy >= 0
    # independent bisection on the residual between the two stationary points
    f = lambda r: residual(h, q, r)
    grid = np.geomspace(1, 1e3, 400)
    values = [f(r) for r in grid]
    changes = [i for i in range(len(grid) - 1) if values[i] * values[i + 1] < 0]
    assert len(changes) == 2
    roots = [bisect(f, grid[i], grid[i + 1]) for i in changes]
    assert min(energy_at(h, q, r) for r in roots) == pytest.approx(sol.energy, rel=1e-9)
    assert sol.roots == 2


def test_no_solution_far_below_branch_point():
    sol = solve(preset("wib", 2).hamiltonian(), 1.5)
    assert sol.status is Status.NO_SOLUTION
    assert math.isnan(sol.energy)
    assert sol.roots == 0


def test_bound_tag_unknown_off_phi_two():
    assert solve(sgb_h(2), 1.0, phi=1.0).bound_tag is BoundTag.UNKNOWN
    h = HamiltonianSpec(3, 3, NonrelativisticKinetic(1), Zero(), PowerLaw(1.0, 0.5))
    assert solve(h, 3.0).bound_tag is BoundTag.UNKNOWN


def test_bracket_hint():
    sol = solve(sgb_h(3), 3.0, bracket_hint=(1.0, 20.0))
    assert sol.r0 == pytest.approx(3 * 9 / 3**1.5, rel=1e-12)
    with pytest.raises(DomainError):
        solve(sgb_h(3), 3.0, bracket_hint=(2.0, 1.0))


@pytest.mark.parametrize("kind", list(SystemKind))
@pytest.mark.parametrize("n", [2, 3, 5, 8])
@pytest.mark.parametrize("phi", [1.0, math.sqrt(2), 2.0])
def test_generic_agrees_with_closed_form(kind, n, phi):
    system = preset(kind.value, n)
    q = global_q_phi(StateSpec.ground(n), 3, phi)
    closed = system.closed_form(q, phi)
    generic = solve(system.hamiltonian(), q, phi=phi)
    assert closed.status is generic.status
    if closed.ok:
        assert generic.energy == pytest.approx(closed.energy, rel=1e-9, abs=1e-9)
        assert generic.r0 == pytest.approx(closed.r0, rel=1e-9)


@pytest.mark.parametrize("h", [sgb_h(3), preset("cb", 4).hamiltonian(), preset("lnb", 3).hamiltonian(),
                               preset("wib", 6).hamiltonian()])
def test_solution_invariants(h):
    for q in (1.0, 3.0, 7.5):
        sol = solve(h, q)
        if not sol.ok:
            continue
        assert sol.p0 == q / sol.r0
        scale = h.N * abs(sol.p0 * h.kinetic.derivative(sol.p0)) + 1
        assert abs(residual(h, q, sol.r0)) <= 1e-10 * scale
        assert sol.energy == energy_at(h, q, sol.r0)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 10), st.floats(0.1, 10), st.integers(2, 8))
def test_sgb_scaling_in_coupling(g, c, n):
    e1 = solve(sgb_h(n, g=g), 2.0).energy
    e2 = solve(sgb_h(n, g=c * g), 2.0).energy
    assert e2 == pytest.approx(c * c * e1, rel=1e-10)


@pytest.mark.parametrize("h", [preset("cb", 3).hamiltonian(), preset("lnb", 3).hamiltonian(),
                               HamiltonianSpec(4, 2, NonrelativisticKinetic(1), Linear(1.0))])
def test_energy_increases_with_q(h):
    energies = [solve(h, q).energy for q in np.linspace(1.5, 20, 40)]
    assert all(b > a for a, b in zip(energies, energies[1:]))


def test_deterministic():
    h = preset("wib", 6).hamiltonian()
    assert solve(h, 7.5) == solve(h, 7.5)


def test_power_law_extension():
    # T = p^2/2, pair a r^2 = harmonic with m omega^2 / 2 = a
    n, q, a = 3, 3.0, 0.5
    h = HamiltonianSpec(n, 3, NonrelativisticKinetic(1.0), Zero(), PowerLaw(a, 2.0))
    h_ref = HamiltonianSpec(n, 3, NonrelativisticKinetic(1.0), Zero(), Harmonic(1.0, 1.0))
    assert solve(h, q).energy == pytest.approx(solve(h_ref, q).energy, rel=1e-12)
