import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from envelope_theory.closed_forms import (
    SystemKind,
    SystemPreset,
    add_cm_offset,
    cb_argument,
    cb_solution,
    lnb_solution,
    sgb_solution,
    wib_argument,
    wib_solution,
)
from envelope_theory.errors import DomainError
from envelope_theory.et_solver import Status, energy_at, residual, solve
from envelope_theory.quantum_numbers import StateSpec, global_q_phi, pair_count
from envelope_theory.refdata import preset
from envelope_theory.special_functions import BINDING_THRESHOLD, BRANCH_POINT, g_root

WIB = dict(m=1 / 43.281307, V0=1.227, R=10.03)


def q_ground(n, phi=2.0):
    return global_q_phi(StateSpec.ground(n), 3, phi)


def q_for_wib_argument(n, y, m=WIB["m"], V0=WIB["V0"], R=WIB["R"]):
    return -y * math.sqrt(n) * (n - 1) * R * math.sqrt(2 * m * V0)


class TestWeaklyInteracting:
    def test_four_bodies_irrelevant(self):
        y = wib_argument(4, WIB["m"], WIB["V0"], WIB["R"], q_ground(4))
        assert y == pytest.approx(-0.31403, abs=5e-6)
        assert BRANCH_POINT < y < BINDING_THRESHOLD
        r0, e, status = wib_solution(4, 3, **WIB, q_phi=q_ground(4))
        assert status is Status.IRRELEVANT and e > 0
        assert solve(preset("wib", 4).hamiltonian(), q_ground(4)).status is Status.IRRELEVANT

    def test_five_bodies(self):
        y = wib_argument(5, WIB["m"], WIB["V0"], WIB["R"], q_ground(5))
        assert y == pytest.approx(-0.28088, abs=5e-6)
        r0, e, status = wib_solution(5, 3, **WIB, q_phi=q_ground(5))
        assert status is Status.OK
        generic = solve(preset("wib", 5).hamiltonian(), q_ground(5))
        assert e == pytest.approx(generic.energy, rel=1e-10)
        # printed to two digits as about -0.69
        assert e == pytest.approx(-0.692, abs=3e-3)

    def test_small_q_limit(self):
        for n in (2, 5):
            _, e, status = wib_solution(n, 3, **WIB, q_phi=1e-7)
            assert status is Status.OK
            assert e == pytest.approx(-pair_count(n) * WIB["V0"], rel=1e-6)

    def test_thresholds_exact(self):
        n = 6
        q_branch = q_for_wib_argument(n, BRANCH_POINT)
        assert wib_argument(n, WIB["m"], WIB["V0"], WIB["R"], q_branch) == pytest.approx(BRANCH_POINT, abs=1e-15)
        assert wib_solution(n, 3, **WIB, q_phi=q_branch * (1 + 1e-12))[2] is Status.NO_SOLUTION
        assert wib_solution(n, 3, **WIB, q_phi=q_branch * (1 - 1e-12))[2] is Status.IRRELEVANT
        q_zero = q_for_wib_argument(n, BINDING_THRESHOLD)
        _, e_zero, _ = wib_solution(n, 3, **WIB, q_phi=q_zero)
        assert abs(e_zero) < 1e-12
        assert wib_solution(n, 3, **WIB, q_phi=q_zero * (1 - 1e-9))[2] is Status.OK
        assert wib_solution(n, 3, **WIB, q_phi=q_zero * (1 + 1e-9))[2] is Status.IRRELEVANT

    def test_domain(self):
        with pytest.raises(DomainError):
            wib_solution(3, 3, m=-1, V0=1, R=1, q_phi=1)


class TestSelfGravitating:
    def test_examples(self):
        assert sgb_solution(2, 1, 1, 1.0)[1] == -0.25
        assert sgb_solution(3, 1, 1, 3.0)[1] == pytest.approx(-0.5, rel=1e-15)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_coefficient(self, n):
        _, e = sgb_solution(n, 1.0, 1.0, q_ground(n, 1.0))
        assert e / (n * n * (n - 1)) == pytest.approx(-0.0625, rel=1e-14)

    @given(st.floats(0.1, 50))
    def test_inverse_square_law(self, q):
        _, e = sgb_solution(5, 1.0, 1.0, q)
        _, e1 = sgb_solution(5, 1.0, 1.0, 1.0)
        assert e * q * q == pytest.approx(e1, rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            sgb_solution(3, 1, 0, 1)


class TestConfined:
    def test_harmonic_limit_exact(self):
        for n in (2, 3, 7):
            for q in (1.5, 3.0, 10.0):
                assert cb_solution(n, 1.0, 0.5, 0.0, q)[1] == 0.5 * q

    def test_two_body_example(self):
        y = cb_argument(2, 1.0, 0.5, 1.0, 3.0)
        assert y == pytest.approx(30.238, abs=1e-3)
        assert g_root("minus", y) == pytest.approx(2.2848, abs=1e-4)
        r0, e = cb_solution(2, 1.0, 0.5, 1.0, 3.0)
        assert e == pytest.approx(1.7821, abs=1e-4)
        generic = solve(preset("cb", 2).hamiltonian(), 3.0)
        assert e == pytest.approx(generic.energy, rel=1e-10)

    def test_weak_coupling_continuity(self):
        q = q_ground(3)
        _, e = cb_solution(3, 1.0, 0.5, 1e-8, q)
        assert abs(e - 0.5 * q) / (0.5 * q) < 1e-4

    def test_increasing_in_coupling(self):
        es = [cb_solution(4, 1.0, 0.5, g, 4.5)[1] for g in np.linspace(0, 3, 31)]
        assert all(b > a for a, b in zip(es, es[1:]))

    def test_cm_offset(self):
        assert add_cm_offset(1.7821, 3, 0.5) == pytest.approx(2.5321, abs=1e-12)
        assert add_cm_offset(0.0, 3, 0.5) == 0.75
        assert add_cm_offset(5.0, 2, 1.0) == 6.0


class TestBaryons:
    @pytest.mark.parametrize("state, phi, expected", [
        (((0, 0), (0, 0)), 2.0, 2.468),
        (((0, 1), (0, 0)), 2.0, 2.914),
        (((0, 0), (0, 0)), 1.35, 2.128),
    ])
    def test_printed_masses(self, state, phi, expected):
        lnb = preset("lnb", 3)
        q = global_q_phi(StateSpec(state), 3, phi)
        _, e, status = lnb_solution(3, lnb.tension, lnb.g, q)
        assert status is Status.OK
        assert e == pytest.approx(expected, abs=1e-3)

    def test_collapse(self):
        assert lnb_solution(3, 0.2, 10.0, 1.5)[2] is Status.NO_SOLUTION

    @given(st.integers(2, 10), st.floats(0.5, 30), st.floats(0, 0.3))
    def test_algebraic_identity(self, n, q, g):
        r0, e, status = lnb_solution(n, 0.2, g, q)
        if status is Status.OK:
            s = n * q - pair_count(n) ** 1.5 * g
            assert e * e == pytest.approx(4 * 0.2 * s, rel=1e-12)


@pytest.mark.parametrize("kind", list(SystemKind))
@pytest.mark.parametrize("n", [2, 3, 5, 8])
@pytest.mark.parametrize("phi", [1.0, 1.6, 2.0])
def test_closed_forms_solve_generic_system(kind, n, phi):
    system = preset(kind.value, n)
    q = q_ground(n, phi)
    sol = system.closed_form(q, phi)
    if not sol.ok:
        return
    h = system.hamiltonian()
    scale = n * abs(sol.p0 * h.kinetic.derivative(sol.p0)) + 1
    assert abs(residual(h, q, sol.r0)) <= 1e-9 * scale
    assert energy_at(h, q, sol.r0) == pytest.approx(sol.energy, rel=1e-10, abs=1e-10)


def test_preset_validation():
    with pytest.raises(DomainError):
        SystemPreset("sgb", 3, m=1.0)
    with pytest.raises(DomainError):
        SystemPreset("cb", 3, m=1.0, omega=0.5, g=-1.0)
    assert SystemPreset("cb", 3, m=1.0, omega=0.5, g=0.0).energy(3.0) == 1.5
