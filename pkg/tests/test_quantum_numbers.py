import pytest
from hypothesis import given, strategies as st

from envelope_theory.errors import ConfigError, DomainError
from envelope_theory.quantum_numbers import (
    StateSpec,
    global_q,
    global_q_phi,
    pair_count,
    parity,
    q_phi_parts,
)

pairs_st = st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=7)
dims = st.integers(2, 6)
phis = st.floats(0.05, 5.0, allow_nan=False)


@pytest.mark.parametrize(
    "pairs, dim, expected",
    [(((0, 0), (0, 0)), 3, 3.0), (((1, 0), (0, 0)), 3, 5.0), (((0, 4),), 2, 5.0)],
)
def test_global_q_examples(pairs, dim, expected):
    assert global_q(StateSpec(pairs), dim) == expected


@pytest.mark.parametrize(
    "n, dim, phi, expected",
    [(3, 3, 2.0, 3.0), (3, 3, 1.35, 2.35), (2, 3, 1.0, 1.0)],
)
def test_global_q_phi_ground(n, dim, phi, expected):
    assert global_q_phi(StateSpec.ground(n), dim, phi) == pytest.approx(expected, abs=1e-15)


def test_domain_errors():
    with pytest.raises(DomainError):
        global_q(StateSpec.ground(3), 1)
    with pytest.raises(DomainError):
        global_q_phi(StateSpec.ground(3), 3, 0.0)
    with pytest.raises(DomainError):
        global_q_phi(StateSpec.ground(3), 3, -1.0)
    with pytest.raises(DomainError):
        pair_count(1)
    with pytest.raises(DomainError):
        StateSpec(((-1, 0),))
    with pytest.raises(DomainError):
        StateSpec(())


@pytest.mark.parametrize("pairs, expected", [(((0, 0), (0, 0)), 1), (((0, 1), (0, 0)), -1), (((0, 1), (0, 1)), 1)])
def test_parity(pairs, expected):
    assert parity(StateSpec(pairs)) == expected


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 3), (8, 28)])
def test_pair_count(n, expected):
    assert pair_count(n) == expected


def test_parse_and_format():
    s = StateSpec.parse("1,0;0,0", 3)
    assert s.pairs == ((1, 0), (0, 0))
    assert s.format() == "1,0;0,0"
    with pytest.raises(ConfigError):
        StateSpec.parse("1,0", 3)
    with pytest.raises(ConfigError) as exc:
        StateSpec.parse("1,0;x,0")
    assert exc.value.column == 5


@given(pairs_st, dims)
def test_phi_two_is_genuine(pairs, dim):
    s = StateSpec(tuple(pairs))
    assert global_q_phi(s, dim, 2.0) == global_q(s, dim)


@given(pairs_st, dims, phis, st.data())
def test_additivity(pairs, dim, phi, data):
    s = StateSpec(tuple(pairs))
    i = data.draw(st.integers(0, len(pairs) - 1))
    bumped_n = list(pairs)
    bumped_n[i] = (pairs[i][0] + 1, pairs[i][1])
    bumped_l = list(pairs)
    bumped_l[i] = (pairs[i][0], pairs[i][1] + 1)
    q = global_q_phi(s, dim, phi)
    assert global_q_phi(StateSpec(tuple(bumped_n)), dim, phi) - q == pytest.approx(phi, rel=1e-12, abs=1e-12)
    assert global_q_phi(StateSpec(tuple(bumped_l)), dim, phi) - q == pytest.approx(1.0, abs=1e-12)
    # exact decomposition
    a, b = q_phi_parts(s, dim)
    a_n, b_n = q_phi_parts(StateSpec(tuple(bumped_n)), dim)
    assert (a_n - a, b_n - b) == (1, 0)


@given(pairs_st, dims, phis)
def test_ground_is_minimum(pairs, dim, phi):
    s = StateSpec(tuple(pairs))
    ground = StateSpec.ground(s.n_particles)
    k = s.n_particles - 1
    assert global_q_phi(ground, dim, phi) == pytest.approx(k * (dim + phi - 2) / 2, rel=1e-14)
    assert global_q_phi(ground, dim, phi) <= global_q_phi(s, dim, phi)


@given(pairs_st, dims)
def test_parity_matches_genuine_q(pairs, dim):
    s = StateSpec(tuple(pairs))
    k = s.n_particles - 1
    excitation = round(global_q(s, dim) - k * dim / 2)
    assert parity(s) == (-1) ** excitation


@given(pairs_st, st.data())
def test_parity_flips(pairs, data):
    i = data.draw(st.integers(0, len(pairs) - 1))
    bumped = list(pairs)
    bumped[i] = (pairs[i][0], pairs[i][1] + 1)
    assert parity(StateSpec(tuple(bumped))) == -parity(StateSpec(tuple(pairs)))


@given(pairs_st, dims, phis)
def test_permutation_invariance(pairs, dim, phi):
    assert global_q_phi(StateSpec(tuple(pairs)), dim, phi) == pytest.approx(
        global_q_phi(StateSpec(tuple(reversed(pairs))), dim, phi), rel=1e-14
    )
