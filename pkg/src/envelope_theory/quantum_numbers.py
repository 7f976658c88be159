"""Global quantum numbers of the N-1 internal oscillators.

A state is the ordered list of ``(n_i, l_i)`` pairs, one per Jacobi oscillator.
The genuine global quantum number is ``sum(2 n_i + l_i) + (N-1) D/2``; the
modified one weights radial excitations by ``phi`` instead of 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ConfigError, DomainError


@dataclass(frozen=True)
class StateSpec:
    """Quantum numbers ``(n_i, l_i)`` of the internal oscillators, in input order."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(n), int(l)) for n, l in self.pairs)
        for (n, l), (n_in, l_in) in zip(pairs, self.pairs):
            if n != n_in or l != l_in:
                raise DomainError(f"quantum numbers must be integers, got {(n_in, l_in)}")
            if n < 0 or l < 0:
                raise DomainError(f"quantum numbers must be non-negative, got {(n, l)}")
        if len(pairs) < 1:
            raise DomainError("a state needs at least one oscillator (N >= 2)")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def ground(cls, n_particles: int) -> "StateSpec":
        check_n(n_particles)
        return cls(((0, 0),) * (n_particles - 1))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "StateSpec":
        return cls(tuple(pairs))

    @classmethod
    def parse(cls, text: str, n_particles: int | None = None) -> "StateSpec":
        """Parse ``"n,l;n,l;..."``. ``n_particles`` optionally fixes the length."""
        pairs = []
        column = 1
        for chunk in text.split(";"):
            parts = chunk.split(",")
            if len(parts) != 2:
                raise ConfigError(f"expected 'n,l' but got {chunk.strip()!r}", 1, column)
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ConfigError(f"non-integer quantum number in {chunk.strip()!r}", 1, column) from None
            column += len(chunk) + 1
        try:
            state = cls(tuple(pairs))
        except DomainError as exc:
            raise ConfigError(str(exc), 1, 1) from None
        if n_particles is not None and state.n_particles != n_particles:
            raise ConfigError(
                f"state has {len(pairs)} pairs but N={n_particles} needs {n_particles - 1}", 1, 1
            )
        return state

    def format(self) -> str:
        return ";".join(f"{n},{l}" for n, l in self.pairs)

    @property
    def n_particles(self) -> int:
        return len(self.pairs) + 1

    @property
    def n_sum(self) -> int:
        return sum(n for n, _ in self.pairs)

    @property
    def l_sum(self) -> int:
        return sum(l for _, l in self.pairs)

    @property
    def is_ground(self) -> bool:
        return self.n_sum == 0 and self.l_sum == 0


def check_n(n_particles: int) -> None:
    if int(n_particles) != n_particles or n_particles < 2:
        raise DomainError(f"need an integer N >= 2, got {n_particles!r}")


def _check_d(dim: int) -> None:
    if int(dim) != dim or dim < 2:
        raise DomainError(f"need an integer dimension D >= 2, got {dim!r}")


def pair_count(n_particles: int) -> int:
    """Number of particle pairs, N(N-1)/2."""
    check_n(n_particles)
    return n_particles * (n_particles - 1) // 2


def global_q(state: StateSpec, dim: int) -> float:
    _check_d(dim)
    k = state.n_particles - 1
    return float(2 * state.n_sum + state.l_sum) + k * dim / 2


def q_phi_parts(state: StateSpec, dim: int) -> tuple[float, float]:
    """Return ``(a, b)`` with ``Q_phi = phi * a + b``.

    Both parts are exact half-integers, so equality between two states can be
    decided without rounding: compare the parts, not the float ``Q_phi``.
    """
    _check_d(dim)
    k = state.n_particles - 1
    return state.n_sum + k / 2, state.l_sum + k * (dim - 2) / 2


def global_q_phi(state: StateSpec, dim: int, phi: float) -> float:
    """Modified global quantum number; equals :func:`global_q` at ``phi == 2``."""
    if not phi > 0:
        raise DomainError(f"phi must be positive, got {phi!r}")
    a, b = q_phi_parts(state, dim)
    return phi * a + b


def parity(state: StateSpec) -> int:
    # defined from the orbital sum for every phi; only meaningful for phi = 2
    return -1 if state.l_sum % 2 else 1
