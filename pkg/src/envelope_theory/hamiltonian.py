"""Kinetic, one-body and pairwise terms of the N-body Hamiltonian.

Every term is an immutable value object with an analytic value, first and
second derivative. They accept floats or numpy arrays. Kinetic terms are
functions of the momentum ``p``; potentials of a distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .errors import DomainError, SingularityError
from .quantum_numbers import check_n


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def _check_positive(**values):
    for name, value in values.items():
        if not (value > 0 and math.isfinite(value)):
            raise DomainError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class Term:
    is_kinetic: ClassVar[bool] = False
    finite_at_origin: ClassVar[bool] = True
    # the potential tends to zero at large distance (needed for the binding test)
    vanishes_at_infinity: ClassVar[bool] = False

    def value(self, x):
        raise NotImplementedError

    def derivative(self, x):
        raise NotImplementedError

    def second_derivative(self, x):
        raise NotImplementedError

    def length_scale(self, kinetic: "Term") -> float | None:
        """Typical length set by this potential with the given kinetics, or None."""
        return None

    def _check_x(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x < 0):
            raise DomainError("terms are only defined for non-negative arguments")
        if not self.finite_at_origin and np.any(x == 0):
            raise SingularityError(f"{type(self).__name__} diverges at the origin")
        return x


@dataclass(frozen=True)
class NonrelativisticKinetic(Term):
    """T(p) = p^2 / 2m."""

    m: float
    is_kinetic: ClassVar[bool] = True

    def __post_init__(self):
        _check_positive(m=self.m)

    def value(self, x):
        x = self._check_x(x)
        return _out(x * x / (2 * self.m))

    def derivative(self, x):
        x = self._check_x(x)
        return _out(x / self.m)

    def second_derivative(self, x):
        x = self._check_x(x)
        return _out(np.full_like(x, 1 / self.m))


@dataclass(frozen=True)
class UltrarelativisticKinetic(Term):
    """T(p) = p."""

    is_kinetic: ClassVar[bool] = True

    def value(self, x):
        return _out(self._check_x(x) * 1.0)

    def derivative(self, x):
        return _out(np.ones_like(self._check_x(x)))

    def second_derivative(self, x):
        return _out(np.zeros_like(self._check_x(x)))


@dataclass(frozen=True)
class Zero(Term):
    vanishes_at_infinity: ClassVar[bool] = True

    def value(self, x):
        return _out(np.zeros_like(self._check_x(x)))

    derivative = value
    second_derivative = value


@dataclass(frozen=True)
class Gaussian(Term):
    """-V0 exp(-r^2/R^2)."""

    V0: float
    R: float
    vanishes_at_infinity: ClassVar[bool] = True

    def __post_init__(self):
        _check_positive(V0=self.V0, R=self.R)

    def value(self, x):
        x = self._check_x(x)
        return _out(-self.V0 * np.exp(-((x / self.R) ** 2)))

    def derivative(self, x):
        x = self._check_x(x)
        return _out(2 * self.V0 * x / self.R**2 * np.exp(-((x / self.R) ** 2)))

    def second_derivative(self, x):
        x = self._check_x(x)
        u = (x / self.R) ** 2
        return _out(2 * self.V0 / self.R**2 * (1 - 2 * u) * np.exp(-u))

    def length_scale(self, kinetic):
        return self.R


@dataclass(frozen=True)
class Coulomb(Term):
    """g / r. Attractive for g < 0."""

    g: float
    finite_at_origin: ClassVar[bool] = False
    vanishes_at_infinity: ClassVar[bool] = True

    def __post_init__(self):
        if not math.isfinite(self.g):
            raise DomainError(f"coupling must be finite, got {self.g!r}")

    def value(self, x):
        x = self._check_x(x)
        return _out(self.g / x)

    def derivative(self, x):
        x = self._check_x(x)
        return _out(-self.g / x**2)

    def second_derivative(self, x):
        x = self._check_x(x)
        return _out(2 * self.g / x**3)

    def length_scale(self, kinetic):
        # Bohr-like radius; T = p has no Coulomb length
        if isinstance(kinetic, NonrelativisticKinetic) and self.g != 0:
            return 1 / (kinetic.m * abs(self.g))
        return None


@dataclass(frozen=True)
class Linear(Term):
    """lambda * s."""

    tension: float

    def __post_init__(self):
        _check_positive(tension=self.tension)

    def value(self, x):
        return _out(self.tension * self._check_x(x))

    def derivative(self, x):
        return _out(np.full_like(self._check_x(x), self.tension))

    def second_derivative(self, x):
        return _out(np.zeros_like(self._check_x(x)))

    def length_scale(self, kinetic):
        if isinstance(kinetic, NonrelativisticKinetic):
            return (kinetic.m * self.tension) ** (-1 / 3)
        return self.tension ** (-1 / 2)


@dataclass(frozen=True)
class Harmonic(Term):
    """m omega^2 s^2 / 2."""

    m: float
    omega: float

    def __post_init__(self):
        _check_positive(m=self.m, omega=self.omega)

    def value(self, x):
        x = self._check_x(x)
        return _out(0.5 * self.m * self.omega**2 * x * x)

    def derivative(self, x):
        return _out(self.m * self.omega**2 * self._check_x(x))

    def second_derivative(self, x):
        return _out(np.full_like(self._check_x(x), self.m * self.omega**2))

    def length_scale(self, kinetic):
        return (self.m * self.omega) ** (-1 / 2)


@dataclass(frozen=True)
class PowerLaw(Term):
    """a * x^b. An extension beyond the four physical systems."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.b == 0:
            raise DomainError("power law needs finite a and a nonzero exponent b")

    @property
    def finite_at_origin(self):
        return self.b > 0

    @property
    def vanishes_at_infinity(self):
        return self.b < 0

    def value(self, x):
        return _out(self.a * self._check_x(x) ** self.b)

    def derivative(self, x):
        x = self._check_x(x)
        return _out(self.a * self.b * x ** (self.b - 1))

    def second_derivative(self, x):
        x = self._check_x(x)
        return _out(self.a * self.b * (self.b - 1) * x ** (self.b - 2))

    def length_scale(self, kinetic):
        if self.a == 0:
            return None
        if isinstance(kinetic, NonrelativisticKinetic):
            return (kinetic.m * abs(self.a)) ** (-1 / (self.b + 2)) if self.b != -2 else None
        return abs(self.a) ** (-1 / (self.b + 1)) if self.b != -1 else None


def term_value(term: Term, x):
    return term.value(x)


def term_derivative(term: Term, x):
    return term.derivative(x)


def is_attractive(term: Term) -> bool:
    """True when the potential pulls particles together at every distance."""
    if isinstance(term, Gaussian):
        return True
    if isinstance(term, Coulomb):
        return term.g < 0
    if isinstance(term, PowerLaw):
        return term.a * term.b > 0
    return isinstance(term, (Linear, Harmonic))


@dataclass(frozen=True)
class HamiltonianSpec:
    """N identical particles in D dimensions with kinetic, one-body and pair terms."""

    N: int
    D: int
    kinetic: Term
    one_body: Term = Zero()
    pairwise: Term = Zero()

    def __post_init__(self):
        check_n(self.N)
        if int(self.D) != self.D or self.D < 2:
            raise DomainError(f"need an integer dimension D >= 2, got {self.D!r}")
        if not self.kinetic.is_kinetic:
            raise DomainError(f"{type(self.kinetic).__name__} is not a kinetic term")
        for name in ("one_body", "pairwise"):
            term = getattr(self, name)
            if term.is_kinetic:
                raise DomainError(f"{type(term).__name__} cannot be used as {name} potential")

    @property
    def pairs(self) -> int:
        return self.N * (self.N - 1) // 2
