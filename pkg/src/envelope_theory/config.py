"""Flat ``key = value`` Hamiltonian configuration files.

Example::

    # three quarks
    n = 3
    d = 3
    kinetic = ultrarel
    one_body = linear
    tension = 0.2
    pairwise = coulomb
    coupling = -0.2666666667

Kinds: ``kinetic`` nonrel|ultrarel (``mass`` for nonrel); ``one_body``
none|harmonic|linear|power (``omega``, ``tension``, ``one_body_coeff`` +
``one_body_exp``); ``pairwise`` none|gaussian|coulomb|harmonic|linear|power
(``v0`` + ``range``, ``coupling``, ``pair_omega``, ``pair_tension``,
``pair_coeff`` + ``pair_exp``). ``state`` and ``phi`` are optional.
A harmonic term uses the particle ``mass``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, DomainError
from .hamiltonian import (
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
from .quantum_numbers import StateSpec

INT_KEYS = {"n", "d"}
FLOAT_KEYS = {
    "mass", "omega", "tension", "one_body_coeff", "one_body_exp",
    "v0", "range", "coupling", "pair_omega", "pair_tension", "pair_coeff", "pair_exp", "phi",
}
CHOICE_KEYS = {
    "kinetic": ("nonrel", "ultrarel"),
    "one_body": ("none", "harmonic", "linear", "power"),
    "pairwise": ("none", "gaussian", "coulomb", "harmonic", "linear", "power"),
}
TEXT_KEYS = {"state"}
KNOWN_KEYS = INT_KEYS | FLOAT_KEYS | set(CHOICE_KEYS) | TEXT_KEYS


@dataclass(frozen=True)
class HamiltonianConfig:
    hamiltonian: HamiltonianSpec
    state: StateSpec | None = None
    phi: float | None = None


def parse_lines(text: str) -> tuple[dict, dict]:
    """Return ``(values, line_of_key)``; values are already typed."""
    values, where = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise ConfigError("expected 'key = value'", lineno, col)
        key_part, value_part = line.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        value = value_part.strip()
        value_col = len(key_part) + 2 + len(value_part) - len(value_part.lstrip())
        if key not in KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno, key_col)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno, key_col)
        try:
            if key in INT_KEYS:
                values[key] = int(value)
            elif key in FLOAT_KEYS:
                values[key] = float(value)
            elif key in CHOICE_KEYS:
                if value not in CHOICE_KEYS[key]:
                    raise ValueError(f"{key} must be one of {', '.join(CHOICE_KEYS[key])}")
                values[key] = value
            else:
                values[key] = value
        except ValueError as exc:
            raise ConfigError(f"bad value {value!r} for {key!r}: {exc}", lineno, value_col) from None
        where[key] = (lineno, value_col)
    return values, where


def _need(values, where, key, for_key):
    if key not in values:
        line = where.get(for_key, (None, None))[0]
        raise ConfigError(f"missing {key!r} required by {for_key} = {values.get(for_key)}", line)
    return values[key]


def _potential(values, where, slot):
    kind = values.get(slot, "none")
    prefix = "" if slot == "one_body" else "pair_"
    if kind == "none":
        return Zero()
    if kind == "gaussian":
        return Gaussian(_need(values, where, "v0", slot), _need(values, where, "range", slot))
    if kind == "coulomb":
        return Coulomb(_need(values, where, "coupling", slot))
    if kind == "harmonic":
        return Harmonic(_need(values, where, "mass", slot), _need(values, where, prefix + "omega", slot))
    if kind == "linear":
        return Linear(_need(values, where, prefix + "tension", slot))
    key = "one_body" if slot == "one_body" else "pair"
    return PowerLaw(_need(values, where, f"{key}_coeff", slot), _need(values, where, f"{key}_exp", slot))


def build(values: dict, where: dict | None = None) -> HamiltonianConfig:
    where = where or {}
    for key in ("n", "d", "kinetic"):
        if key not in values:
            raise ConfigError(f"missing required key {key!r}")
    try:
        if values["kinetic"] == "nonrel":
            kinetic = NonrelativisticKinetic(_need(values, where, "mass", "kinetic"))
        else:
            kinetic = UltrarelativisticKinetic()
        h = HamiltonianSpec(
            values["n"], values["d"], kinetic,
            _potential(values, where, "one_body"), _potential(values, where, "pairwise"),
        )
    except DomainError as exc:
        raise ConfigError(str(exc)) from None
    state = None
    if "state" in values:
        line, col = where.get("state", (None, None))
        try:
            state = StateSpec.parse(values["state"], h.N)
        except ConfigError as exc:
            raise ConfigError(str(exc), line, col) from None
    return HamiltonianConfig(h, state, values.get("phi"))


def load(path: str | Path) -> HamiltonianConfig:
    text = Path(path).read_text(encoding="utf-8")
    return build(*parse_lines(text))
