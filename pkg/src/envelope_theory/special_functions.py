"""Principal Lambert W branch and the positive roots of 4x^4 +- 8x - 3Y = 0."""

from __future__ import annotations

import math

from .errors import DomainError

#: Lambert branch point -1/e.
BRANCH_POINT = -math.exp(-1.0)
#: Argument at which W0 = -1/2; the weakly-bound Gaussian energy changes sign here.
BINDING_THRESHOLD = -0.5 * math.exp(-0.5)

# 1/e split into the nearest double and the remainder
_INV_E_HI = 0.36787944117144233
_INV_E_LO = -1.2428753672788363e-17
# w + 1 as a power series in p = sqrt(2 (e z + 1)) around the branch point
_BRANCH_SERIES = (-1.0, 1.0, -1.0 / 3.0, 11.0 / 72.0, -43.0 / 540.0, 769.0 / 17280.0, -221.0 / 8505.0)


def _branch_distance(z: float) -> float:
    """sqrt(2 (e z + 1)) computed without cancellation near z = -1/e."""
    delta = (z + _INV_E_HI) + _INV_E_LO
    return math.sqrt(2.0 * math.e * max(delta, 0.0))


def _branch_series(p: float) -> float:
    w = 0.0
    for c in reversed(_BRANCH_SERIES):
        w = w * p + c
    return w


def _initial_w0(z: float) -> float:
    if z < -0.25:
        return _branch_series(_branch_distance(z))
    if z < 3.0:
        lp = math.log1p(z)
        return lp * (1.0 - math.log1p(lp) / (2.0 + lp))
    l1 = math.log(z)
    l2 = math.log(l1)
    return l1 - l2 + l2 / l1


def lambert_w0(z: float) -> float:
    """Principal branch W0(z), the solution of w e^w = z with w >= -1.

    Series/asymptotic start followed by Halley iterations until the update is
    at roundoff level.
    """
    z = float(z)
    if math.isnan(z):
        raise DomainError("lambert_w0 of NaN")
    # tolerate roundoff in a caller's -1/e
    if z < BRANCH_POINT:
        if z >= BRANCH_POINT - 4 * math.ulp(BRANCH_POINT):
            return -1.0
        raise DomainError(f"W0 is real only for z >= -1/e, got {z!r}")
    if z == 0.0:
        return 0.0
    if math.isinf(z):
        return math.inf
    if z < -0.25:
        p = _branch_distance(z)
        if p < 1e-3:
            # Halley cannot resolve w + 1 here; the truncated series is exact to roundoff
            return _branch_series(p)
    w = _initial_w0(z)
    for _ in range(50):
        ew = math.exp(w)
        f = w * ew - z
        if f == 0.0:
            break
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_new = max(w - dw, -1.0)
        if abs(w_new - w) <= 4e-16 * (1.0 + abs(w_new)):
            w = w_new
            break
        w = w_new
    return w


def _quartic(x, sign, y):
    return 4.0 * x**4 + sign * 8.0 * x - 3.0 * y


def g_root(sign: str, y: float) -> float:
    """Unique non-negative root of ``4x^4 + 8x - 3Y`` (``'plus'``) or ``4x^4 - 8x - 3Y`` (``'minus'``).

    Newton iteration kept inside a shrinking sign-change bracket.
    """
    if sign not in ("plus", "minus"):
        raise DomainError(f"sign must be 'plus' or 'minus', got {sign!r}")
    y = float(y)
    if not y >= 0 or math.isinf(y):
        raise DomainError(f"Y must be finite and non-negative, got {y!r}")
    s = 1.0 if sign == "plus" else -1.0
    quarter = (0.75 * y) ** 0.25
    if sign == "plus":
        if y == 0.0:
            return 0.0
        # f(0) < 0 and 4 hi^4 = 3Y makes f(hi) > 0
        lo, hi = 0.0, min(quarter, 0.375 * y)
    else:
        # f < 0 on (0, 2^(1/3)] and f(2^(1/3) + (3Y/4)^(1/4)) >= 0
        lo = 2.0 ** (1.0 / 3.0)
        hi = lo + quarter
        if y == 0.0:
            hi = lo
    x = 0.5 * (lo + hi)
    for _ in range(200):
        f = _quartic(x, s, y)
        if f == 0.0:
            return x
        if f < 0:
            lo = x
        else:
            hi = x
        df = 16.0 * x**3 + s * 8.0
        step_ok = False
        if df != 0.0:
            x_new = x - f / df
            step_ok = lo < x_new < hi
        if not step_ok:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 2e-16 * max(1.0, abs(x_new)) or hi - lo <= 2e-16 * max(1.0, hi):
            return x_new
        x = x_new
    return x


def g_root_closed_form(sign: str, y: float) -> float:
    """Radical expression for G+-(Y); loses accuracy at large Y, used for cross-checks."""
    s = 1.0 if sign == "plus" else -1.0
    c = (2.0 + math.sqrt(4.0 + y**3)) ** (1.0 / 3.0)
    v = c - y / c
    return -s * 0.5 * math.sqrt(v) + 0.5 * math.sqrt(4.0 / math.sqrt(v) - v)
