"""Quadrature over (0, 1) tolerant of logarithmic endpoint singularities.

The rule is double-exponential (tanh-sinh): nodes x = sigmoid(pi*sinh(t))
cluster at both endpoints, and weights decay fast enough to absorb any
power of log x or log(1-x).  Integrand evaluators receive both x and 1-x,
each computed without cancellation, so expressions like ln(1-x) stay
accurate at nodes within 1e-300 of an endpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError

_T_MAX = 6.3          # |pi*sinh(t)| > 745 beyond this: nodes underflow
_MAX_LEVEL = 11
_MIN_TOL = 1e-13


@dataclass(frozen=True)
class Integrand:
    """Integrand on (0, 1); evaluator is called as f(x, 1-x)."""

    evaluator: Callable[[float, float], float]
    endpoint_class: str = "regular"

    @classmethod
    def plain(cls, f: Callable[[float], float], endpoint_class: str = "regular") -> "Integrand":
        return cls(lambda x, omx: f(x), endpoint_class)


def log1m(x: float, omx: float) -> float:
    """ln(1 - x) accurate at both endpoints.

    Near x = 0 the supplied 1-x rounds to 1.0 and would zero the logarithm,
    so the log1p channel takes over; near x = 1 the supplied distance is the
    exact one the node generator produced.
    """
    return math.log1p(-x) if x < 0.5 else math.log(omx)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _node(t: float) -> tuple[float, float, float]:
    """Abscissa pieces for the tanh-sinh map: (x, 1-x, weight/h)."""
    u = math.pi * math.sinh(t)
    e = math.exp(-abs(u))
    s = 1.0 / (1.0 + e)          # sigmoid(|u|)
    if u >= 0.0:
        x, omx = s, e * s
    else:
        x, omx = e * s, s
    w = math.pi * math.cosh(t) * x * omx
    return x, omx, w


# Node geometry is integrand-independent; cache it per level.
# Level 0 holds all integer t in [-T_MAX, T_MAX]; level L >= 1 holds the
# odd multiples of 2^-L.
_LEVEL_CACHE: list[list[tuple[float, float, float]]] = []


def _level_nodes(level: int) -> list[tuple[float, float, float]]:
    while len(_LEVEL_CACHE) <= level:
        lvl = len(_LEVEL_CACHE)
        h = 0.5 ** lvl
        nodes = []
        if lvl == 0:
            ts = [k * h for k in range(-int(_T_MAX / h), int(_T_MAX / h) + 1)]
        else:
            n = int(_T_MAX / h)
            ts = [k * h for k in range(-n, n + 1) if k % 2]
        for t in ts:
            x, omx, w = _node(t)
            # nodes closer than 1e-300 to an endpoint carry weights below
            # any tolerance this module supports; dropping them keeps
            # downstream coordinate transforms clear of subnormals
            if x > 1e-300 and omx > 1e-300 and w > 0.0:
                nodes.append((x, omx, w))
        _LEVEL_CACHE.append(nodes)
    return _LEVEL_CACHE[level]


def integrate01(f: Integrand | Callable[[float, float], float], tol: float,
                _allow_split: bool = True) -> QuadratureResult:
    """Integrate f over (0, 1) to absolute tolerance tol (tol >= 1e-13)."""
    if tol < _MIN_TOL:
        raise DomainError(f"tolerance below supported floor {_MIN_TOL}")
    ev = f.evaluator if isinstance(f, Integrand) else f

    total_g = 0.0
    evals = 0
    prev_value = None
    prev_delta = math.inf
    stalls = 0
    value = 0.0
    for level in range(_MAX_LEVEL + 1):
        parts = []
        for x, omx, w in _level_nodes(level):
            parts.append(w * ev(x, omx))
        evals += len(parts)
        total_g += math.fsum(parts)
        h = 0.5 ** level
        value = h * total_g
        if prev_value is not None and level >= 2:
            delta = abs(value - prev_value)
            if delta <= max(tol, 4e-16 * (1.0 + abs(value))):
                return QuadratureResult(value, max(delta, 2e-16 * abs(value)), evals)
            if delta >= prev_delta:
                stalls += 1
                if stalls >= 2:
                    break
            prev_delta = delta
        prev_value = value

    if _allow_split:
        # Bisect at 1/2; each half keeps exact endpoint distances.
        left = integrate01(
            Integrand(lambda u, omu: 0.5 * ev(0.5 * u, 1.0 - 0.5 * u)),
            max(tol / 2, _MIN_TOL), _allow_split=False)
        right = integrate01(
            Integrand(lambda v, omv: 0.5 * ev(1.0 - 0.5 * v, 0.5 * v)),
            max(tol / 2, _MIN_TOL), _allow_split=False)
        return QuadratureResult(
            left.value + right.value,
            left.error_estimate + right.error_estimate,
            evals + left.evaluations + right.evaluations)

    raise ConvergenceError("tanh-sinh refinement stalled before reaching tolerance",
                           partial=value)
