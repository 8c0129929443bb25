"""Accelerated summation of alternating and monotone series.

Alternating sums use the Chebyshev-polynomial scheme of Cohen, Rodriguez
Villegas and Zagier: n terms give roughly (3 + sqrt 8)^-n accuracy for
smoothly decaying magnitudes.  Monotone sums with a known power-law decay
use direct summation plus an Euler-Maclaurin tail whose integral part is
evaluated by the tanh-sinh rule; the term callable must therefore accept
real (not just integer) arguments beyond the cutoff.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import ConvergenceError, DomainError
from .quadrature import Integrand, integrate01

_LOG_CVZ_BASE = math.log(3.0 + math.sqrt(8.0))


def _cvz(a: list[float]) -> float:
    """sum_{j>=0} (-1)^j a_j for a smooth, eventually monotone magnitude a."""
    n = len(a)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a[k]
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


def sum_alternating(term: Callable[[int], float], tol: float, max_terms: int = 800) -> float:
    """sum_{k>=1} term(k) where term alternates in sign.

    The sign may sit inside ``term``; magnitudes must eventually decrease
    smoothly.  Two runs at different depths must agree within tol.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    n = max(12, int(math.log(max(4.0 / tol, 10.0)) / _LOG_CVZ_BASE) + 6)
    prev = None
    while n <= max_terms:
        a = [(-1) ** (j + 1) * term(j + 1) for j in range(n)]
        value = -_cvz(a)
        if prev is not None and abs(value - prev) <= max(tol / 2, 4e-16 * (1.0 + abs(value))):
            return value
        prev = value
        n += max(10, n // 2)
    raise ConvergenceError("alternating-series acceleration did not settle", partial=prev)


def sum_tail(term: Callable[[float], float], tol: float, decay_exponent: float,
             start: int = 1, max_terms: int = 1 << 21) -> float:
    """sum_{k>=start} term(k) for term(k) = O(k^-s) with s = decay_exponent >= 2.

    Direct summation to a cutoff K plus the Euler-Maclaurin tail
    integral(K..inf) + term(K)/2 - term'(K)/12; K doubles until the total
    moves by less than tol/4.
    """
    if decay_exponent < 2:
        raise DomainError("tail summation needs decay exponent >= 2 (sum may diverge)")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    K = 256
    prev = None
    while K <= max_terms:
        direct = math.fsum(term(k) for k in range(start, K))
        total = direct + _em_tail(term, float(K), tol)
        if prev is not None and abs(total - prev) <= tol / 4:
            return total
        prev = total
        K *= 2
    raise ConvergenceError("tail summation did not settle within the term budget",
                           partial=prev)


def _em_tail(term: Callable[[float], float], m: float, tol: float) -> float:
    def transformed(u: float, omu: float) -> float:
        # integral_m^inf term(x) dx with x = m/u; written as x*term(x)/u to
        # survive u near the underflow edge.  Nodes this close to u = 0
        # carry double-exponentially small weights, so truncating is safe
        # for any term with the declared power-law decay.
        if u < 1e-290:
            return 0.0
        x = m / u
        return x * term(x) / u

    quad = integrate01(Integrand(transformed, "log_singular_at_0"),
                       max(1e-13, tol / 8.0))
    h = max(1e-4, 1e-6 * m)
    slope = (term(m + h) - term(m - h)) / (2.0 * h)
    return quad.value + term(m) / 2.0 - slope / 12.0


# ---------------------------------------------------------------------------
# zeta and friends, numeric
# ---------------------------------------------------------------------------

_ZETA_CACHE: dict[int, float] = {}
_ETA_CACHE: dict[int, float] = {}


def eta_num(s: int) -> float:
    """eta(s) = sum_{k>=1} (-1)^{k-1} k^-s for s >= 1."""
    if s < 1:
        raise DomainError("eta_num requires s >= 1")
    if s not in _ETA_CACHE:
        _ETA_CACHE[s] = sum_alternating(lambda k: (-1) ** (k - 1) * float(k) ** (-s), 1e-15)
    return _ETA_CACHE[s]


def zeta_num(s: int) -> float:
    """zeta(s) for integer s >= 2, via the alternating eta series."""
    if s < 2:
        raise DomainError("zeta_num requires s >= 2")
    if s not in _ZETA_CACHE:
        _ZETA_CACHE[s] = eta_num(s) / (1.0 - 2.0 ** (1 - s))
    return _ZETA_CACHE[s]


def alternating_zeta_num(s: int) -> float:
    """Li_s(-1) = (2^{1-s} - 1) zeta(s) = -eta(s), with the s = 1 limit -ln 2."""
    if s == 1:
        return -math.log(2.0)
    return -eta_num(s)
