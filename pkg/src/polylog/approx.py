"""Stirling-number truncated approximation of alternating Euler sums.

Expanding Li_p(-t) about t = 1 inside the integral representation of S-(p)
gives

    S-(p) = sum_{k>=1} (-1)^{k+1} / (k * k!)
            * sum_{j=1}^{k} S_k^(j) (2^{1+j-p} - 1) zeta(p - j),

with S_k^(j) the signed Stirling numbers of the first kind.  Truncating at
k = k_t yields an exact closed form over {1, pi powers, zeta(odd), ln 2};
for j >= p - 1 the eta-type factor continues through -ln 2 (at p - j = 1)
and Bernoulli rationals (at p - j <= 0), which the deeper truncations the
approximation relies on do reach.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .closedform import (ClosedForm, eta_factor_closed,
                         zeta_nonpositive_rational)
from .errors import DomainError

_STIRLING_ROWS: list[list[int]] = [[1]]  # row k holds S_k^(1..k)


def stirling1(k: int, j: int) -> int:
    """Signed Stirling number of the first kind S_k^(j), exact."""
    if k < 1:
        raise DomainError("row index must be >= 1")
    if j < 1 or j > k:
        raise DomainError(f"column {j} outside 1..{k}")
    while len(_STIRLING_ROWS) < k:
        prev = _STIRLING_ROWS[-1]
        kk = len(_STIRLING_ROWS)
        row = []
        for jj in range(1, kk + 2):
            left = prev[jj - 2] if 2 <= jj <= kk + 1 else 0
            right = prev[jj - 1] if jj <= kk else 0
            row.append(left - kk * right)
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[k - 1][j - 1]


def _alt_zeta_closed(s: int) -> ClosedForm:
    """(2^{1-s} - 1) zeta(s) continued to every integer s."""
    if s >= 2:
        return eta_factor_closed(s)
    if s == 1:
        return eta_factor_closed(1)
    return ClosedForm.rational(
        Fraction(2 ** (1 - s) - 1) * zeta_nonpositive_rational(s))


def polylog_derivative_at_minus1(p: int, k: int) -> ClosedForm:
    """[d^k Li_p(-t) / dt^k] at t = 1, exactly.

    Valid as stated for k <= p - 1 (the eta limit covers p - j = 1); deeper
    derivatives would need the analytic continuation used internally by
    s_minus_truncated.
    """
    if p < 2 or k < 1:
        raise DomainError("requires p >= 2 and k >= 1")
    if k > p - 1:
        raise DomainError("derivative order beyond p - 1 leaves the stated regime")
    return _derivative_cf(p, k)


def _derivative_cf(p: int, k: int) -> ClosedForm:
    out = ClosedForm.zero()
    for j in range(1, k + 1):
        out = out + Fraction(stirling1(k, j)) * _alt_zeta_closed(p - j)
    return out


def s_minus_truncated(p: int, kt: int) -> ClosedForm:
    """Truncation at k = kt of the Stirling expansion of S-(p).

    Exact closed form in {1, pi powers, zeta(odd), ln 2}; accuracy improves
    with kt (nine decimals at p = 5, kt = 10).
    """
    if p < 3:
        raise DomainError("requires p >= 3")
    if kt < 1:
        raise DomainError("requires kt >= 1")
    out = ClosedForm.zero()
    for k in range(1, kt + 1):
        out = out + Fraction((-1) ** (k + 1), k * math.factorial(k)) * _derivative_cf(p, k)
    return out
