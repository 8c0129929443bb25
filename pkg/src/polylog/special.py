"""Polylogarithms, Nielsen functions, depth-2 multiple polylogarithms, and
the moments of Li_p(-t).

Evaluation strategy for Li_p(x):
  |x| <= 1/2           direct series (geometric convergence);
  1/2 < x < 1          expansion in mu = ln x, valid for |mu| < 2*pi;
  -1 < x < -1/2        square relation Li_p(x) = 2^{1-p} Li_p(x^2) - Li_p(-x),
                       which lands both evaluations on positive arguments.
Helpers threaded with 1-x allow full accuracy at quadrature nodes hugging
either endpoint.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .closedform import (ClosedForm, LN2, eta_factor_closed,
                         zeta_nonpositive_rational)
from .digamma import psi
from .errors import ConvergenceError, DomainError
from .quadrature import Integrand, integrate01, log1m
from .summation import (_cvz, alternating_zeta_num, eta_num, sum_alternating,
                        sum_tail, zeta_num)

_EPS = 2.2e-16


def _zeta_int(s: int) -> float:
    if s >= 2:
        return zeta_num(s)
    if s == 1:
        raise DomainError("zeta(1) diverges")
    return float(zeta_nonpositive_rational(s))


def _li_series(p: int, x: float) -> float:
    total = 0.0
    powx = 1.0
    for k in range(1, 400):
        powx *= x
        t = powx * float(k) ** (-p)
        total += t
        if abs(t) <= _EPS * abs(total) and k > 4:
            return total
    raise ConvergenceError("polylog series stalled", partial=total)


def _li_log_expansion(p: int, mu: float) -> float:
    # Li_p(e^mu) for mu < 0, |mu| < 2*pi; at p = 1 only the log term and the
    # nonpositive zeta tail survive.
    total = (mu ** (p - 1) / math.factorial(p - 1)) * (
        math.fsum(1.0 / i for i in range(1, p)) - math.log(-mu))
    powmu = 1.0
    small = 0
    for k in range(0, 80):
        if k:
            powmu *= mu / k
        if k != p - 1:
            t = _zeta_int(p - k) * powmu
            total += t
            if abs(t) <= _EPS * abs(total):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
    return total


def li_pos(p: int, x: float, omx: float) -> float:
    """Li_p(x) for x in (0, 1), with 1-x supplied exactly."""
    if x <= 0.5:
        return _li_series(p, x)
    return _li_log_expansion(p, math.log1p(-omx))


def li_neg(p: int, t: float, omt: float) -> float:
    """Li_p(-t) for t in (0, 1], with 1-t supplied exactly."""
    if t == 1.0:
        return -eta_num(p)
    if t <= 0.5:
        return _li_series(p, -t)
    tsq = t * t
    omtsq = omt * (1.0 + t)
    return 2.0 ** (1 - p) * li_pos(p, tsq, omtsq) - li_pos(p, t, omt)


def polylog(p: int, x: float) -> float:
    """Li_p(x) for integer p >= 1 and -1 <= x <= 1 (x < 1 when p = 1)."""
    if p < 1:
        raise DomainError("polylog order must be >= 1")
    if x < -1.0 or x > 1.0:
        raise DomainError("polylog argument must lie in [-1, 1]")
    if p == 1:
        if x == 1.0:
            raise DomainError("Li_1(1) diverges")
        return -math.log1p(-x)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return zeta_num(p)
    if x < 0.0:
        return li_neg(p, -x, 1.0 + x)
    return li_pos(p, x, 1.0 - x)


# ---------------------------------------------------------------------------
# Nielsen generalized polylogarithms, numerically
# ---------------------------------------------------------------------------


def nielsen_num(n: int, p: int, z: float, tol: float = 1e-12) -> float:
    """S_{n,p}(z) by quadrature of its defining integral, |z| <= 1.

    S_{n,p}(z) = (-1)^{n+p-1} / ((n-1)! p!) *
                 integral_0^1 ln^{n-1}(x) ln^p(1 - z x) / x dx.
    """
    if n < 1 or p < 1:
        raise DomainError("Nielsen indices must be >= 1")
    if z < -1.0 or z > 1.0:
        raise DomainError("Nielsen argument must lie in [-1, 1]")
    if z == 0.0:
        return 0.0
    pref = (-1.0) ** (n + p - 1) / (math.factorial(n - 1) * math.factorial(p))

    if z == 1.0:
        def ev(x: float, omx: float) -> float:
            return math.log(x) ** (n - 1) * log1m(x, omx) ** p / x
        cls = "log_singular_both"
    elif z == -1.0:
        def ev(x: float, omx: float) -> float:
            return math.log(x) ** (n - 1) * math.log1p(x) ** p / x
        cls = "log_singular_at_0"
    else:
        def ev(x: float, omx: float) -> float:
            return math.log(x) ** (n - 1) * math.log1p(-z * x) ** p / x
        cls = "log_singular_at_0"

    quad = integrate01(Integrand(ev, cls), tol)
    return pref * quad.value


# ---------------------------------------------------------------------------
# depth-2 multiple polylogarithms
# ---------------------------------------------------------------------------


def _hurwitz_tail(m: int, x: float) -> float:
    """sum_{i>=0} (x + i)^-m for m >= 2, x >= 1."""
    M = 64
    s = math.fsum((x + i) ** (-m) for i in range(M))
    y = x + M
    s += y ** (1 - m) / (m - 1) + 0.5 * y ** (-m) + m * y ** (-m - 1) / 12.0
    s -= m * (m + 1) * (m + 2) * y ** (-m - 3) / 720.0
    return s


def _alternating_tail(m: int, x: float) -> float:
    """sum_{i>=0} (-1)^i (x + i)^-m for m >= 1, x >= 1."""
    return _cvz([(x + i) ** (-m) for i in range(40)])


def mpl2(m_outer: int, m_inner: int, x_outer: float, x_inner: float,
         tol: float = 1e-10) -> float:
    """Depth-2 multiple polylogarithm
    sum_{k2 > k1 >= 1} x_outer^k2 x_inner^k1 / (k2^m_outer k1^m_inner).

    The heavier weight sits on the larger index k2 (the only reading under
    which the unit-argument cases converge); the sum is defined when
    m_outer >= 2, or when m_outer = 1 with x_outer = -1.

    For |x_inner| = 1 the inner partial sum is split into its limit plus a
    smooth tail, so the outer sum separates into a closed piece and a
    series that the tail/alternating accelerators handle directly.
    """
    for x in (x_outer, x_inner):
        if x < -1.0 or x > 1.0:
            raise DomainError("multiple polylog arguments must lie in [-1, 1]")
    if m_outer < 1 or m_inner < 1:
        raise DomainError("multiple polylog weights must be >= 1")
    if x_outer == 0.0:
        return 0.0
    if m_outer == 1 and x_outer != -1.0:
        raise DomainError("outer weight 1 requires x_outer = -1 for convergence")

    part_tol = tol / 8.0
    if abs(x_inner) < 1.0 or abs(x_outer) < 1.0:
        return _mpl2_direct(m_outer, m_inner, x_outer, x_inner, tol)

    if x_inner == 1.0 and m_inner == 1:
        # inner partial sum is the harmonic number, real-evaluable as is
        if x_outer == 1.0:
            return sum_tail(lambda k: (psi(k) - psi(1.0)) * k ** (-m_outer),
                            part_tol, m_outer)
        return sum_alternating(
            lambda k: (-1) ** k * (psi(float(k)) - psi(1.0)) * float(k) ** (-m_outer),
            part_tol)

    if x_inner == 1.0:
        # partial sum = zeta(m_inner) - U(k), U smooth and positive
        limit = zeta_num(m_inner)
        outer_full = zeta_num(m_outer) if x_outer == 1.0 else -eta_num(m_outer)
        if x_outer == 1.0:
            corr = sum_tail(lambda k: _hurwitz_tail(m_inner, k) * k ** (-m_outer),
                            part_tol, m_outer + m_inner - 1)
        else:
            corr = sum_alternating(
                lambda k: (-1) ** k * _hurwitz_tail(m_inner, float(k)) * float(k) ** (-m_outer),
                part_tol)
        return limit * outer_full - corr

    # x_inner == -1: partial sum = A - (-1)^k V(k), V smooth and positive
    limit = -eta_num(m_inner)
    if x_outer == 1.0:
        outer_full = zeta_num(m_outer)
        corr = sum_alternating(
            lambda k: (-1) ** k * _alternating_tail(m_inner, float(k)) * float(k) ** (-m_outer),
            part_tol)
    else:
        outer_full = alternating_zeta_num(m_outer)
        corr = sum_tail(lambda k: _alternating_tail(m_inner, k) * k ** (-m_outer),
                        part_tol, m_outer + m_inner)
    return limit * outer_full - corr


def _mpl2_direct(m_outer: int, m_inner: int, x_outer: float, x_inner: float,
                 tol: float) -> float:
    total = 0.0
    inner = 0.0
    powi = 1.0
    powo = x_outer
    for k2 in range(2, 40000):
        powi *= x_inner
        inner += powi / float(k2 - 1) ** m_inner
        powo *= x_outer
        t = powo * inner / float(k2) ** m_outer
        total += t
        if abs(t) < tol * 1e-3 and k2 > 30:
            return total
    raise ConvergenceError("multiple polylog direct sum stalled", partial=total)


# ---------------------------------------------------------------------------
# moments of Li_p(-t)
# ---------------------------------------------------------------------------


def _harm(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def li_moment(p: int, k: int) -> ClosedForm:
    """integral_0^1 Li_p(-t) t^{k-1} dt, exactly.

    Repeated integration by parts gives
        (-1)^p / k^p [psi(k+1) - psi(k/2+1)]
        + sum_{mu=2}^{p} (-1)^{p-mu} / k^{p+1-mu} (2^{1-mu}-1) zeta(mu),
    with the mu-sum empty for p = 1.  The digamma difference collapses to
    harmonic numbers (plus 2 ln 2 when k is odd), so the result is exact.
    """
    if p < 1 or k < 1:
        raise DomainError("li_moment requires p >= 1 and k >= 1")
    if k % 2 == 0:
        diff = ClosedForm.rational(_harm(k) - _harm(k // 2))
    else:
        odd_sum = sum((Fraction(2, 2 * i - 1) for i in range(1, (k + 1) // 2 + 1)),
                      Fraction(0))
        diff = ClosedForm.rational(_harm(k) - odd_sum) + ClosedForm.atom(LN2, 1, 2)
    out = Fraction((-1) ** p, k ** p) * diff
    for mu in range(2, p + 1):
        out = out + Fraction((-1) ** (p - mu), k ** (p + 1 - mu)) * eta_factor_closed(mu)
    return out
