"""Truncated bivariate power series with exact closed-form coefficients.

This is the machinery behind two generating-function routes:

* the Nielsen constants s_{n,p}, extracted from the expansion of
  (1/beta) * Gamma(1+alpha) Gamma(1+beta) / Gamma(1+alpha+beta);
* the log integrals i(n,m), extracted from the Beta function
  B(nu+1, mu+1) = Gamma(1+nu) Gamma(1+mu) / ((1+nu+mu) Gamma(1+nu+mu)).

ln Gamma(1+z) is encoded with its Euler-gamma term included; the ratios
used here cancel gamma identically and that cancellation is asserted, not
assumed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .closedform import ClosedForm, GAMMA, zeta_closed
from .errors import CapacityError, DomainError, ShapeError

DEFAULT_MAX_WEIGHT = 8


class BivariateSeries:
    """Dense truncated series sum c[i][j] * a^i * b^j, coefficients exact."""

    __slots__ = ("na", "nb", "c")

    def __init__(self, na: int, nb: int,
                 coeffs: list[list[ClosedForm]] | None = None):
        if na < 0 or nb < 0:
            raise ShapeError("truncation orders must be >= 0")
        self.na = na
        self.nb = nb
        if coeffs is None:
            self.c = [[ClosedForm.zero() for _ in range(nb + 1)]
                      for _ in range(na + 1)]
        else:
            self.c = coeffs

    @classmethod
    def constant(cls, na: int, nb: int, value: ClosedForm) -> "BivariateSeries":
        s = cls(na, nb)
        s.c[0][0] = value
        return s

    def _check_shape(self, other: "BivariateSeries") -> None:
        if self.na != other.na or self.nb != other.nb:
            raise ShapeError(
                f"order mismatch: ({self.na},{self.nb}) vs ({other.na},{other.nb})")

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check_shape(other)
        out = BivariateSeries(self.na, self.nb)
        for i in range(self.na + 1):
            for j in range(self.nb + 1):
                out.c[i][j] = self.c[i][j] + other.c[i][j]
        return out

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check_shape(other)
        out = BivariateSeries(self.na, self.nb)
        for i in range(self.na + 1):
            for j in range(self.nb + 1):
                out.c[i][j] = self.c[i][j] - other.c[i][j]
        return out

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check_shape(other)
        out = BivariateSeries(self.na, self.nb)
        for i1 in range(self.na + 1):
            row = self.c[i1]
            for j1 in range(self.nb + 1):
                c1 = row[j1]
                if c1.is_zero:
                    continue
                for i2 in range(self.na + 1 - i1):
                    for j2 in range(self.nb + 1 - j1):
                        c2 = other.c[i2][j2]
                        if c2.is_zero:
                            continue
                        out.c[i1 + i2][j1 + j2] = out.c[i1 + i2][j1 + j2] + c1 * c2
        return out

    def scale(self, q) -> "BivariateSeries":
        out = BivariateSeries(self.na, self.nb)
        for i in range(self.na + 1):
            for j in range(self.nb + 1):
                out.c[i][j] = self.c[i][j] * q
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero for row in self.c for c in row)

    def exp(self) -> "BivariateSeries":
        """exp of a series with zero constant term."""
        if not self.c[0][0].is_zero:
            raise DomainError("series exponential requires a zero constant term")
        out = BivariateSeries.constant(self.na, self.nb, ClosedForm.one())
        power = BivariateSeries.constant(self.na, self.nb, ClosedForm.one())
        for k in range(1, self.na + self.nb + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power.scale(Fraction(1, math.factorial(k)))
        return out


def bps_mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a * b


def bps_exp(a: BivariateSeries) -> BivariateSeries:
    return a.exp()


def _lngamma_coeff(k: int) -> ClosedForm:
    # ln Gamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k
    if k == 1:
        return ClosedForm.atom(GAMMA, 1, -1)
    return Fraction((-1) ** k, k) * zeta_closed(k)


def _lngamma_ratio_log(na: int, nb: int) -> BivariateSeries:
    """ln Gamma(1+a) + ln Gamma(1+b) - ln Gamma(1+a+b), truncated."""
    s = BivariateSeries(na, nb)
    kmax = na + nb
    for k in range(1, kmax + 1):
        lg = _lngamma_coeff(k)
        if k <= na:
            s.c[k][0] = s.c[k][0] + lg
        if k <= nb:
            s.c[0][k] = s.c[0][k] + lg
        for i in range(max(0, k - nb), min(k, na) + 1):
            j = k - i
            s.c[i][j] = s.c[i][j] - math.comb(k, i) * lg
    return s


_RATIO_CACHE: dict[tuple[int, int], BivariateSeries] = {}
_BETA_CACHE: dict[tuple[int, int], BivariateSeries] = {}


def gamma_ratio_series(orders: tuple[int, int]) -> BivariateSeries:
    """Series of Gamma(1+a) Gamma(1+b) / Gamma(1+a+b).

    Equals exp(sum_{k>=2} (-1)^k zeta(k)/k [a^k + b^k - (a+b)^k]); the
    gamma terms cancel in the log and the cancellation is asserted.
    """
    na, nb = orders
    if na < 1 or nb < 1:
        raise ShapeError("gamma ratio series needs orders >= (1, 1)")
    key = (na, nb)
    if key not in _RATIO_CACHE:
        logs = _lngamma_ratio_log(na, nb)
        for i in range(na + 1):
            for j in range(nb + 1):
                if GAMMA in logs.c[i][j].atoms():
                    raise RuntimeError(
                        "Euler-gamma terms failed to cancel in the log-Gamma ratio")
        _RATIO_CACHE[key] = logs.exp()
    return _RATIO_CACHE[key]


def _beta_series(orders: tuple[int, int]) -> BivariateSeries:
    """Series of B(a+1, b+1) = gamma-ratio(a, b) / (1 + a + b)."""
    key = orders
    if key not in _BETA_CACHE:
        na, nb = orders
        ratio = gamma_ratio_series(orders)
        geom = BivariateSeries(na, nb)
        for i in range(na + 1):
            for j in range(nb + 1):
                geom.c[i][j] = ClosedForm.rational(
                    Fraction((-1) ** (i + j) * math.comb(i + j, i)))
        _BETA_CACHE[key] = ratio * geom
    return _BETA_CACHE[key]


def kolbig_snp(n: int, p: int, max_weight: int = DEFAULT_MAX_WEIGHT) -> ClosedForm:
    """Nielsen constant s_{n,p} = S_{n,p}(1), exactly.

    Extracted from the a^p b^n coefficient of the Gamma ratio (the 1/b
    prefactor in the generating identity shifts the b index by one).
    """
    if n < 1 or p < 1:
        raise DomainError("s_{n,p} requires n, p >= 1")
    if n + p > max_weight:
        raise CapacityError(f"weight {n + p} above configured cap {max_weight}")
    series = gamma_ratio_series((max_weight - 1, max_weight))
    return Fraction((-1) ** (n + p - 1)) * series.c[p][n]


def beta_derivative_inm(n: int, m: int, max_weight: int = DEFAULT_MAX_WEIGHT) -> ClosedForm:
    """i(n,m) as the mixed Taylor coefficient of the Beta function route."""
    if n < 1 or m < 1:
        raise DomainError("i(n,m) requires n, m >= 1")
    if n + m > max_weight:
        raise CapacityError(f"weight {n + m} above configured cap {max_weight}")
    series = _beta_series((max_weight - 1, max_weight - 1))
    return Fraction(math.factorial(n) * math.factorial(m)) * series.c[n][m]
