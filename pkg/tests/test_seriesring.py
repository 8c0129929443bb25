import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polylog.closedform import ClosedForm, PI, zeta_closed
from polylog.errors import CapacityError, DomainError, ShapeError
from polylog.quadrature import Integrand, integrate01, log1m
from polylog.seriesring import (BivariateSeries, beta_derivative_inm, bps_exp,
                                bps_mul, gamma_ratio_series, kolbig_snp)
from polylog.sigma import cf_num


def _series_from(na, nb, entries):
    s = BivariateSeries(na, nb)
    for (i, j), cf in entries.items():
        s.c[i][j] = cf if isinstance(cf, ClosedForm) else ClosedForm.rational(cf)
    return s


# -- arithmetic ---------------------------------------------------------------


def test_mul_basic():
    a = _series_from(1, 1, {(0, 0): 1, (1, 0): 1})   # 1 + x
    b = _series_from(1, 1, {(0, 0): 1, (0, 1): 1})   # 1 + y
    p = bps_mul(a, b)
    assert p.c[0][0] == ClosedForm.one()
    assert p.c[1][0] == ClosedForm.one()
    assert p.c[0][1] == ClosedForm.one()
    assert p.c[1][1] == ClosedForm.one()


def test_mul_identity_and_truncation():
    a = _series_from(1, 2, {(0, 0): 3, (1, 1): 2})
    one = BivariateSeries.constant(1, 2, ClosedForm.one())
    assert bps_mul(a, one).c == a.c
    x = _series_from(1, 0, {(1, 0): 1})
    assert bps_mul(x, x).is_zero()  # x^2 truncates away at order (1, 0)


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        bps_mul(BivariateSeries(1, 1), BivariateSeries(2, 1))


def test_exp_basic():
    zero = BivariateSeries(2, 0)
    assert bps_exp(zero).c[0][0] == ClosedForm.one()
    x = _series_from(2, 0, {(1, 0): 1})
    e = bps_exp(x)
    assert e.c[0][0] == ClosedForm.one()
    assert e.c[1][0] == ClosedForm.one()
    assert e.c[2][0] == ClosedForm.rational(Fraction(1, 2))


def test_exp_requires_zero_constant():
    with pytest.raises(DomainError):
        bps_exp(_series_from(1, 1, {(0, 0): 1}))


@given(st.integers(0, 2), st.integers(0, 2), st.integers(-5, 5), st.integers(-5, 5))
def test_exp_log_round_trip(i, j, num1, num2):
    # exp after a formal log (built from the same multiplication) must be the
    # identity on series with unit constant term
    na = nb = 4
    u = BivariateSeries(na, nb)
    if (i, j) != (0, 0):
        u.c[i][j] = ClosedForm.rational(num1)
    u.c[min(i + 1, na)][j] = ClosedForm.rational(num2)
    u.c[0][0] = ClosedForm.zero()
    # log(1 + u) = sum (-1)^{k+1} u^k / k; u is nilpotent at these orders
    log = BivariateSeries(na, nb)
    power = BivariateSeries.constant(na, nb, ClosedForm.one())
    for k in range(1, na + nb + 1):
        power = power * u
        if power.is_zero():
            break
        log = log + power.scale(Fraction((-1) ** (k + 1), k))
    back = bps_exp(log)
    one_plus_u = u + BivariateSeries.constant(na, nb, ClosedForm.one())
    assert back.c == one_plus_u.c


# -- gamma ratio --------------------------------------------------------------


def test_gamma_ratio_low_coefficients():
    s = gamma_ratio_series((3, 3))
    assert s.c[0][0] == ClosedForm.one()
    assert s.c[1][0].is_zero
    assert s.c[0][1].is_zero
    assert s.c[1][1] == -zeta_closed(2)  # -pi^2/6
    assert s.c[2][1] == zeta_closed(3)
    assert s.c[1][2] == zeta_closed(3)


def test_gamma_ratio_orders_validation():
    with pytest.raises(ShapeError):
        gamma_ratio_series((0, 3))


# -- Nielsen constants ----------------------------------------------------------


def test_snp_known_values():
    assert kolbig_snp(1, 1) == zeta_closed(2)
    assert kolbig_snp(2, 1) == zeta_closed(3)
    assert kolbig_snp(3, 1) == zeta_closed(4)
    assert kolbig_snp(1, 2) == zeta_closed(3)
    assert kolbig_snp(2, 2) == ClosedForm.atom(PI, 4, Fraction(1, 360))
    # s_{3,2} = 2 zeta(5) - zeta(2) zeta(3)
    assert kolbig_snp(3, 2) == 2 * zeta_closed(5) - zeta_closed(2) * zeta_closed(3)


def test_snp_symmetry():
    for n in range(1, 5):
        for p in range(1, 5):
            if n + p <= 8:
                assert kolbig_snp(n, p) == kolbig_snp(p, n)


def test_snp_capacity():
    with pytest.raises(CapacityError):
        kolbig_snp(5, 4)
    assert kolbig_snp(5, 4, max_weight=9).atoms()  # raised cap works
    with pytest.raises(DomainError):
        kolbig_snp(0, 1)


def test_snp_against_quadrature():
    for n in range(1, 6):
        for p in range(1, 6):
            if n + p > 6:
                continue
            pref = (-1.0) ** (n + p - 1) / (math.factorial(n - 1) * math.factorial(p))
            quad = integrate01(Integrand(
                lambda x, omx, n=n, p=p: math.log(x) ** (n - 1) * log1m(x, omx) ** p / x,
                "log_singular_both"), 1e-12).value
            assert abs(cf_num(kolbig_snp(n, p)) - pref * quad) <= 1e-10


# -- Beta-derivative route -------------------------------------------------------


def test_inm_known_values():
    assert beta_derivative_inm(1, 1) == ClosedForm.rational(2) - zeta_closed(2)
    expected_12 = (ClosedForm.rational(-6) + 2 * zeta_closed(2) + 2 * zeta_closed(3))
    assert beta_derivative_inm(1, 2) == expected_12
    # i(2,2) = 24 - 8 zeta(2) - 8 zeta(3) - 6 zeta(4) + 2 zeta(2)^2
    expected_22 = (ClosedForm.rational(24) - 8 * zeta_closed(2) - 8 * zeta_closed(3)
                   - 6 * zeta_closed(4) + 2 * zeta_closed(2) * zeta_closed(2))
    assert beta_derivative_inm(2, 2) == expected_22


def test_inm_symmetry():
    for n in range(1, 4):
        for m in range(1, 4):
            assert beta_derivative_inm(n, m) == beta_derivative_inm(m, n)


def test_inm_capacity():
    with pytest.raises(CapacityError):
        beta_derivative_inm(5, 5)
