import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polylog.closedform import ClosedForm, LN2
from polylog.errors import DomainError
from polylog.quadrature import Integrand, integrate01
from polylog.special import (li_moment, li_neg, li_pos, mpl2, nielsen_num,
                             polylog)
from polylog.summation import zeta_num

from conftest import eta_brute, li_half_brute, zeta_brute


def _li_brute(p: int, x: float, terms: int = 2_000_000) -> float:
    # plain partial sum; adequate only away from |x| = 1
    total = 0.0
    powx = 1.0
    for k in range(1, terms + 1):
        powx *= x
        t = powx / k ** p
        total += t
        if abs(t) < 1e-18:
            break
    return total


# -- polylog ------------------------------------------------------------------


def test_polylog_order_one():
    assert abs(polylog(1, 0.5) - math.log(2)) < 1e-15
    assert abs(polylog(1, -1.0) + math.log(2)) < 1e-15
    with pytest.raises(DomainError):
        polylog(1, 1.0)


def test_polylog_endpoints():
    assert abs(polylog(2, 1.0) - zeta_brute(2)) < 1e-13
    assert abs(polylog(2, -1.0) + eta_brute(2)) < 1e-13
    assert abs(polylog(4, 0.5) - li_half_brute(4)) < 1e-15
    assert polylog(3, 0.0) == 0.0


def test_polylog_domain():
    with pytest.raises(DomainError):
        polylog(0, 0.5)
    with pytest.raises(DomainError):
        polylog(2, 1.5)
    with pytest.raises(DomainError):
        polylog(2, -1.01)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
@pytest.mark.parametrize("x", [-0.999, -0.75, -0.51, -0.5, -0.1, 0.1, 0.49,
                               0.51, 0.75, 0.9, 0.999])
def test_polylog_against_series(p, x):
    assert abs(polylog(p, x) - _li_brute(p, x)) <= 1e-13 * max(1.0, abs(polylog(p, x)))


@given(st.integers(2, 6), st.floats(-0.999, 0.999))
def test_polylog_branch_seams(p, x):
    # derivative relation x Li_p'(x) = Li_{p-1}(x) via a tiny central step,
    # loose tolerance: catches branch mismatches, not roundoff
    h = 1e-6
    if abs(x) < 2 * h:
        return
    lhs = x * (polylog(p, x + h) - polylog(p, x - h)) / (2 * h)
    rhs = polylog(p - 1, x)
    assert abs(lhs - rhs) <= 5e-8 * max(1.0, abs(rhs))


def test_polylog_weight_raising_integral():
    # integral_0^1 Li_p(t)/t dt = zeta(p+1): exercises the derivative
    # structure of the ladder through quadrature
    for p in (1, 2, 3, 4):
        got = integrate01(Integrand(
            lambda x, omx, p=p: li_pos(p, x, omx) / x, "log_singular_at_1"),
            1e-12).value
        assert abs(got - zeta_brute(p + 1)) <= 1e-11, p


def test_near_one_helpers():
    omx = 1e-14
    x = 1.0 - omx
    # Li_2(x) ~ zeta(2) + ln(omx) omx + ...
    expected = zeta_brute(2) + omx * (math.log(omx) - 1.0)
    assert abs(li_pos(2, x, omx) - expected) < 1e-15
    # Li_2(-x) at x -> 1 tends to -eta(2)
    assert abs(li_neg(2, x, omx) + eta_brute(2)) < 1e-13


# -- Nielsen ------------------------------------------------------------------


def test_nielsen_examples():
    assert abs(nielsen_num(1, 1, 1.0) - zeta_brute(2)) <= 1e-11
    assert abs(nielsen_num(2, 1, -1.0) + 0.75 * zeta_brute(3)) <= 1e-11
    assert abs(nielsen_num(1, 1, -1.0) + eta_brute(2)) <= 1e-11
    assert nielsen_num(2, 2, 0.0) == 0.0


def test_nielsen_is_li_when_p_is_one():
    for n in (1, 2, 3):
        for z in (1.0, -1.0, 0.5):
            assert abs(nielsen_num(n, 1, z) - polylog(n + 1, z)) <= 1e-11


def test_nielsen_domain():
    with pytest.raises(DomainError):
        nielsen_num(0, 1, 0.5)
    with pytest.raises(DomainError):
        nielsen_num(1, 1, 2.0)


# -- depth-2 multiple polylogarithms -------------------------------------------


def _mpl2_brute(mo, mi, xo, xi, K=4000):
    inner = 0.0
    powi = 1.0
    total = 0.0
    powo = 1.0
    for k in range(1, K):
        powo *= xo
        if k >= 2:
            total += powo * inner / k ** mo
        powi *= xi
        inner += powi / k ** mi
    return total


def test_mpl2_zeta21():
    # classical: sum_{k>j} 1/(k^2 j) = zeta(3); brute pair bound via K terms
    got = mpl2(2, 1, 1.0, 1.0, 1e-10)
    assert abs(got - zeta_brute(3)) <= 1e-9


def test_mpl2_zero_argument():
    assert mpl2(3, 2, 0.0, 1.0) == 0.0


def test_mpl2_alternating_cases_match_brute():
    # alternating outer sums: brute partial sums converge after pairing
    for (mo, mi, xo, xi) in ((1, 2, -1.0, -1.0), (1, 2, -1.0, 1.0),
                             (2, 1, -1.0, 1.0), (2, 2, -1.0, -1.0)):
        got = mpl2(mo, mi, xo, xi, 1e-10)
        b1 = _mpl2_brute(mo, mi, xo, xi, 20000)
        b2 = _mpl2_brute(mo, mi, xo, xi, 20001)
        assert abs(got - 0.5 * (b1 + b2)) <= 5e-7


def test_mpl2_interior_arguments():
    got = mpl2(2, 1, 0.7, -0.6, 1e-10)
    assert abs(got - _mpl2_brute(2, 1, 0.7, -0.6)) <= 1e-10


def test_mpl2_divergent_configurations():
    with pytest.raises(DomainError):
        mpl2(1, 1, 1.0, 1.0)
    with pytest.raises(DomainError):
        mpl2(1, 2, 0.5, 1.0)
    with pytest.raises(DomainError):
        mpl2(2, 1, 1.5, 1.0)


def test_mpl2_integral_identities():
    # integral Li_p(t)/(1+t) dt = -mpl2(1, p, -1, -1)
    for p in (2, 3):
        quad = integrate01(Integrand(lambda x, omx, p=p: li_pos(p, x, omx) / (1 + x),
                                     "log_singular_at_1"), 1e-12).value
        assert abs(quad + mpl2(1, p, -1.0, -1.0, 1e-10)) <= 1e-9
    # integral [Li_p(t) - Li_p(1)]/(1-t) dt = -mpl2(p,1,1,1) - zeta(p+1)
    for p in (2, 3):
        quad = integrate01(Integrand(
            lambda x, omx, p=p: (li_pos(p, x, omx) - zeta_num(p)) / omx,
            "log_singular_at_1"), 1e-12).value
        assert abs(quad + mpl2(p, 1, 1.0, 1.0, 1e-10) + zeta_num(p + 1)) <= 1e-9


# -- moments of Li_p(-t) ---------------------------------------------------------


def test_li_moment_examples(ctx):
    m11 = li_moment(1, 1)
    assert m11 == ClosedForm.rational(1) + ClosedForm.atom(LN2, 1, -2)
    assert li_moment(1, 2) == ClosedForm.rational(Fraction(-1, 4))


def test_li_moment_against_quadrature(ctx):
    for (p, k) in ((1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (4, 1)):
        quad = integrate01(Integrand(
            lambda t, omt, p=p, k=k: li_neg(p, t, omt) * t ** (k - 1), "regular"),
            1e-12).value
        assert abs(li_moment(p, k).evaluate(ctx) - quad) <= 1e-11


def test_li_moment_domain():
    with pytest.raises(DomainError):
        li_moment(0, 1)
    with pytest.raises(DomainError):
        li_moment(1, 0)
