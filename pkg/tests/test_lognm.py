import math
from fractions import Fraction

import pytest

from polylog.closedform import ClosedForm, LN2, PI, zeta_closed
from polylog.errors import CapacityError, DomainError
from polylog.lognm import (LogIntegralKind, h_boundary_closed, h_closed,
                           h_pde_residual, i_closed, i_pde_residual,
                           lognm_numeric, s_sigma_relation_matrix,
                           s_sigma_relation_residual, sigma_weight6_count,
                           truncated_exp_ln2)
from polylog.seriesring import beta_derivative_inm
from polylog.sigma import cf_num
from polylog.verify import expected_inm_table


def _pi_pow(e, c):
    return ClosedForm.atom(PI, e, Fraction(c))


# -- i(n, m) ---------------------------------------------------------------


def test_i_closed_low_values():
    assert i_closed(1, 1) == ClosedForm.rational(2) + _pi_pow(2, Fraction(-1, 6))
    assert i_closed(1, 3) == (ClosedForm.rational(24) + _pi_pow(2, -1)
                              + _pi_pow(4, Fraction(-1, 15)) - 6 * zeta_closed(3))
    expected_33 = (ClosedForm.rational(720) + _pi_pow(2, -36) + _pi_pow(4, -1)
                   + _pi_pow(6, Fraction(-23, 420)) - 216 * zeta_closed(3)
                   - 144 * zeta_closed(5) + 12 * _pi_pow(2, 1) * zeta_closed(3)
                   + 36 * zeta_closed(3) * zeta_closed(3))
    assert i_closed(3, 3) == expected_33


def test_i_closed_full_table():
    for (n, m), cf in expected_inm_table().items():
        assert i_closed(n, m) == cf, (n, m)


def test_i_symmetry_and_beta_route():
    for n in range(1, 4):
        for m in range(1, 4):
            assert i_closed(n, m) == i_closed(m, n)
            assert i_closed(n, m) == beta_derivative_inm(n, m)


def test_i_matches_quadrature():
    for n in range(1, 4):
        for m in range(n, 4):
            closed_value = cf_num(i_closed(n, m))
            quad = lognm_numeric(LogIntegralKind("INM", n, m), 1e-12)
            assert abs(closed_value - quad) <= 1e-9, (n, m)


def test_i_pde_residuals_vanish():
    for n in range(1, 6):
        for m in range(1, 6):
            if n + m <= 6:
                assert i_pde_residual(n, m).is_zero, (n, m)


def test_i_capacity_and_domain():
    with pytest.raises(CapacityError):
        i_closed(4, 3)
    with pytest.raises(DomainError):
        i_closed(0, 2)


# -- h(n, m) ---------------------------------------------------------------


def test_h_known_values():
    expected_11 = (ClosedForm.rational(2) + ClosedForm.atom(LN2, 1, -2)
                   + _pi_pow(2, Fraction(-1, 12)))
    assert h_closed(1, 1) == expected_11
    expected_21 = (ClosedForm.rational(-6) + _pi_pow(2, Fraction(1, 6))
                   + Fraction(3, 2) * zeta_closed(3) + ClosedForm.atom(LN2, 1, 4))
    assert h_closed(2, 1) == expected_21


def test_h_12_sign():
    # integrand ln(x) ln^2(1+x) < 0 on (0,1), so h(1,2) must be negative
    cf = h_closed(1, 2)
    assert cf_num(cf) < 0
    quad = lognm_numeric(LogIntegralKind("HNM", 1, 2), 1e-12)
    assert abs(cf_num(cf) - quad) <= 1e-11


def test_h_31_has_pi4_term():
    cf = h_closed(3, 1)
    from polylog.closedform import monomial
    assert cf.coefficient(monomial((PI, 4))) == Fraction(-7, 120)
    assert cf.coefficient(monomial((LN2, 4))) == 0


def test_h_matches_quadrature_weights_2_to_5():
    for n in range(1, 5):
        for m in range(1, 5):
            if not 2 <= n + m <= 5:
                continue
            closed_value = cf_num(h_closed(n, m))
            quad = lognm_numeric(LogIntegralKind("HNM", n, m), 1e-12)
            assert abs(closed_value - quad) <= 1e-9, (n, m)


def test_h_weight6_carries_atoms_but_matches_quadrature():
    cf = h_closed(2, 4)
    assert cf.sigma_atoms()
    quad = lognm_numeric(LogIntegralKind("HNM", 2, 4), 1e-12)
    assert abs(cf_num(cf) - quad) <= 1e-9


def test_h_pde_residuals_vanish():
    for n in range(1, 6):
        for m in range(1, 6):
            if n + m <= 6:
                assert h_pde_residual(n, m).is_zero, (n, m)


def test_h_boundary_condition():
    # h(0,1) = 2 ln 2 - 1 fixes the (-1)^m m! normalization
    assert h_boundary_closed(1) == ClosedForm.atom(LN2, 1, 2) - 1
    for m in range(1, 5):
        quad = lognm_numeric(LogIntegralKind("HNM", 0, m), 1e-12)
        assert abs(cf_num(h_boundary_closed(m)) - quad) <= 1e-10, m


def test_truncated_exponential():
    e2 = truncated_exp_ln2(2)
    expected = (ClosedForm.one() + ClosedForm.atom(LN2, 1, -1)
                + ClosedForm.atom(LN2, 2, Fraction(1, 2)))
    assert e2 == expected


# -- numeric oracle edge -------------------------------------------------------


def test_lognm_numeric_edges():
    assert lognm_numeric(LogIntegralKind("INM", 0, 1), 1e-12) == pytest.approx(-1.0, abs=1e-12)
    assert lognm_numeric(LogIntegralKind("INM", 1, 1), 1e-12) == pytest.approx(
        2 - math.pi ** 2 / 6, abs=1e-12)
    with pytest.raises(DomainError):
        LogIntegralKind("INM", 0, 0)
    with pytest.raises(DomainError):
        LogIntegralKind("XNM", 1, 1)


# -- the s <-> sigma~ network ---------------------------------------------------


def test_relation_residuals_vanish_through_weight5():
    for w in range(2, 6):
        for n in range(1, w):
            assert s_sigma_relation_residual(n, w - n).is_zero, (n, w - n)


def test_relation_residuals_weight6_are_atomic_but_numerically_zero():
    for (n, m) in ((1, 5), (2, 4), (3, 3)):
        res = s_sigma_relation_residual(n, m)
        assert res.sigma_atoms()
        assert abs(cf_num(res)) <= 1e-9


def test_weight6_rank_and_free_atoms():
    unknowns, rank, free = sigma_weight6_count()
    assert (unknowns, rank, free) == (5, 3, 2)


def test_relation_matrix_shape():
    rows = s_sigma_relation_matrix(6)
    assert len(rows) == 3
    assert all(len(coeffs) == 5 for coeffs, _ in rows)


def test_sigma_weight6_report():
    from polylog.lognm import sigma_weight6_report
    rep = sigma_weight6_report()
    assert rep.failed == 0
    ids = [e.identity_id for e in rep.entries]
    assert "lognm.sigma-weight6-rank" in ids
