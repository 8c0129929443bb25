import math
from fractions import Fraction

import pytest

from polylog.closedform import ClosedForm, LN2, PI, zeta_closed
from polylog.errors import DomainError
from polylog.eulersums import (SumKind, c_sum, jordan_even, jordan_nielsen,
                               milgram, s_minus, s_minus_even_closed, s_plus,
                               sum_oracle)
from polylog.sigma import cf_num, sigma_tilde

from conftest import li_half_brute, zeta_brute


def _pi_pow(e, c):
    return ClosedForm.atom(PI, e, Fraction(c))


def test_splus_values():
    assert s_plus(2) == 2 * zeta_closed(3)
    assert s_plus(3) == _pi_pow(4, Fraction(1, 72))
    assert s_plus(4) == 3 * zeta_closed(5) - zeta_closed(2) * zeta_closed(3)
    with pytest.raises(DomainError):
        s_plus(1)


def test_csum_values_and_dual():
    assert c_sum(2) == Fraction(1, 4) * zeta_closed(3)
    assert c_sum(3) == _pi_pow(4, Fraction(1, 1152))
    for r in range(2, 8):
        c_sum(r)  # the dual Nielsen display is asserted inside


def test_jordan_even_values():
    expected_j1 = (Fraction(-7, 16) * zeta_closed(3)
                   + ClosedForm.atom(LN2) * Fraction(3, 4) * zeta_closed(2))
    assert jordan_even("J1", 2) == expected_j1
    assert jordan_even("J2", 2) == Fraction(7, 16) * zeta_closed(3)
    with pytest.raises(DomainError):
        jordan_even("J1", 3)
    with pytest.raises(DomainError):
        jordan_even("JX", 2)


def test_milgram_values():
    expected = (Fraction(7, 8) * zeta_closed(3)
                - ClosedForm.atom(LN2) * Fraction(3, 4) * zeta_closed(2))
    assert milgram(2) == expected
    with pytest.raises(DomainError):
        milgram(1)
    for r in range(2, 9):
        milgram(r)  # simplified == unsimplified asserted inside


def test_jordan_odd_order3_closed_forms(ctx):
    ln2 = math.log(2.0)
    li4h = li_half_brute(4)
    j1 = (23 * math.pi ** 4 / 5760 + math.pi ** 2 * ln2 ** 2 / 24
          - ln2 ** 4 / 24 - li4h)
    j2 = (0.875 * ln2 * zeta_brute(3) - 53 * math.pi ** 4 / 5760
          - math.pi ** 2 * ln2 ** 2 / 24 + ln2 ** 4 / 24 + li4h)
    assert cf_num(jordan_nielsen("J1", 3)) == pytest.approx(j1, abs=1e-13)
    assert cf_num(jordan_nielsen("J2", 3)) == pytest.approx(j2, abs=1e-13)


def test_jordan_nielsen_matches_even():
    for which in ("J1", "J2"):
        for r in (2, 4, 6):
            assert jordan_nielsen(which, r) == jordan_even(which, r)


def test_sminus_values(ctx):
    assert s_minus(2) == Fraction(-5, 8) * zeta_closed(3)
    ln2 = math.log(2.0)
    expected3 = (1.75 * ln2 * zeta_brute(3) - 11 * math.pi ** 4 / 360
                 - math.pi ** 2 * ln2 ** 2 / 12 + ln2 ** 4 / 12
                 + 2 * li_half_brute(4))
    assert cf_num(s_minus(3)) == pytest.approx(expected3, abs=1e-13)
    # odd r >= 5 keeps the open sigma~ constant
    cf5 = s_minus(5)
    assert [a.name for a in cf5.sigma_atoms()] == ["sigma_4_2"]
    assert abs(cf_num(cf5) - sum_oracle(SumKind("SMinus", 5), 1e-11)) <= 1e-10
    with pytest.raises(DomainError):
        s_minus(1)


def test_sminus_even_closed_route():
    for r in (2, 4, 6, 8):
        cf = s_minus_even_closed(r)
        assert not cf.sigma_atoms()
        assert cf == s_minus(r)


def test_closed_vs_oracles():
    cases = [
        (s_plus, "SPlus"), (milgram, "Milgram"), (c_sum, "CSum"),
        (lambda r: jordan_nielsen("J1", r), "Jordan1"),
        (lambda r: jordan_nielsen("J2", r), "Jordan2"),
        (s_minus, "SMinus"),
    ]
    for fn, tag in cases:
        for r in (2, 3, 4):
            closed_value = cf_num(fn(r))
            oracle = sum_oracle(SumKind(tag, r), 1e-11)
            assert abs(closed_value - oracle) <= 1e-10, (tag, r)


def test_decomposition_identity():
    for r in range(2, 9):
        lhs = sum_oracle(SumKind("SMinus", r), 1e-11)
        rhs = (sum_oracle(SumKind("Jordan2", r), 1e-11)
               - sum_oracle(SumKind("Jordan1", r), 1e-11)
               + sum_oracle(SumKind("CSum", r), 1e-11)
               - sum_oracle(SumKind("Milgram", r), 1e-11)
               - (1 - 2.0 ** (-r - 1)) * zeta_brute(r + 1))
        assert abs(lhs - rhs) <= 1e-10, r


def test_even_closed_forms_vs_oracles():
    for r in (2, 4, 6):
        assert abs(cf_num(s_minus(r)) - sum_oracle(SumKind("SMinus", r), 1e-11)) <= 1e-10
        for which, tag in (("J1", "Jordan1"), ("J2", "Jordan2")):
            assert abs(cf_num(jordan_even(which, r))
                       - sum_oracle(SumKind(tag, r), 1e-11)) <= 1e-10


def test_sumkind_validation():
    with pytest.raises(DomainError):
        SumKind("SPlus", 1)
    with pytest.raises(DomainError):
        SumKind("Nope", 3)


def test_sminus_odd_general_vs_dropped_minus_one():
    # the general display keeps (2^-r - 1); dropping the -1 fails numerically
    oracle = sum_oracle(SumKind("SMinus", 5), 1e-11)
    general = cf_num((Fraction(1, 32) - 1) * zeta_closed(6) + sigma_tilde(4, 2))
    variant = cf_num(Fraction(1, 32) * zeta_closed(6) + sigma_tilde(4, 2))
    assert abs(oracle - general) <= 1e-10
    assert abs(oracle - variant) > 1.0
