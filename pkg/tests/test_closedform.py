import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polylog.closedform import (Atom, ClosedForm, LN2, PI, GAMMA, UNIT,
                                NumericContext, atom_from_name,
                                bernoulli_fraction, eta_factor_closed,
                                li_half_atom, monomial, monomial_mul,
                                monomial_name, sigma_atom, zeta_closed,
                                zeta_nonpositive_rational, zeta_odd_atom)
from polylog.errors import DomainError, EvaluationError

from conftest import zeta_brute


# -- strategies --------------------------------------------------------------

_ATOMS = [PI, LN2, GAMMA, zeta_odd_atom(3), zeta_odd_atom(5), li_half_atom(4),
          sigma_atom(2, 4)]

_monomials = st.lists(
    st.tuples(st.sampled_from(_ATOMS), st.integers(1, 3)), max_size=3
).map(lambda pairs: monomial(*pairs))

_coeffs = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))

_closed_forms = st.dictionaries(_monomials, _coeffs, max_size=4).map(ClosedForm)


def _ctx():
    ctx = NumericContext()
    ctx.set(PI, math.pi, "builtin")
    ctx.set(LN2, math.log(2.0), "builtin")
    ctx.set(GAMMA, 0.5772156649015329, "builtin")
    ctx.set(zeta_odd_atom(3), 1.2020569031595943, "series")
    ctx.set(zeta_odd_atom(5), 1.0369277551433699, "series")
    ctx.set(li_half_atom(4), 0.5174790616738994, "series")
    ctx.set(sigma_atom(2, 4), 0.1, "quadrature")
    return ctx


# -- atoms and monomials ------------------------------------------------------


def test_atom_ordering_is_total():
    atoms = [sigma_atom(1, 2), li_half_atom(5), zeta_odd_atom(3), GAMMA, LN2, PI,
             zeta_odd_atom(5), li_half_atom(4)]
    ordered = sorted(atoms, key=Atom.sort_key)
    assert ordered == [PI, LN2, GAMMA, zeta_odd_atom(3), zeta_odd_atom(5),
                       li_half_atom(4), li_half_atom(5), sigma_atom(1, 2)]


def test_atom_validation():
    with pytest.raises(DomainError):
        zeta_odd_atom(4)
    with pytest.raises(DomainError):
        zeta_odd_atom(1)
    with pytest.raises(DomainError):
        li_half_atom(3)
    with pytest.raises(DomainError):
        sigma_atom(0, 1)


def test_atom_names_round_trip():
    for a in _ATOMS:
        assert atom_from_name(a.name) == a


def test_monomial_normalization():
    m = monomial((LN2, 1), (PI, 2), (LN2, 1))
    assert m == monomial((PI, 2), (LN2, 2))
    assert monomial_name(m) == "pi^2*ln2^2"
    assert monomial_name(UNIT) == "1"
    assert monomial_mul(m, UNIT) == m


# -- arithmetic ---------------------------------------------------------------


def test_addition_examples():
    # pi^2/6 + pi^2/12 = pi^2/4
    a = ClosedForm.atom(PI, 2, Fraction(1, 6))
    b = ClosedForm.atom(PI, 2, Fraction(1, 12))
    assert a + b == ClosedForm.atom(PI, 2, Fraction(1, 4))
    # X + 0 = X
    x = ClosedForm.rational(7) + ClosedForm.atom(LN2, 3, Fraction(-2, 5))
    assert x + ClosedForm.zero() == x
    # cancellation: (2 - pi^2/6) + pi^2/6 = 2
    y = ClosedForm.rational(2) - zeta_closed(2)
    assert y + zeta_closed(2) == ClosedForm.rational(2)


def test_multiplication_examples():
    ln2 = ClosedForm.atom(LN2)
    assert ln2 * ln2 == ClosedForm.atom(LN2, 2)
    z3 = zeta_closed(3)
    assert z3 * z3 == ClosedForm.atom(zeta_odd_atom(3), 2)
    prod = zeta_closed(2) * z3
    assert prod == ClosedForm({monomial((PI, 2), (zeta_odd_atom(3), 1)): Fraction(1, 6)})


def test_scalar_operations():
    x = zeta_closed(2)
    assert 3 * x == x * 3 == x + x + x
    assert x / 2 == Fraction(1, 2) * x
    assert (x - x).is_zero
    assert x ** 2 == x * x
    with pytest.raises(DomainError):
        x ** -1


@given(_closed_forms, _closed_forms)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(_closed_forms, _closed_forms, _closed_forms)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


@given(_closed_forms)
def test_normalization_idempotent(a):
    assert ClosedForm(a.terms) == a
    assert all(coeff != 0 for coeff in a.terms.values())


@given(_closed_forms, _closed_forms)
def test_numeric_consistency(a, b):
    ctx = _ctx()
    va, vb = a.evaluate(ctx), b.evaluate(ctx)
    scale = 1.0 + abs(va) + abs(vb) + abs(va * vb)
    assert abs((a + b).evaluate(ctx) - (va + vb)) <= 1e-12 * scale
    assert abs((a * b).evaluate(ctx) - va * vb) <= 1e-12 * scale


# -- zeta / eta closed forms ---------------------------------------------------


def test_bernoulli_values():
    expected = [Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0),
                Fraction(-1, 30), Fraction(0), Fraction(1, 42)]
    assert [bernoulli_fraction(n) for n in range(7)] == expected


def test_zeta_closed_even():
    assert zeta_closed(2) == ClosedForm.atom(PI, 2, Fraction(1, 6))
    assert zeta_closed(4) == ClosedForm.atom(PI, 4, Fraction(1, 90))
    assert zeta_closed(6) == ClosedForm.atom(PI, 6, Fraction(1, 945))
    assert zeta_closed(8) == ClosedForm.atom(PI, 8, Fraction(1, 9450))


def test_zeta_closed_odd_is_atomic():
    assert zeta_closed(3) == ClosedForm.atom(zeta_odd_atom(3))
    assert zeta_closed(7) == ClosedForm.atom(zeta_odd_atom(7))


def test_zeta_closed_domain():
    with pytest.raises(DomainError):
        zeta_closed(1)
    with pytest.raises(DomainError):
        zeta_closed(0)


def test_zeta_even_matches_series():
    ctx = _ctx()
    for n in (2, 4, 6, 8):
        assert abs(zeta_closed(n).evaluate(ctx) - zeta_brute(n)) <= 1e-12


def test_zeta_nonpositive():
    assert zeta_nonpositive_rational(0) == Fraction(-1, 2)
    assert zeta_nonpositive_rational(-1) == Fraction(-1, 12)
    assert zeta_nonpositive_rational(-2) == 0
    assert zeta_nonpositive_rational(-3) == Fraction(1, 120)


def test_eta_factor_closed():
    assert eta_factor_closed(1) == ClosedForm.atom(LN2, 1, -1)
    assert eta_factor_closed(2) == ClosedForm.atom(PI, 2, Fraction(-1, 12))
    assert eta_factor_closed(3) == Fraction(-3, 4) * zeta_closed(3)
    with pytest.raises(DomainError):
        eta_factor_closed(0)


# -- evaluation ----------------------------------------------------------------


def test_evaluate_examples():
    ctx = _ctx()
    assert abs(zeta_closed(2).evaluate(ctx) - zeta_brute(2)) < 1e-12
    half = Fraction(-1, 2) * zeta_closed(2)
    assert abs(half.evaluate(ctx) + zeta_brute(2) / 2) < 1e-12
    assert ClosedForm.zero().evaluate(ctx) == 0.0


def test_missing_atom_names_the_atom():
    ctx = NumericContext()
    with pytest.raises(EvaluationError, match="zeta3"):
        zeta_closed(3).evaluate(ctx)


def test_fallback_caches_with_provenance():
    calls = []

    def fb(atom):
        calls.append(atom)
        return (1.5, "quadrature")

    ctx = NumericContext(fallback=fb)
    cf = ClosedForm.atom(sigma_atom(2, 4))
    assert cf.evaluate(ctx) == 1.5
    assert cf.evaluate(ctx) == 1.5
    assert len(calls) == 1
    assert ctx.provenance[sigma_atom(2, 4)] == "quadrature"


# -- serialization ----------------------------------------------------------------


@given(_closed_forms)
def test_json_round_trip(a):
    assert ClosedForm.from_json(a.to_json()) == a


def test_json_shape():
    cf = ClosedForm.rational(2) - zeta_closed(2)
    obj = cf.to_obj()
    assert obj == {"terms": [
        {"monomial": [], "num": "2", "den": "1"},
        {"monomial": [["pi", 2]], "num": "-1", "den": "6"},
    ]}


def test_json_big_integers_exact():
    big = Fraction(10 ** 40 + 1, 10 ** 39 + 7)
    cf = ClosedForm.atom(LN2, 1, big)
    assert ClosedForm.from_json(cf.to_json()).coefficient(monomial((LN2, 1))) == big


def test_pretty():
    cf = ClosedForm.rational(2) - zeta_closed(2)
    assert cf.pretty() == "2 - 1/6*pi^2"
    assert ClosedForm.zero().pretty() == "0"
