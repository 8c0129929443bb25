"""The three families of polylogarithm product integrals

    I+(p,q) = integral_0^1 Li_p(t) Li_q(t)  dt/t
    I-(p,q) = integral_0^1 Li_p(-t) Li_q(-t) dt/t
    I+-(p,q) = integral_0^1 Li_p(t) Li_q(-t) dt/t

with their difference-equation machinery, closed forms, infinite-series
representations, and quadrature oracles.  Every closed form is computed by
at least two independent displays which are asserted exactly equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .closedform import ClosedForm, LN2, zeta_closed
from .digamma import euler_gamma, psi
from .errors import DomainError
from .eulersums import c_sum, jordan_nielsen, milgram, s_minus, s_plus
from .quadrature import Integrand, integrate01
from .special import li_neg, li_pos
from .summation import sum_alternating, sum_tail, zeta_num


class Family(Enum):
    PLUS = "plus"
    MINUS = "minus"
    MIXED = "mixed"

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.lower())
        except ValueError:
            raise DomainError(f"unknown family {text!r}; expected plus/minus/mixed")

    @property
    def symmetric(self) -> bool:
        return self is not Family.MIXED


@dataclass(frozen=True)
class IpqValue:
    family: Family
    p: int
    q: int
    closed: ClosedForm | None
    numeric: float

    @property
    def residual_sigma_atoms(self):
        return [] if self.closed is None else self.closed.sigma_atoms()


def _check_orders(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise DomainError("orders must be >= 1")


# ---------------------------------------------------------------------------
# boundary products R(p, q)
# ---------------------------------------------------------------------------


def r_value(family: Family, p: int, q: int) -> ClosedForm:
    """R(p,q): the product of endpoint polylog values for the family.

    R+ = zeta(p) zeta(q); R- = Li_p(-1) Li_q(-1); R+- = zeta(p) Li_q(-1);
    eta-type slots admit the order-1 limit -ln 2, zeta-type slots do not.
    """
    from .closedform import eta_factor_closed
    _check_orders(p, q)
    if family is Family.PLUS:
        if p < 2 or q < 2:
            raise DomainError("R+ diverges when either order is 1")
        return zeta_closed(p) * zeta_closed(q)
    if family is Family.MINUS:
        return eta_factor_closed(p) * eta_factor_closed(q)
    if p < 2:
        raise DomainError("R+- diverges when the first order is 1")
    return zeta_closed(p) * eta_factor_closed(q)


# ---------------------------------------------------------------------------
# quadrature oracle
# ---------------------------------------------------------------------------


def ipq_numeric(family: Family, p: int, q: int, tol: float = 1e-11) -> float:
    _check_orders(p, q)
    if family is Family.PLUS:
        def ev(x: float, omx: float) -> float:
            return li_pos(p, x, omx) * li_pos(q, x, omx) / x
    elif family is Family.MINUS:
        def ev(x: float, omx: float) -> float:
            return li_neg(p, x, omx) * li_neg(q, x, omx) / x
    else:
        def ev(x: float, omx: float) -> float:
            return li_pos(p, x, omx) * li_neg(q, x, omx) / x
    return integrate01(Integrand(ev, "log_singular_both"), tol).value


# q = 0 extensions: Li_0(-t) = -t/(1+t) keeps these two integrable.

def ipq_mixed_q0(p: int, tol: float = 1e-11) -> float:
    """I+-(p, 0) = -integral_0^1 Li_p(t) / (1+t) dt."""
    if p < 1:
        raise DomainError("order must be >= 1")
    return -integrate01(
        Integrand(lambda x, omx: li_pos(p, x, omx) / (1.0 + x), "log_singular_at_1"),
        tol).value


def ipq_minus_q0(p: int, tol: float = 1e-11) -> float:
    """I-(p, 0) = -integral_0^1 Li_p(-t) / (1+t) dt."""
    if p < 1:
        raise DomainError("order must be >= 1")
    return -integrate01(
        Integrand(lambda x, omx: li_neg(p, x, omx) / (1.0 + x), "regular"),
        tol).value


# ---------------------------------------------------------------------------
# difference-equation machinery
# ---------------------------------------------------------------------------


def _r_sum(family: Family, p: int, q: int, n: int) -> ClosedForm:
    out = ClosedForm.zero()
    for k in range(n):
        out = out + Fraction((-1) ** k) * r_value(family, p + k + 1, q - k)
    return out


def recurrence_shift(family: Family, p: int, q: int, n: int, base: IpqValue) -> IpqValue:
    """I(p+n, q-n) from I(p, q) by the closed telescoping solution."""
    if n < 0:
        raise DomainError("shift count must be >= 0")
    if (base.family, base.p, base.q) != (family, p, q):
        raise DomainError("base value does not match the requested (family, p, q)")
    if n == 0:
        return base
    if q - n < 1:
        raise DomainError("shift would leave the (p, q >= 1) domain")
    rsum = _r_sum(family, p, q, n)
    sign = Fraction((-1) ** n)
    closed = None if base.closed is None else sign * (base.closed - rsum)
    from .sigma import cf_num
    numeric = float(sign) * (base.numeric - cf_num(rsum))
    return IpqValue(family, p + n, q - n, closed, numeric)


def ipq_closed_odd(family: Family, p: int, n: int) -> ClosedForm:
    """I(p, p+2n-1) for the symmetric families: a pure R combination."""
    if not family.symmetric:
        raise DomainError("odd closed form applies to the symmetric families only; "
                          "use ipq_mixed_odd_reduction for the mixed family")
    if p < 1 or n < 1:
        raise DomainError("p, n must be >= 1")
    out = Fraction((-1) ** (n + 1), 2) * r_value(family, p + n, p + n)
    for k in range(n - 1):
        out = out + Fraction((-1) ** k) * r_value(family, p + k + 1, p + 2 * n - 1 - k)
    return out


def ipq_mixed_odd_reduction(p: int, n: int) -> ClosedForm:
    """I+-(p, p+2n-1) reduced to the near-diagonal I+-(p+n-1, p+n)."""
    if p < 1 or n < 1:
        raise DomainError("p, n must be >= 1")
    out = Fraction((-1) ** (n + 1)) * _final_sum_form(Family.MIXED, p + n - 1, p + n)
    for k in range(n - 1):
        out = out + Fraction((-1) ** k) * r_value(Family.MIXED, p + k + 1, p + 2 * n - 1 - k)
    return out


def ipq_even_reduction(family: Family, p: int, n: int) -> ClosedForm:
    """I(p, p+2n) reduced to the diagonal I(p+n, p+n), any family."""
    if p < 1 or n < 0:
        raise DomainError("p >= 1 and n >= 0 required")
    out = Fraction((-1) ** n) * _final_sum_form(family, p + n, p + n)
    for k in range(n):
        out = out + Fraction((-1) ** k) * r_value(family, p + k + 1, p + 2 * n - k)
    return out


# ---------------------------------------------------------------------------
# final closed forms
# ---------------------------------------------------------------------------


def _mu_sum(family: Family, p: int, q: int) -> ClosedForm:
    """(-1)^p sum_{mu=2}^{p} (-1)^mu (zeta factor) (companion factor).

    The single sign-dense block shared by all three final displays.
    """
    r = p + q
    out = ClosedForm.zero()
    for mu in range(2, p + 1):
        if family is Family.PLUS:
            term = zeta_closed(mu) * zeta_closed(r + 1 - mu)
        elif family is Family.MIXED:
            term = Fraction(1 - 2 ** (r - mu), 2 ** (r - mu)) \
                * zeta_closed(mu) * zeta_closed(r + 1 - mu)
        else:
            term = Fraction(1 - 2 ** (mu - 1), 2 ** (mu - 1)) \
                * Fraction(1 - 2 ** (r - mu), 2 ** (r - mu)) \
                * zeta_closed(mu) * zeta_closed(r + 1 - mu)
        out = out + Fraction((-1) ** mu) * term
    return Fraction((-1) ** p) * out


def _minus_prefix(p: int, r: int) -> ClosedForm:
    # (-1)^p * 2 * [ln2 (2^-r - 1) zeta(r) + (1 - 2^{-r-1}) zeta(r+1)]
    inner = (ClosedForm.atom(LN2) * Fraction(1 - 2 ** r, 2 ** r) * zeta_closed(r)
             + (1 - Fraction(1, 2 ** (r + 1))) * zeta_closed(r + 1))
    return Fraction(2 * (-1) ** p) * inner


def _final_sum_form(family: Family, p: int, q: int) -> ClosedForm:
    """Final display in terms of the named sums S+/S-/C/J1/M."""
    r = p + q
    sign = Fraction((-1) ** (p + 1))
    if family is Family.PLUS:
        return _mu_sum(family, p, q) + sign * s_plus(r)
    if family is Family.MIXED:
        return _mu_sum(family, p, q) + sign * s_minus(r)
    bracket = s_minus(r) - 2 * c_sum(r) + 2 * jordan_nielsen("J1", r)
    return (_minus_prefix(p, r) + _mu_sum(family, p, q)
            + Fraction((-1) ** p) * bracket)


def _final_nielsen_form(family: Family, p: int, q: int) -> ClosedForm:
    """Final display in Nielsen terms (s_{r-1,2} and sigma~_{r-1,2})."""
    from .seriesring import kolbig_snp
    from .sigma import sigma_tilde
    r = p + q
    sign = Fraction((-1) ** p)
    if family is Family.PLUS:
        body = _mu_sum(family, p, q) * sign - zeta_closed(r + 1) - kolbig_snp(r - 1, 2, max_weight=max(8, r + 1))
        return sign * body
    if family is Family.MIXED:
        body = (_mu_sum(family, p, q) * sign
                - Fraction(1 - 2 ** r, 2 ** r) * zeta_closed(r + 1)
                - sigma_tilde(r - 1, 2))
        return sign * body
    body = (_mu_sum(family, p, q) * sign
            + Fraction(2) * (ClosedForm.atom(LN2) * Fraction(1 - 2 ** r, 2 ** r) * zeta_closed(r))
            + Fraction(2) * (1 - Fraction(1, 2 ** (r + 1))) * zeta_closed(r + 1)
            + (1 - Fraction(1, 2 ** r)) * kolbig_snp(r - 1, 2, max_weight=max(8, r + 1))
            - zeta_closed(r + 1)
            - 2 * milgram(r))
    return sign * body


def ipq_final(family: Family, p: int, q: int) -> ClosedForm:
    """Closed form of I(p,q), asserted identical across independent routes.

    Routes: the named-sum display, the Nielsen display, and (where one
    exists) the difference-equation reduction to R values or the diagonal.
    sigma~ atoms survive exactly when the required alternating sum has no
    known closed form (odd p+q >= 5 in the mixed family).
    """
    _check_orders(p, q)
    sum_form = _final_sum_form(family, p, q)
    nielsen_form = _final_nielsen_form(family, p, q)
    if sum_form != nielsen_form:
        raise RuntimeError(
            f"I[{family.value}]({p},{q}): named-sum and Nielsen displays disagree")
    reduction = _reduction_route(family, p, q)
    if reduction is not None and reduction != sum_form:
        raise RuntimeError(
            f"I[{family.value}]({p},{q}): difference-equation route disagrees")
    return sum_form


def _reduction_route(family: Family, p: int, q: int) -> ClosedForm | None:
    if family.symmetric:
        lo, hi = min(p, q), max(p, q)
        diff = hi - lo
        if diff % 2 == 1:
            return ipq_closed_odd(family, lo, (diff + 1) // 2)
        return ipq_even_reduction(family, lo, diff // 2)
    if q > p and (q - p) % 2 == 1:
        return ipq_mixed_odd_reduction(p, (q - p + 1) // 2)
    if q >= p and (q - p) % 2 == 0:
        return ipq_even_reduction(family, p, (q - p) // 2)
    return None


def ipq_value(family: Family, p: int, q: int, tol: float = 1e-11) -> IpqValue:
    return IpqValue(family, p, q, ipq_final(family, p, q),
                    ipq_numeric(family, p, q, tol))


def low_order_report(p: int):
    """Verify the low-order (q = 0, 1) special-integral identities at one p.

    Returns a VerificationReport; disagreements are recorded as failing
    entries rather than raised.
    """
    if not 2 <= p <= 4:
        raise DomainError("low-order report covers p in 2..4")
    from .verify import low_order_entries, report_from_entries
    return report_from_entries(low_order_entries(p))


# ---------------------------------------------------------------------------
# infinite-series representations (third, fully numeric route)
# ---------------------------------------------------------------------------


def ipq_series(family: Family, p: int, q: int, tol: float = 1e-9) -> float:
    """I(p,q) from the series displays, with every psi-sum evaluated
    numerically (never through the closed forms)."""
    _check_orders(p, q)
    r = p + q
    part = tol / 16.0
    g = euler_gamma()
    mu_sum = 0.0
    for mu in range(2, p + 1):
        if family is Family.PLUS:
            t = zeta_num(mu) * zeta_num(r + 1 - mu)
        elif family is Family.MIXED:
            t = zeta_num(mu) * (2.0 ** (mu - r) - 1.0) * zeta_num(r + 1 - mu)
        else:
            t = ((2.0 ** (1 - mu) - 1.0) * zeta_num(mu)
                 * (2.0 ** (mu - r) - 1.0) * zeta_num(r + 1 - mu))
        mu_sum += (-1.0) ** mu * t
    mu_sum *= (-1.0) ** p

    if family is Family.PLUS:
        s = sum_tail(lambda k: (psi(k + 1.0) + g) * k ** (-float(r)), part, r)
        return mu_sum + (-1.0) ** (p + 1) * s
    if family is Family.MIXED:
        s = sum_alternating(
            lambda k: (-1) ** k * (psi(k + 1.0) + g) * float(k) ** (-float(r)), part)
        return mu_sum + (-1.0) ** (p + 1) * s

    prefix = (-1.0) ** p * 2.0 * (math.log(2.0) * (2.0 ** (-r) - 1.0) * zeta_num(r)
                                  + (1.0 - 2.0 ** (-r - 1)) * zeta_num(r + 1))
    s_alt = sum_alternating(
        lambda k: (-1) ** k * (psi(k + 1.0) + g) * float(k) ** (-float(r)), part)
    s_even = sum_tail(lambda k: (psi(k + 1.0) + g) * (2.0 * k) ** (-float(r)), part, r)
    s_half = sum_tail(lambda k: (psi(k + 0.5) - psi(0.5)) * (2 * k + 1.0) ** (-float(r)),
                      part, r)
    return prefix + mu_sum + (-1.0) ** p * (s_alt - s_even + s_half)
