"""Identity verification suites.

Every deterministic identity the package exposes is registered here as a
check producing one report entry: an identity id, the symbolic value when
one exists, the oracle and closed values, the absolute error, the
tolerance, and pass/fail.  Exact (term-map) checks carry tolerance 0.

Checks that certify a correction to a commonly printed value carry a
``note`` naming the independent routes that pin the corrected value down.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .approx import polylog_derivative_at_minus1, s_minus_truncated
from .closedform import ClosedForm, LN2, PI, zeta_closed, zeta_odd_atom
from .errors import DomainError
from .eulersums import (SumKind, c_sum, jordan_even, jordan_nielsen, milgram,
                        s_minus, s_plus, sum_oracle)
from .ipq import (Family, ipq_final, ipq_minus_q0, ipq_mixed_q0,
                  ipq_numeric, ipq_series, ipq_value, r_value,
                  recurrence_shift)
from .lognm import (LogIntegralKind, h_boundary_closed, h_closed,
                    h_pde_residual, i_closed, i_pde_residual, lognm_numeric,
                    s_sigma_relation_residual, sigma_weight6_count)
from .quadrature import Integrand, integrate01, log1m
from .seriesring import beta_derivative_inm, kolbig_snp
from .sigma import cf_num, registry, sigma_tilde
from .special import li_neg, li_pos, mpl2, nielsen_num, polylog
from .summation import zeta_num


@dataclass
class CheckEntry:
    identity_id: str
    source: str
    symbolic: str | None
    oracle_value: float | None
    closed_value: float | None
    abs_error: float
    tolerance: float
    status: str
    note: str = ""

    def to_obj(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "source": self.source,
            "symbolic": self.symbolic,
            "oracle_value": self.oracle_value,
            "closed_value": self.closed_value,
            "abs_error": self.abs_error,
            "tolerance": self.tolerance,
            "status": self.status,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if e.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for e in self.entries if e.status == "fail")

    def sort(self) -> None:
        self.entries.sort(key=lambda e: e.identity_id)

    def to_obj(self) -> dict:
        return {
            "entries": [e.to_obj() for e in self.entries],
            "summary": {"pass": self.passed, "fail": self.failed},
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=indent)


def _entry(identity_id: str, source: str, oracle: float, closed: float,
           tol: float, symbolic: ClosedForm | None = None, note: str = "") -> CheckEntry:
    err = abs(oracle - closed)
    return CheckEntry(identity_id, source,
                      symbolic.to_json() if symbolic is not None else None,
                      oracle, closed, err, tol,
                      "pass" if err <= tol else "fail", note)


def _exact_entry(identity_id: str, source: str, lhs: ClosedForm, rhs: ClosedForm,
                 note: str = "") -> CheckEntry:
    ok = lhs == rhs
    diff = lhs - rhs
    return CheckEntry(identity_id, source, diff.to_json(), None, None,
                      0.0 if ok else math.inf, 0.0,
                      "pass" if ok else "fail", note)


def _zero_entry(identity_id: str, source: str, residual: ClosedForm,
                note: str = "") -> CheckEntry:
    ok = residual.is_zero
    return CheckEntry(identity_id, source, residual.to_json(), None, None,
                      0.0 if ok else math.inf, 0.0,
                      "pass" if ok else "fail", note)


# ---------------------------------------------------------------------------
# sums suite
# ---------------------------------------------------------------------------


def _checks_sums(tol_for: Callable[[str, float], float]) -> list[CheckEntry]:
    out: list[CheckEntry] = []
    closed_fns = {
        "splus": s_plus,
        "jordan1": lambda r: jordan_nielsen("J1", r),
        "jordan2": lambda r: jordan_nielsen("J2", r),
        "milgram": milgram,
        "csum": c_sum,
        "sminus": s_minus,
    }
    tags = {"splus": "SPlus", "jordan1": "Jordan1", "jordan2": "Jordan2",
            "milgram": "Milgram", "csum": "CSum", "sminus": "SMinus"}
    for name, fn in closed_fns.items():
        for r in range(2, 7):
            ident = f"sums.closed-vs-oracle.{name}.r{r}"
            tol = tol_for(ident, 1e-10)
            cf = fn(r)
            out.append(_entry(ident, f"{name}({r}) closed form vs defining series",
                              sum_oracle(SumKind(tags[name], r), tol / 8),
                              cf_num(cf), tol, cf))
    for r in range(2, 8):
        direct = Fraction(1, 2 ** (r + 1)) * s_plus(r)
        nielsen = Fraction(1, 2 ** (r + 1)) * (zeta_closed(r + 1) + kolbig_snp(r - 1, 2))
        out.append(_exact_entry(f"sums.csum-dual-forms.r{r}",
                                f"C({r}): S+ multiple vs Nielsen form", direct, nielsen))
    for which in ("J1", "J2"):
        for r in (2, 4, 6):
            out.append(_exact_entry(
                f"sums.jordan-nielsen-equals-even.{which}.r{r}",
                f"{which}({r}): Nielsen form vs even-order closed form",
                jordan_nielsen(which, r), jordan_even(which, r)))
    for r in range(2, 9):
        ident = f"sums.sminus-decomposition.r{r}"
        tol = tol_for(ident, 1e-10)
        lhs = sum_oracle(SumKind("SMinus", r), tol / 8)
        rhs = (sum_oracle(SumKind("Jordan2", r), tol / 8)
               - sum_oracle(SumKind("Jordan1", r), tol / 8)
               + sum_oracle(SumKind("CSum", r), tol / 8)
               - sum_oracle(SumKind("Milgram", r), tol / 8)
               - (1 - 2.0 ** (-r - 1)) * zeta_num(r + 1))
        out.append(_entry(ident, f"S-({r}) sum decomposition, every term from its own oracle",
                          lhs, rhs, tol))
    # odd-order Jordan closed forms (order 3) and S-(3)
    for which, fn in (("J1", lambda: jordan_nielsen("J1", 3)),
                      ("J2", lambda: jordan_nielsen("J2", 3))):
        ident = f"sums.jordan-odd-order3.{which}"
        tol = tol_for(ident, 1e-10)
        cf = fn()
        out.append(_entry(ident, f"{which}(3) closed form vs defining series",
                          sum_oracle(SumKind("Jordan1" if which == "J1" else "Jordan2", 3),
                                     tol / 8),
                          cf_num(cf), tol, cf))
    ident = "sums.sminus3-closed"
    tol = tol_for(ident, 1e-10)
    cf3 = s_minus(3)
    out.append(_entry(ident, "S-(3) closed form vs defining series",
                      sum_oracle(SumKind("SMinus", 3), tol / 8), cf_num(cf3), tol, cf3))
    # which specialization of S-(odd) holds: general (2^-r - 1) vs 2^-r variant
    oracle = sum_oracle(SumKind("SMinus", 5), 1e-11)
    general = cf_num((Fraction(1, 2 ** 5) - 1) * zeta_closed(6) + sigma_tilde(4, 2))
    variant = cf_num(Fraction(1, 2 ** 5) * zeta_closed(6) + sigma_tilde(4, 2))
    ident = "sums.sminus-odd-general-form.r5"
    out.append(_entry(ident, "S-(5) = (2^-5 - 1) zeta(6) + sigma~_{4,2}",
                      oracle, general, tol_for(ident, 1e-9),
                      note=f"the 2^-r zeta(r+1) variant (without -1) misses by "
                           f"{abs(oracle - variant):.3e}"))
    return out


# ---------------------------------------------------------------------------
# appendix suite
# ---------------------------------------------------------------------------


def _log2_quadrature(kind: str, tol: float) -> float:
    evs = {
        "mm": lambda x, omx: math.log(x) ** 2 * log1m(x, omx) / omx,
        "pm": lambda x, omx: math.log(x) ** 2 * math.log1p(x) / omx,
        "mp": lambda x, omx: math.log(x) ** 2 * log1m(x, omx) / (1.0 + x),
        "pp": lambda x, omx: math.log(x) ** 2 * math.log1p(x) / (1.0 + x),
    }
    return integrate01(Integrand(evs[kind], "log_singular_both"), tol).value


def _checks_appendix(tol_for: Callable[[str, float], float]) -> list[CheckEntry]:
    out: list[CheckEntry] = []
    pi, ln2 = math.pi, math.log(2.0)
    z3 = zeta_num(3)
    li4h = polylog(4, 0.5)
    closed = {
        "mm": -pi ** 4 / 180.0,
        "pm": 3.5 * ln2 * z3 - 19 * pi ** 4 / 720.0,
        "mp": pi ** 4 / 90.0 + pi ** 2 * ln2 ** 2 / 6.0 - ln2 ** 4 / 6.0 - 4 * li4h,
        "pp": 4 * li4h - pi ** 4 / 24.0 - pi ** 2 * ln2 ** 2 / 6.0 + ln2 ** 4 / 6.0
              + 3.5 * ln2 * z3,
    }
    names = {
        "mm": "integral ln^2(x) ln(1-x)/(1-x)",
        "pm": "integral ln^2(x) ln(1+x)/(1-x)",
        "mp": "integral ln^2(x) ln(1-x)/(1+x)",
        "pp": "integral ln^2(x) ln(1+x)/(1+x)",
    }
    for kind in ("mm", "pm", "mp", "pp"):
        ident = f"appendix.log2-integral.{kind}"
        tol = tol_for(ident, 1e-10)
        note = ("pi^4/24 term: the weight-4 power of pi is forced by dimensional "
                "consistency and confirmed by quadrature" if kind == "pp" else "")
        out.append(_entry(ident, names[kind] + " vs closed form",
                          _log2_quadrature(kind, max(tol / 8, 1e-13)), closed[kind],
                          tol, note=note))
    # odd-order Jordan integral representations, n = 1 (order 3)
    for which, sgn in (("J1", -1.0), ("J2", +1.0)):
        ident = f"appendix.jordan-integral-rep.{which}"
        tol = tol_for(ident, 1e-9)

        def ev(x: float, omx: float, sgn=sgn) -> float:
            return (math.log(x) ** 2 * (math.log1p(x) - log1m(x, omx))
                    * (1.0 / omx + sgn / (1.0 + x)))
        quad = integrate01(Integrand(ev, "log_singular_both"), max(tol / 8, 1e-13)).value
        quad /= 4.0 * math.factorial(2)
        oracle = sum_oracle(SumKind("Jordan1" if which == "J1" else "Jordan2", 3), tol / 8)
        out.append(_entry(ident, f"{which}(3) integral representation vs series", quad,
                          oracle, tol))
    # C(r) integral representation
    for r in (2, 3):
        ident = f"appendix.csum-integral-rep.r{r}"
        tol = tol_for(ident, 1e-9)

        def ev(x: float, omx: float, r=r) -> float:
            return math.log(x) ** (r - 1) * log1m(x, omx) / (x * omx)
        quad = integrate01(Integrand(ev, "log_singular_both"), max(tol / 8, 1e-13)).value
        quad *= (-1.0) ** r / (2 ** (r + 1) * math.factorial(r - 1))
        out.append(_entry(ident, f"C({r}) integral representation vs closed form",
                          quad, cf_num(c_sum(r)), tol))
    # truncated alternating sums
    display = _expected_truncation_display()
    out.append(_exact_entry("appendix.truncation-display-exact.p5kt10",
                            "S-(5) truncation at kt=10 vs its printed rationals",
                            s_minus_truncated(5, 10), display))
    oracle5 = sum_oracle(SumKind("SMinus", 5), 1e-12)
    ident = "appendix.truncation-nine-decimals.p5kt10"
    tol = tol_for(ident, 5e-10)
    out.append(_entry(ident, "S-(5) truncation at kt=10 against the series oracle",
                      oracle5, cf_num(s_minus_truncated(5, 10)), tol,
                      note="the kt=10 truncation is exactly its published value but "
                           "sits 3.39e-9 from S-(5); the stated nine-decimal accuracy "
                           "is first reached at kt=12 (3.5e-10)"))
    prev = None
    ok = True
    for kt in range(3, 11):
        err = abs(cf_num(s_minus_truncated(5, kt)) - oracle5)
        if prev is not None and err > prev:
            ok = False
        prev = err
    out.append(CheckEntry("appendix.truncation-monotone.p5",
                          "S-(5) truncation error decreases for kt = 3..10",
                          None, None, None, 0.0 if ok else math.inf, 0.0,
                          "pass" if ok else "fail"))
    # derivative values vs one-sided finite differences (domain ends at t = 1)
    for (p, k) in ((5, 1), (5, 2), (4, 1)):
        ident = f"appendix.li-derivative-fd.p{p}k{k}"
        tol = tol_for(ident, 1e-6)
        exact = cf_num(polylog_derivative_at_minus1(p, k))
        fd = _li_derivative_fd(p, k)
        out.append(_entry(ident,
                          f"d^{k} Li_{p}(-t)/dt^{k} at t=1 vs finite differences",
                          fd, exact, tol))
    return out


def _li_derivative_fd(p: int, k: int) -> float:
    f = lambda t: polylog(p, -t)
    if k == 1:
        h = 1e-4
        return (3 * f(1.0) - 4 * f(1.0 - h) + f(1.0 - 2 * h)) / (2 * h)
    h = 2e-3
    return (2 * f(1.0) - 5 * f(1.0 - h) + 4 * f(1.0 - 2 * h) - f(1.0 - 3 * h)) / h ** 2


def _expected_truncation_display() -> ClosedForm:
    return (ClosedForm.rational(Fraction(-24387227, 1741824000))
            + ClosedForm.atom(PI, 2, Fraction(-358039, 11197440))
            + ClosedForm.atom(PI, 4, Fraction(-1968329, 130636800))
            + ClosedForm.atom(zeta_odd_atom(3), 1, Fraction(2152309, 3456000))
            + ClosedForm.atom(LN2, 1, Fraction(1874237, 14515200)))


# ---------------------------------------------------------------------------
# ipq suite
# ---------------------------------------------------------------------------


def _checks_ipq(tol_for: Callable[[str, float], float]) -> list[CheckEntry]:
    out: list[CheckEntry] = []
    for family in Family:
        for p in range(1, 5):
            for q in range(1, 5):
                ident = f"ipq.grid.{family.value}.p{p}q{q}"
                tol = tol_for(ident, 1e-8)
                cf = ipq_final(family, p, q)
                out.append(_entry(ident,
                                  f"I[{family.value}]({p},{q}) closed vs quadrature",
                                  ipq_numeric(family, p, q, max(tol / 100, 1e-12)),
                                  cf_num(cf), tol, cf))
    for family in (Family.PLUS, Family.MINUS):
        for p in range(1, 4):
            for q in range(p + 1, 5):
                ident = f"ipq.symmetry.{family.value}.p{p}q{q}"
                tol = tol_for(ident, 1e-9)
                out.append(_entry(ident, f"I[{family.value}] order symmetry",
                                  ipq_numeric(family, p, q, max(tol / 8, 1e-12)),
                                  ipq_numeric(family, q, p, max(tol / 8, 1e-12)), tol))
        # odd/even reduction examples at weights 5 and 6
        pairs = {
            "1.4": ipq_final(family, 1, 4),
            "2.3": ipq_final(family, 2, 3),
            "1.5": ipq_final(family, 1, 5),
            "2.4": ipq_final(family, 2, 4),
        }
        expected = {
            "1.4": Fraction(-1, 2) * r_value(family, 3, 3) + r_value(family, 2, 4),
            "2.3": Fraction(1, 2) * r_value(family, 3, 3),
            "1.5": ipq_final(family, 3, 3) + r_value(family, 2, 5) - r_value(family, 3, 4),
            "2.4": -ipq_final(family, 3, 3) + r_value(family, 3, 4),
        }
        for key, cf in pairs.items():
            out.append(_exact_entry(
                f"ipq.reduction-examples.{family.value}.{key.replace('.', 'q')}",
                f"I[{family.value}]({key.replace('.', ',')}) vs its R-combination",
                cf, expected[key]))
    for family in Family:
        for p in range(2, 5):
            for q in range(2, 5):
                res = (ipq_final(family, p, q - 1) + ipq_final(family, p - 1, q)
                       - r_value(family, p, q))
                out.append(_zero_entry(
                    f"ipq.pair-residual.{family.value}.p{p}q{q}",
                    f"I[{family.value}]({p},{q-1}) + I[{family.value}]({p-1},{q}) "
                    f"- R({p},{q})", res))
    # n-step shift solution vs single steps
    for (family, p, q, n) in ((Family.PLUS, 1, 4, 2), (Family.MINUS, 1, 4, 3),
                              (Family.MIXED, 2, 4, 2), (Family.PLUS, 2, 3, 1)):
        base = ipq_value(family, p, q, 1e-11)
        multi = recurrence_shift(family, p, q, n, base)
        stepped = base
        for k in range(n):
            stepped = recurrence_shift(family, stepped.p, stepped.q, 1, stepped)
        out.append(_exact_entry(
            f"ipq.shift-solution.{family.value}.p{p}q{q}n{n}",
            f"I[{family.value}] {n}-step shift: closed solution vs iteration",
            multi.closed, stepped.closed))
    # three routes
    for family in Family:
        for p in range(1, 4):
            for q in range(1, 4):
                ident = f"ipq.three-routes.{family.value}.p{p}q{q}"
                tol = tol_for(ident, 1e-8)
                nv = ipq_numeric(family, p, q, max(tol / 100, 1e-12))
                sv = ipq_series(family, p, q, tol / 4)
                cv = cf_num(ipq_final(family, p, q))
                worst = max(abs(nv - sv), abs(nv - cv), abs(sv - cv))
                out.append(CheckEntry(ident,
                                      f"I[{family.value}]({p},{q}): quadrature vs "
                                      f"series vs closed", None, nv, cv, worst, tol,
                                      "pass" if worst <= tol else "fail"))
    out.extend(_checks_low_order(tol_for))
    return out


def _checks_low_order(tol_for: Callable[[str, float], float]) -> list[CheckEntry]:
    out: list[CheckEntry] = []
    for p in (2, 3, 4):
        out.extend(low_order_entries(p, tol_for))
    return out


def low_order_entries(p: int, tol_for: Callable[[str, float], float] | None = None
                      ) -> list[CheckEntry]:
    """Low-order special integrals and their depth-2 polylog forms.

    Two of the four identities hold only after correcting commonly printed
    right-hand sides: the all-positive case needs an overall sign on the
    double sum, and the alternating-numerator case needs the outer weight
    on the alternating argument.  Both corrected forms verify to full
    precision.
    """
    if p < 2:
        raise DomainError("low-order checks need p >= 2")
    if tol_for is None:
        tol_for = lambda ident, default: default
    out: list[CheckEntry] = []
    quad_tol = 1e-12
    # 1. integral Li_p(t)/(1+t) = -I+-(p,0) = -mpl2(1, p, -1, -1)
    lhs = integrate01(Integrand(lambda x, omx: li_pos(p, x, omx) / (1 + x),
                                "log_singular_at_1"), quad_tol).value
    ident = f"ipq.low-order.mixed-q0.p{p}"
    tol = tol_for(ident, 1e-9)
    out.append(_entry(ident, f"integral Li_{p}(t)/(1+t) vs -I+-({p},0)",
                      lhs, -ipq_mixed_q0(p, quad_tol), tol))
    ident = f"ipq.low-order.mixed-q0-mpl.p{p}"
    out.append(_entry(ident, f"integral Li_{p}(t)/(1+t) vs depth-2 sum",
                      lhs, -mpl2(1, p, -1.0, -1.0, tol_for(ident, 1e-9) / 8),
                      tol_for(ident, 1e-9)))
    # 2. integral Li_p(-t)/(1+t) = -I-(p,0) = -mpl2(1, p, -1, +1)
    lhs = integrate01(Integrand(lambda x, omx: li_neg(p, x, omx) / (1 + x),
                                "regular"), quad_tol).value
    ident = f"ipq.low-order.minus-q0.p{p}"
    out.append(_entry(ident, f"integral Li_{p}(-t)/(1+t) vs -I-({p},0)",
                      lhs, -ipq_minus_q0(p, quad_tol), tol_for(ident, 1e-9)))
    ident = f"ipq.low-order.minus-q0-mpl.p{p}"
    out.append(_entry(ident, f"integral Li_{p}(-t)/(1+t) vs depth-2 sum",
                      lhs, -mpl2(1, p, -1.0, 1.0, tol_for(ident, 1e-9) / 8),
                      tol_for(ident, 1e-9)))
    # 3. integral [Li_p(t) - Li_p(1)]/(1-t) = -I+(1,p-1)
    #    = -mpl2(p,1,1,1) - zeta(p+1)
    lhs = integrate01(Integrand(
        lambda x, omx: (li_pos(p, x, omx) - zeta_num(p)) / omx,
        "log_singular_at_1"), quad_tol).value
    ident = f"ipq.low-order.plus-subtracted.p{p}"
    tol = tol_for(ident, 1e-9)
    out.append(_entry(ident,
                      f"integral [Li_{p}(t)-Li_{p}(1)]/(1-t) vs -I+(1,{p-1})",
                      lhs, -cf_num(ipq_final(Family.PLUS, 1, p - 1)), tol))
    ident = f"ipq.low-order.plus-subtracted-mpl.p{p}"
    out.append(_entry(ident,
                      f"integral [Li_{p}(t)-Li_{p}(1)]/(1-t) vs depth-2 sum",
                      lhs, -mpl2(p, 1, 1.0, 1.0, tol / 8) - zeta_num(p + 1), tol,
                      note="sign-corrected form: the sum enters negated"))
    # 4. integral [Li_p(-t) - Li_p(-1)]/(1-t) = -I+-(1,p-1)
    #    = -mpl2(p,1,-1,1) + (1-2^-p) zeta(p+1)
    lim = (2.0 ** (1 - p) - 1.0) * zeta_num(p)
    lhs = integrate01(Integrand(
        lambda x, omx: (li_neg(p, x, omx) - lim) / omx,
        "log_singular_at_1"), quad_tol).value
    ident = f"ipq.low-order.mixed-subtracted.p{p}"
    tol = tol_for(ident, 1e-9)
    out.append(_entry(ident,
                      f"integral [Li_{p}(-t)-Li_{p}(-1)]/(1-t) vs -I+-(1,{p-1})",
                      lhs, -cf_num(ipq_final(Family.MIXED, 1, p - 1)), tol))
    ident = f"ipq.low-order.mixed-subtracted-mpl.p{p}"
    out.append(_entry(ident,
                      f"integral [Li_{p}(-t)-Li_{p}(-1)]/(1-t) vs depth-2 sum",
                      lhs, -mpl2(p, 1, -1.0, 1.0, tol / 8)
                      + (1 - 2.0 ** (-p)) * zeta_num(p + 1), tol,
                      note="argument-corrected form: the alternating sign sits on "
                           "the outer (weight-p) index"))
    return out


# ---------------------------------------------------------------------------
# lognm suite
# ---------------------------------------------------------------------------


def _pi_pow(e: int, c) -> ClosedForm:
    return ClosedForm.atom(PI, e, Fraction(c))


def expected_inm_table() -> dict[tuple[int, int], ClosedForm]:
    """The i(n,m) table for 1 <= n <= m <= 3, certified by three routes.

    Two entries differ from a commonly printed version of this table: the
    zeta(3) coefficient of i(2,2) is -8 (not -12) and i(2,3) carries +36
    zeta(3) (often omitted); the Beta-derivative route and quadrature agree
    on the values below to machine precision.
    """
    z3 = zeta_closed(3)
    z5 = zeta_closed(5)
    return {
        (1, 1): ClosedForm.rational(2) + _pi_pow(2, Fraction(-1, 6)),
        (1, 2): ClosedForm.rational(-6) + _pi_pow(2, Fraction(1, 3)) + 2 * z3,
        (1, 3): (ClosedForm.rational(24) + _pi_pow(2, -1) + _pi_pow(4, Fraction(-1, 15))
                 - 6 * z3),
        (2, 2): (ClosedForm.rational(24) + _pi_pow(2, Fraction(-4, 3))
                 + _pi_pow(4, Fraction(-1, 90)) - 8 * z3),
        (2, 3): (ClosedForm.rational(-120) + _pi_pow(2, 6) + _pi_pow(4, Fraction(1, 6))
                 + 36 * z3 + 24 * z5 - 2 * _pi_pow(2, 1) * z3),
        (3, 3): (ClosedForm.rational(720) + _pi_pow(2, -36) + _pi_pow(4, -1)
                 + _pi_pow(6, Fraction(-23, 420)) - 216 * z3 - 144 * z5
                 + 12 * _pi_pow(2, 1) * z3 + 36 * z3 * z3),
    }


def _checks_lognm(tol_for: Callable[[str, float], float]) -> list[CheckEntry]:
    out: list[CheckEntry] = []
    table = expected_inm_table()
    corrected = {(2, 2): "zeta(3) coefficient -8; a commonly printed -12 fails "
                         "both quadrature and the Beta-derivative route",
                 (2, 3): "+36 zeta(3) present; omitting it fails quadrature by ~43"}
    for (n, m), cf in sorted(table.items()):
        out.append(_exact_entry(f"lognm.inm-table.n{n}m{m}",
                                f"i({n},{m}) closed form vs certified table",
                                i_closed(n, m), cf, note=corrected.get((n, m), "")))
        ident = f"lognm.inm-numeric.n{n}m{m}"
        tol = tol_for(ident, 1e-9)
        out.append(_entry(ident, f"i({n},{m}) vs quadrature",
                          lognm_numeric(LogIntegralKind("INM", n, m), max(tol / 100, 1e-12)),
                          cf_num(cf), tol))
        out.append(_exact_entry(f"lognm.inm-symmetry.n{n}m{m}",
                                f"i({n},{m}) = i({m},{n})",
                                i_closed(n, m), i_closed(m, n)))
        out.append(_exact_entry(f"lognm.inm-beta-route.n{n}m{m}",
                                f"i({n},{m}) lattice solution vs Beta derivative",
                                i_closed(n, m), beta_derivative_inm(n, m)))
    h_notes = {
        (1, 2): "sign-corrected: the integrand is negative on (0,1), so h(1,2) < 0",
        (3, 1): "corrected: the weight-4 term is -7 pi^4/120 (a pi^4, not ln^4(2))",
        (1, 4): "six weight-5 terms restored; quadrature pins each coefficient",
    }
    for n in range(1, 5):
        for m in range(1, 5):
            if n + m < 2 or n + m > 5:
                continue
            ident = f"lognm.hnm-numeric.n{n}m{m}"
            tol = tol_for(ident, 1e-9)
            cf = h_closed(n, m)
            out.append(_entry(ident, f"h({n},{m}) closed form vs quadrature",
                              lognm_numeric(LogIntegralKind("HNM", n, m),
                                            max(tol / 100, 1e-12)),
                              cf_num(cf), tol, cf, note=h_notes.get((n, m), "")))
    for m in range(1, 5):
        ident = f"lognm.hnm-boundary.m{m}"
        tol = tol_for(ident, 1e-9)
        out.append(_entry(ident, f"h(0,{m}) vs (-1)^m m! (2 e_m(-ln2) - 1)",
                          lognm_numeric(LogIntegralKind("HNM", 0, m), max(tol / 100, 1e-12)),
                          cf_num(h_boundary_closed(m)), tol,
                          note="the truncated-exponential boundary value needs the "
                               "(-1)^m m! factor restored from the starred normalization"))
    for n in range(1, 6):
        for m in range(1, 6):
            if n + m > 6:
                continue
            out.append(_zero_entry(f"lognm.inm-pde.n{n}m{m}",
                                   f"i*({n},{m}) difference-equation residual",
                                   i_pde_residual(n, m)))
            out.append(_zero_entry(f"lognm.hnm-pde.n{n}m{m}",
                                   f"h*({n},{m}) difference-equation residual",
                                   h_pde_residual(n, m)))
    for w in range(2, 6):
        for n in range(1, w // 2 + 1):
            out.append(_zero_entry(f"lognm.s-sigma-network.n{n}m{w - n}",
                                   f"s({n},{w - n}) reflection relation residual",
                                   s_sigma_relation_residual(n, w - n)))
    out.extend(sigma_weight6_entries(tol_for))
    for (n, p), cf in sorted(registry().closed.items()):
        ident = f"lognm.sigma-registry.n{n}p{p}"
        tol = tol_for(ident, 1e-9)
        note = ""
        if (n, p) == (1, 5):
            note = ("ln^3(2) zeta(3) coefficient 7/48: quadrature pins it to 14 "
                    "digits (a commonly printed 7/28 misses by 0.1)")
        out.append(_entry(ident, f"sigma~({n},{p}) registered closed form vs quadrature",
                          nielsen_num(n, p, -1.0, max(tol / 100, 1e-12)), cf_num(cf),
                          tol, cf, note=note))
    for n in range(1, 6):
        for p in range(1, 6):
            if n + p > 6:
                continue
            ident = f"lognm.nielsen-vs-snp.n{n}p{p}"
            tol = tol_for(ident, 1e-10)
            out.append(_entry(ident, f"S_({n},{p})(1) quadrature vs generating function",
                              nielsen_num(n, p, 1.0, max(tol / 10, 1e-12)),
                              cf_num(kolbig_snp(n, p)), tol))
    return out


def sigma_weight6_entries(tol_for: Callable[[str, float], float] | None = None
                          ) -> list[CheckEntry]:
    """The weight-6 sigma~ block: displayed relations plus the rank count.

    The linear network at weight 6 has five unknowns and rank 3, leaving
    two genuinely free constants; the two displayed combination relations
    and the two closed endpoint entries are all checked against quadrature.
    """
    if tol_for is None:
        tol_for = lambda ident, default: default
    out: list[CheckEntry] = []
    unknowns, rank, free = sigma_weight6_count()
    out.append(CheckEntry("lognm.sigma-weight6-rank",
                          "weight-6 sigma~ relation system: rank and free atoms",
                          None, None, None,
                          0.0 if (rank, free) == (3, 2) else math.inf, 0.0,
                          "pass" if (rank, free) == (3, 2) else "fail",
                          note=f"{unknowns} unknowns, rank {rank}, {free} free atoms"))
    for i, (coeffs, rhs) in enumerate(registry().relations, start=1):
        ident = f"lognm.sigma-weight6-relation.{i}"
        tol = tol_for(ident, 1e-9)
        lhs = math.fsum(float(c) * nielsen_num(n, p, -1.0, 1e-12)
                        for (n, p), c in sorted(coeffs.items()))
        out.append(_entry(ident,
                          " + ".join(f"{c}*sigma~({n},{p})"
                                     for (n, p), c in sorted(coeffs.items()))
                          + " vs closed form",
                          lhs, cf_num(rhs), tol, rhs))
    for key in ((1, 5), (5, 1)):
        ident = f"lognm.sigma-weight6-closed.n{key[0]}p{key[1]}"
        tol = tol_for(ident, 1e-9)
        cf = sigma_tilde(*key)
        out.append(_entry(ident,
                          f"sigma~({key[0]},{key[1]}) closed form vs quadrature",
                          nielsen_num(*key, -1.0, 1e-12), cf_num(cf), tol, cf))
    return out


def report_from_entries(entries: list[CheckEntry]) -> VerificationReport:
    report = VerificationReport(list(entries))
    report.sort()
    return report


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[[Callable[[str, float], float]], list[CheckEntry]]] = {
    "sums": _checks_sums,
    "appendix": _checks_appendix,
    "ipq": _checks_ipq,
    "lognm": _checks_lognm,
}


def run_suite(suite: str = "all", tol_scale: float = 1.0,
              overrides: dict[str, float] | None = None) -> VerificationReport:
    """Run one named suite (or all of them) and return the report."""
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; expected all, "
                          + ", ".join(sorted(SUITES)))
    if tol_scale <= 0:
        raise DomainError("tolerance scale must be positive")
    overrides = overrides or {}

    def tol_for(identity_id: str, default: float) -> float:
        return overrides.get(identity_id, default) * tol_scale

    report = VerificationReport()
    names = sorted(SUITES) if suite == "all" else [suite]
    for name in names:
        report.entries.extend(SUITES[name](tol_for))
    report.sort()
    return report
