"""Registry of Nielsen sigma~ constants (S_{n,p}(-1)) and the default
numeric evaluation context.

The registry is data: every (n, p) with a known closed form maps to that
form; everything else stays an atomic constant whose numeric value comes
from quadrature of the defining integral.  Known closed forms come in
three groups:

* the S_{n,1}(-1) = Li_{n+1}(-1) column, valid for every n;
* the tabulated values of weight <= 5 plus the closed weight-6 entries
  sigma~_{1,5} and sigma~_{5,1};
* the odd-first-index family sigma~_{2n+1,2}, recovered exactly from the
  even-order alternating Euler sums (this also re-derives the tabulated
  sigma~_{1,2} and sigma~_{3,2}, which is asserted).

At weight 6 the mid-table entries sigma~_{2,4}, sigma~_{3,3}, sigma~_{4,2}
have no individual closed forms, only two linear relations; those are kept
as relation records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .closedform import (Atom, ClosedForm, GAMMA, LN2, NumericContext, PI,
                         eta_factor_closed, li_half_atom, sigma_atom,
                         zeta_closed, zeta_odd_atom)
from .digamma import euler_gamma
from .errors import DomainError, EvaluationError
from .eulersums import s_minus_even_closed
from .special import nielsen_num, polylog
from .summation import zeta_num

_MAX_DERIVED_EVEN_ORDER = 8


def _li_half_cf(k: int) -> ClosedForm:
    return ClosedForm.atom(li_half_atom(k))


def _ln2_pow(e: int) -> ClosedForm:
    return ClosedForm.atom(LN2, e)


@dataclass
class SigmaRegistry:
    closed: dict[tuple[int, int], ClosedForm] = field(default_factory=dict)
    # each relation: (coefficient map over (n, p) atoms, right-hand side)
    relations: list[tuple[dict[tuple[int, int], Fraction], ClosedForm]] = \
        field(default_factory=list)


def _build_registry() -> SigmaRegistry:
    reg = SigmaRegistry()
    z3 = zeta_closed(3)
    z5 = zeta_closed(5)
    li4 = _li_half_cf(4)
    li5 = _li_half_cf(5)
    li6 = _li_half_cf(6)
    pi2 = ClosedForm.atom(PI, 2)
    pi4 = ClosedForm.atom(PI, 4)
    pi6 = ClosedForm.atom(PI, 6)

    # sigma~_{n,1} = Li_{n+1}(-1), all n
    for n in range(1, 8):
        reg.closed[(n, 1)] = eta_factor_closed(n + 1)

    reg.closed[(1, 2)] = Fraction(1, 8) * z3
    # weight 4
    reg.closed[(1, 3)] = (Fraction(-1, 90) * pi4
                          - Fraction(1, 24) * pi2 * _ln2_pow(2)
                          + Fraction(1, 24) * _ln2_pow(4)
                          + Fraction(7, 8) * _ln2_pow(1) * z3
                          + li4)
    reg.closed[(2, 2)] = (Fraction(-1, 48) * pi4
                          - Fraction(1, 12) * pi2 * _ln2_pow(2)
                          + Fraction(1, 12) * _ln2_pow(4)
                          + Fraction(7, 4) * _ln2_pow(1) * z3
                          + 2 * li4)
    # weight 5
    reg.closed[(1, 4)] = (z5
                          - Fraction(7, 16) * _ln2_pow(2) * z3
                          + Fraction(1, 36) * pi2 * _ln2_pow(3)
                          - Fraction(1, 30) * _ln2_pow(5)
                          - _ln2_pow(1) * li4
                          - li5)
    reg.closed[(2, 3)] = (Fraction(1, 12) * pi2 * z3
                          + Fraction(33, 32) * z5
                          - Fraction(7, 8) * _ln2_pow(2) * z3
                          + Fraction(1, 18) * pi2 * _ln2_pow(3)
                          - Fraction(1, 15) * _ln2_pow(5)
                          - 2 * _ln2_pow(1) * li4
                          - 2 * li5)
    reg.closed[(3, 2)] = Fraction(1, 12) * pi2 * z3 - Fraction(29, 32) * z5
    # closed weight-6 entries.  The ln^3(2) zeta(3) coefficient is 7/48:
    # quadrature of the defining integral pins it to 14 digits.
    reg.closed[(1, 5)] = (Fraction(-1, 945) * pi6
                          - Fraction(1, 96) * pi2 * _ln2_pow(4)
                          + Fraction(1, 72) * _ln2_pow(6)
                          + Fraction(7, 48) * _ln2_pow(3) * z3
                          + Fraction(1, 2) * _ln2_pow(2) * li4
                          + _ln2_pow(1) * li5
                          + li6)

    # odd-first-index sigma~_{r-1,2} from the even-order alternating sums
    for r in range(2, _MAX_DERIVED_EVEN_ORDER + 1, 2):
        derived = s_minus_even_closed(r) - (Fraction(1, 2 ** r) - 1) * zeta_closed(r + 1)
        key = (r - 1, 2)
        if key in reg.closed:
            if reg.closed[key] != derived:
                raise RuntimeError(
                    f"sigma~{key} from the even-order route contradicts its table value")
        else:
            reg.closed[key] = derived

    # weight-6 relations among the open entries
    rel1_rhs = (Fraction(-53, 15120) * pi6
                - Fraction(1, 24) * pi2 * _ln2_pow(4)
                + Fraction(1, 18) * _ln2_pow(6)
                + Fraction(7, 12) * _ln2_pow(3) * z3
                - Fraction(1, 2) * z3 * z3
                + 2 * _ln2_pow(2) * li4
                + 4 * _ln2_pow(1) * li5
                + 4 * li6)
    rel2_rhs = Fraction(1, 1512) * pi6 - Fraction(1, 2) * z3 * z3
    reg.relations.append(({(2, 4): Fraction(2), (4, 2): Fraction(-1)}, rel1_rhs))
    reg.relations.append(({(3, 3): Fraction(2), (4, 2): Fraction(-3)}, rel2_rhs))
    return reg


@lru_cache(maxsize=1)
def registry() -> SigmaRegistry:
    return _build_registry()


def sigma_tilde(n: int, p: int) -> ClosedForm:
    """sigma~_{n,p} = S_{n,p}(-1): registered closed form, else atomic."""
    if n < 1 or p < 1:
        raise DomainError("sigma~ indices must be >= 1")
    reg = registry()
    if (n, p) in reg.closed:
        return reg.closed[(n, p)]
    return ClosedForm.atom(sigma_atom(n, p))


def registered_keys() -> list[tuple[int, int]]:
    return sorted(registry().closed)


# ---------------------------------------------------------------------------
# numeric context
# ---------------------------------------------------------------------------


def _sigma_numeric(n: int, p: int) -> float:
    return nielsen_num(n, p, -1.0, tol=1e-12)


def _fallback(atom: Atom) -> tuple[float, str]:
    if atom.tag == "sigma":
        n, p = atom.args
        return _sigma_numeric(n, p), "quadrature"
    if atom.tag == "zeta_odd":
        return zeta_num(atom.args[0]), "series"
    if atom.tag == "li_half":
        return polylog(atom.args[0], 0.5), "series"
    raise EvaluationError(f"no numeric value for atom {atom.name}")


def build_context() -> NumericContext:
    """Fresh evaluation context with all standard atoms preloaded.

    sigma~ atoms resolve lazily through quadrature and are cached, so a
    context stays deterministic across repeated evaluations.
    """
    ctx = NumericContext(fallback=_fallback)
    ctx.set(PI, math.pi, "builtin")
    ctx.set(LN2, math.log(2.0), "builtin")
    ctx.set(GAMMA, euler_gamma(), "series")
    for n in range(3, 18, 2):
        ctx.set(zeta_odd_atom(n), zeta_num(n), "series")
    for k in range(4, 9):
        ctx.set(li_half_atom(k), polylog(k, 0.5), "series")
    return ctx


@lru_cache(maxsize=1)
def default_context() -> NumericContext:
    return build_context()


def cf_num(x: ClosedForm) -> float:
    """Evaluate against the shared default context."""
    return x.evaluate(default_context())


def verify_registry(tol: float = 1e-9) -> list[tuple[str, float, float, bool]]:
    """Check every registered closed form against quadrature.

    Returns (key, closed_value, quadrature_value, ok) rows; used by the
    verification suite rather than at import time so that building the
    registry stays cheap.
    """
    rows = []
    for (n, p), cf in sorted(registry().closed.items()):
        closed_value = cf_num(cf)
        quad_value = _sigma_numeric(n, p)
        rows.append((f"sigma_{n}_{p}", closed_value, quad_value,
                     abs(closed_value - quad_value) <= tol))
    for i, (coeffs, rhs) in enumerate(registry().relations, start=1):
        lhs = math.fsum(float(c) * _sigma_numeric(n, p) for (n, p), c in sorted(coeffs.items()))
        rv = cf_num(rhs)
        rows.append((f"sigma_weight6_relation_{i}", lhs, rv, abs(lhs - rv) <= tol))
    return rows
