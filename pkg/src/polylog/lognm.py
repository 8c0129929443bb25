"""Logarithmic integrals i(n,m) and h(n,m), their Pascal-type difference
equations, and the linear network relating s_{n,p} to sigma~_{n,p}.

    i(n,m) = integral_0^1 ln^n(x) ln^m(1-x) dx = i(m,n)
    h(n,m) = integral_0^1 ln^n(x) ln^m(1+x) dx

Both solve a three-term partial difference equation in their starred
normalizations i*(n,m) = (-1)^{n+m} i(n,m)/(n! m!) (same for h*), which a
lattice-path (generating function) argument turns into explicit binomial
sums over s_{n,p} resp. sigma~_{n,p}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .closedform import ClosedForm, LN2
from .errors import CapacityError, DomainError
from .quadrature import Integrand, integrate01, log1m
from .seriesring import kolbig_snp
from .sigma import sigma_tilde

MAX_WEIGHT = 6


@dataclass(frozen=True)
class LogIntegralKind:
    tag: str  # "INM" or "HNM"
    n: int
    m: int

    def __post_init__(self):
        if self.tag not in ("INM", "HNM"):
            raise DomainError(f"unknown log-integral tag {self.tag!r}")
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise DomainError("need n, m >= 0 with n + m >= 1")


def _check_weight(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise DomainError("closed forms need n, m >= 1")
    if n + m > MAX_WEIGHT:
        raise CapacityError(f"weight {n + m} above the table cap {MAX_WEIGHT}")


# ---------------------------------------------------------------------------
# i(n, m)
# ---------------------------------------------------------------------------


def i_star(n: int, m: int) -> ClosedForm:
    """i*(n,m): lattice-path solution with unit boundary on both axes."""
    if n == 0 or m == 0:
        return ClosedForm.one()
    out = ClosedForm.rational(math.comb(n + m, n))
    for a in range(1, n + 1):
        for b in range(1, m + 1):
            out = out - Fraction(math.comb(n - a + m - b, n - a)) * kolbig_snp(a, b)
    return out


def i_closed(n: int, m: int) -> ClosedForm:
    """i(n,m) exactly, for n + m <= 6."""
    _check_weight(n, m)
    return Fraction((-1) ** (n + m) * math.factorial(n) * math.factorial(m)) \
        * i_star(n, m)


def i_pde_residual(n: int, m: int) -> ClosedForm:
    """i*(n,m) - i*(n,m-1) - i*(n-1,m) + s_{n,m}; zero when all is well."""
    _check_weight(n, m)
    return i_star(n, m) - i_star(n, m - 1) - i_star(n - 1, m) + kolbig_snp(n, m)


# ---------------------------------------------------------------------------
# h(n, m)
# ---------------------------------------------------------------------------


def truncated_exp_ln2(m: int) -> ClosedForm:
    """e_m(-ln 2) = sum_{k=0}^{m} (-ln 2)^k / k!, exact in powers of ln 2."""
    if m < 0:
        raise DomainError("truncation order must be >= 0")
    out = ClosedForm.zero()
    for k in range(m + 1):
        coeff = Fraction((-1) ** k, math.factorial(k))
        out = out + (coeff if k == 0 else ClosedForm.atom(LN2, k, coeff))
    return out


def h_star(n: int, m: int) -> ClosedForm:
    """h*(n,m): lattice-path solution with boundary h*(0,m) = -1 + 2 e_m(-ln 2)."""
    if m == 0:
        return ClosedForm.one()
    if n == 0:
        return 2 * truncated_exp_ln2(m) - 1
    out = ClosedForm.rational(math.comb(n + m, n))
    for mu in range(1, m + 1):
        out = out + 2 * Fraction(math.comb(n + m - mu, n)) \
            * ClosedForm.atom(LN2, mu, Fraction((-1) ** mu, math.factorial(mu)))
    for nu in range(1, n + 1):
        for mu in range(1, m + 1):
            out = out + Fraction(math.comb(n - nu + m - mu, n - nu)) * sigma_tilde(nu, mu)
    return out


def h_closed(n: int, m: int) -> ClosedForm:
    """h(n,m) exactly for n + m <= 6 (weight-6 values carry sigma~ atoms)."""
    _check_weight(n, m)
    return Fraction((-1) ** (n + m) * math.factorial(n) * math.factorial(m)) \
        * h_star(n, m)


def h_pde_residual(n: int, m: int) -> ClosedForm:
    """h*(n,m) - h*(n,m-1) - h*(n-1,m) - sigma~_{n,m}; zero when all is well."""
    _check_weight(n, m)
    return h_star(n, m) - h_star(n, m - 1) - h_star(n - 1, m) - sigma_tilde(n, m)


def h_boundary_closed(m: int) -> ClosedForm:
    """h(0,m) = integral_0^1 ln^m(1+x) dx = (-1)^m m! (-1 + 2 e_m(-ln 2)).

    The lattice boundary condition is stated for h*(0,m); undoing the star
    normalization restores the (-1)^m m! factor that direct evaluation of
    the integral shows (already at m = 1, where the integral is 2 ln 2 - 1).
    """
    if m < 1:
        raise DomainError("m >= 1 required")
    return Fraction((-1) ** m * math.factorial(m)) * (2 * truncated_exp_ln2(m) - 1)


# ---------------------------------------------------------------------------
# quadrature oracle
# ---------------------------------------------------------------------------


def lognm_numeric(kind: LogIntegralKind, tol: float = 1e-11) -> float:
    n, m = kind.n, kind.m
    if kind.tag == "INM":
        def ev(x: float, omx: float) -> float:
            return math.log(x) ** n * log1m(x, omx) ** m
        cls = "log_singular_both"
    else:
        def ev(x: float, omx: float) -> float:
            return math.log(x) ** n * math.log1p(x) ** m
        cls = "log_singular_at_0"
    return integrate01(Integrand(ev, cls), tol).value


# ---------------------------------------------------------------------------
# the s <-> sigma~ linear network
# ---------------------------------------------------------------------------


def s_sigma_relation_residual(n: int, m: int) -> ClosedForm:
    """Residual of the reflection network tying s_{n,m} to weight n+m sigma~.

    (-1)^{n+m} s_{n,m} = sum_{k=1}^{n} (-1)^k C(n+m-1-k, m-1) sigma~_{k,n+m-k}
                       + sum_{k=1}^{m} (-1)^k C(n+m-1-k, n-1) sigma~_{k,n+m-k};
    returns the left side minus the right side.  Exactly zero whenever every
    needed sigma~ has a registered closed form (all weights <= 5); at weight
    6 the surviving atomic combination is itself a checkable relation.
    """
    if n < 1 or m < 1:
        raise DomainError("indices must be >= 1")
    w = n + m
    lhs = Fraction((-1) ** w) * kolbig_snp(n, m, max_weight=max(8, w))
    rhs = ClosedForm.zero()
    for k in range(1, n + 1):
        rhs = rhs + Fraction((-1) ** k * math.comb(w - 1 - k, m - 1)) * sigma_tilde(k, w - k)
    for k in range(1, m + 1):
        rhs = rhs + Fraction((-1) ** k * math.comb(w - 1 - k, n - 1)) * sigma_tilde(k, w - k)
    return lhs - rhs


def s_sigma_relation_matrix(weight: int):
    """Coefficient rows of the relation network at fixed weight.

    One row per unordered pair {n, m} with n + m = weight: coefficients over
    the unknowns sigma~_{k, weight-k} (k = 1..weight-1) and the exact
    right-hand side (-1)^weight s_{n,m}.
    """
    rows = []
    for n in range(1, weight // 2 + 1):
        m = weight - n
        coeffs = [Fraction(0)] * (weight - 1)
        for k in range(1, n + 1):
            coeffs[k - 1] += Fraction((-1) ** k * math.comb(weight - 1 - k, m - 1))
        for k in range(1, m + 1):
            coeffs[k - 1] += Fraction((-1) ** k * math.comb(weight - 1 - k, n - 1))
        rhs = Fraction((-1) ** weight) * kolbig_snp(n, m, max_weight=max(8, weight))
        rows.append((coeffs, rhs))
    return rows


def _rank(rows: list[list[Fraction]]) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def sigma_weight6_count() -> tuple[int, int, int]:
    """(unknowns, relation rank, free atoms) for the weight-6 sigma~ block."""
    rows = [coeffs for coeffs, _ in s_sigma_relation_matrix(6)]
    rank = _rank(rows)
    unknowns = 5
    return unknowns, rank, unknowns - rank


def sigma_weight6_report():
    """Verify the weight-6 sigma~ relations numerically and count the
    remaining free constants; returns a VerificationReport."""
    from .verify import report_from_entries, sigma_weight6_entries
    return report_from_entries(sigma_weight6_entries())
