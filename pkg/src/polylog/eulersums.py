"""Euler sums: S+, S-, the Jordan sums J1/J2, the Milgram sum M, and C.

Each closed form also exists as a direct accelerated summation of its
defining series (sum_oracle), and every identity relating the two
families of expressions is asserted at construction where it is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closedform import ClosedForm, LN2, zeta_closed
from .digamma import euler_gamma, psi
from .errors import DomainError
from .seriesring import DEFAULT_MAX_WEIGHT, kolbig_snp
from .summation import sum_alternating, sum_tail

_TAGS = ("SPlus", "SMinus", "Jordan1", "Jordan2", "Milgram", "CSum")


@dataclass(frozen=True)
class SumKind:
    tag: str
    order: int

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise DomainError(f"unknown sum tag {self.tag!r}")
        if self.order < 2:
            raise DomainError("sum order must be >= 2")


def _half_pow(r: int) -> Fraction:
    return Fraction(1, 2 ** r)


def s_plus(r: int) -> ClosedForm:
    """S+(r) = sum_k [psi(k+1)+gamma] / k^r, Euler's closed form."""
    if r < 2:
        raise DomainError("S+ requires order >= 2")
    out = Fraction(r + 2, 2) * zeta_closed(r + 1)
    for mu in range(1, r - 1):
        out = out - Fraction(1, 2) * zeta_closed(mu + 1) * zeta_closed(r - mu)
    return out


def c_sum(r: int, max_weight: int = DEFAULT_MAX_WEIGHT) -> ClosedForm:
    """C(r) = 2^{-r-1} S+(r); its Nielsen form is asserted equal when in reach."""
    if r < 2:
        raise DomainError("C requires order >= 2")
    direct = Fraction(1, 2 ** (r + 1)) * s_plus(r)
    if r + 1 <= max_weight:
        nielsen = Fraction(1, 2 ** (r + 1)) * (zeta_closed(r + 1) + kolbig_snp(r - 1, 2))
        if nielsen != direct:
            raise RuntimeError(f"C({r}) dual expressions disagree")
    return direct


def jordan_even(which: str, r: int) -> ClosedForm:
    """J1(2n) or J2(2n), closed, for even order r = 2n >= 2."""
    if which not in ("J1", "J2"):
        raise DomainError("which must be 'J1' or 'J2'")
    if r < 2 or r % 2:
        raise DomainError("even-order Jordan form needs even r >= 2; "
                          "odd orders go through jordan_nielsen")
    n = r // 2
    if which == "J1":
        out = Fraction(-1, 2) * (1 - Fraction(1, 2 ** (2 * n + 1))) * zeta_closed(2 * n + 1)
        out = out + ClosedForm.atom(LN2) \
            * (1 - Fraction(1, 2 ** (2 * n))) * zeta_closed(2 * n)
        for mu in range(1, n):
            out = out - Fraction(2 ** (2 * mu) - 1, 2 ** (2 * n + 1)) \
                * zeta_closed(2 * mu) * zeta_closed(2 * n + 1 - 2 * mu)
        return out
    out = Fraction(1, 2) * (1 - Fraction(1, 2 ** (2 * n + 1))) * zeta_closed(2 * n + 1)
    for mu in range(1, n):
        out = out - (Fraction(1, 2 ** (2 * mu)) - Fraction(1, 2 ** (2 * n + 1))) \
            * zeta_closed(2 * mu) * zeta_closed(2 * n + 1 - 2 * mu)
    return out


def milgram(r: int) -> ClosedForm:
    """M(r) closed; the simplified even/odd display must match the full sum."""
    if r < 2:
        raise DomainError("M requires order >= 2")
    head = Fraction(r, 2) * (1 - Fraction(1, 2 ** (r + 1))) * zeta_closed(r + 1) \
        - ClosedForm.atom(LN2) * (1 - Fraction(1, 2 ** r)) * zeta_closed(r)

    full = head
    for mu in range(0, r - 2):
        full = full - Fraction(mu + 1, 2 * (r - 1)) * Fraction(2 ** (mu + 2) - 1, 1) \
            * zeta_closed(mu + 2) * (Fraction(1, 2 ** (mu + 1)) - Fraction(1, 2 ** r)) \
            * zeta_closed(r - 1 - mu)

    simplified = head
    if r % 2 == 0:
        for mu in range(0, (r - 4) // 2 + 1):
            simplified = simplified - Fraction(2 ** (mu + 2) - 1, 2) \
                * zeta_closed(mu + 2) * (Fraction(1, 2 ** (mu + 1)) - Fraction(1, 2 ** r)) \
                * zeta_closed(r - 1 - mu)
    else:
        half = (r + 1) // 2
        if half >= 2:
            sq = (1 - Fraction(1, 2 ** half)) * zeta_closed(half)
            simplified = simplified - Fraction(1, 2) * sq * sq
        for mu in range(0, (r - 5) // 2 + 1):
            simplified = simplified - Fraction(2 ** (mu + 2) - 1, 2) \
                * zeta_closed(mu + 2) * (Fraction(1, 2 ** (mu + 1)) - Fraction(1, 2 ** r)) \
                * zeta_closed(r - 1 - mu)

    if simplified != full:
        raise RuntimeError(f"M({r}) simplified form disagrees with the full sum")
    return simplified


def jordan_nielsen(which: str, r: int,
                   max_weight: int = DEFAULT_MAX_WEIGHT + 1) -> ClosedForm:
    """J1(r) or J2(r) in Nielsen terms, valid for any order r >= 2.

    J1(r) = (s_{r-1,2} - sigma~_{r-1,2})/2 - M(r)
    J2(r) = ((1 - 2^-r) s_{r-1,2} + sigma~_{r-1,2})/2
    The sigma~ constant resolves to its registered closed form when one is
    known and stays atomic otherwise.  For even r the result must agree
    exactly with the classical even-order closed form.
    """
    if which not in ("J1", "J2"):
        raise DomainError("which must be 'J1' or 'J2'")
    if r < 2:
        raise DomainError("Jordan sums require order >= 2")
    from .sigma import sigma_tilde

    s = kolbig_snp(r - 1, 2, max_weight=max(max_weight, r + 1))
    sig = sigma_tilde(r - 1, 2)
    if which == "J1":
        out = Fraction(1, 2) * (s - sig) - milgram(r)
    else:
        out = Fraction(1, 2) * ((1 - _half_pow(r)) * s + sig)
    if r % 2 == 0 and not sig.sigma_atoms():
        even = jordan_even(which, r)
        if out != even:
            raise RuntimeError(f"{which}({r}) Nielsen and even-order forms disagree")
    return out


def s_minus_even_closed(r: int) -> ClosedForm:
    """S-(r) for even r via the even-order Jordan closed forms only.

    Uses S- = J2 - J1 + C - M - (1 - 2^{-r-1}) zeta(r+1); every piece is a
    zeta/ln2 polynomial, so this route never touches sigma~ constants.
    """
    if r < 2 or r % 2:
        raise DomainError("even order required")
    return (jordan_even("J2", r) - jordan_even("J1", r) + c_sum(r) - milgram(r)
            - (1 - Fraction(1, 2 ** (r + 1))) * zeta_closed(r + 1))


def s_minus(r: int, max_weight: int = DEFAULT_MAX_WEIGHT + 1) -> ClosedForm:
    """S-(r) = sum_k (-1)^k [psi(k+1)+gamma] / k^r.

    Computed both as (2^-r - 1) zeta(r+1) + sigma~_{r-1,2} and through the
    Jordan-sum decomposition; the two must agree exactly.  Fully closed
    whenever sigma~_{r-1,2} is registered (all even r, and r = 3).
    """
    if r < 2:
        raise DomainError("S- requires order >= 2")
    from .sigma import sigma_tilde

    direct = (_half_pow(r) - 1) * zeta_closed(r + 1) + sigma_tilde(r - 1, 2)
    decomposed = (jordan_nielsen("J2", r, max_weight) - jordan_nielsen("J1", r, max_weight)
                  + c_sum(r) - milgram(r)
                  - (1 - Fraction(1, 2 ** (r + 1))) * zeta_closed(r + 1))
    if direct != decomposed:
        raise RuntimeError(f"S-({r}) routes disagree")
    return direct


def sum_oracle(kind: SumKind, tol: float = 1e-11) -> float:
    """Direct accelerated summation of the defining series."""
    r = kind.order
    g = euler_gamma()
    if kind.tag == "SPlus":
        return sum_tail(lambda k: (psi(k + 1.0) + g) * k ** (-float(r)), tol, r)
    if kind.tag == "SMinus":
        return sum_alternating(
            lambda k: (-1) ** k * (psi(k + 1.0) + g) * float(k) ** (-float(r)), tol)
    if kind.tag == "Jordan1":
        # k = 0 term vanishes
        return sum_tail(lambda k: 0.5 * (psi(k + 0.5) - psi(0.5)) * (2 * k + 1.0) ** (-float(r)),
                        tol, r)
    if kind.tag == "Jordan2":
        return sum_tail(lambda k: 0.5 * (psi(k + 0.5) - psi(0.5)) * (2.0 * k) ** (-float(r)),
                        tol, r)
    if kind.tag == "Milgram":
        return sum_tail(lambda k: 0.5 * (psi(k + 1.0) + g) * (2 * k + 1.0) ** (-float(r)),
                        tol, r)
    return sum_tail(lambda k: 0.5 * (psi(k + 1.0) + g) * (2.0 * k) ** (-float(r)), tol, r)
