import math

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


# ---------------------------------------------------------------------------
# brute-force oracles, independent of the package's numeric machinery
# ---------------------------------------------------------------------------


def zeta_brute(s: int, terms: int = 4000) -> float:
    """zeta(s) by direct summation plus an Euler-Maclaurin tail."""
    head = math.fsum(k ** (-float(s)) for k in range(1, terms + 1))
    n = float(terms)
    tail = n ** (1 - s) / (s - 1) - 0.5 * n ** (-float(s)) + s / 12.0 * n ** (-s - 1.0)
    return head + tail


def eta_brute(s: int, pairs: int = 50000) -> float:
    """sum (-1)^{k-1} k^-s by paired summation plus the pair-tail estimate."""
    head = math.fsum((2 * j - 1) ** (-float(s)) - (2 * j) ** (-float(s))
                     for j in range(1, pairs + 1))
    # (2j-1)^-s - (2j)^-s ~ s 2^{-s-1} j^{-s-1} + ...; integrate the tail
    tail = 2.0 ** (-s - 1) * pairs ** (-float(s)) + s * 2.0 ** (-s) * pairs ** (-s - 1.0)
    return head + tail


def li_half_brute(k: int) -> float:
    return math.fsum(2.0 ** (-j) * j ** (-float(k)) for j in range(1, 80))


@pytest.fixture(scope="session")
def ctx():
    from polylog.sigma import default_context
    return default_context()
