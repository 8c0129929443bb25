"""Exact closed forms and certified numerics for logarithmic and
polylogarithmic integrals and Euler sums.

The exact side lives in ClosedForm values (rational combinations of
constant monomials); the numeric side is an independent oracle built from
tanh-sinh quadrature, series acceleration, and the digamma function.
Every closed form the package produces is certified against that oracle
by the verification suites (``polylog verify``).
"""

from .approx import polylog_derivative_at_minus1, s_minus_truncated, stirling1
from .closedform import (Atom, ClosedForm, NumericContext, cf_add, cf_eval,
                         cf_mul, eta_factor_closed, zeta_closed)
from .digamma import euler_gamma, psi
from .errors import (CapacityError, ConvergenceError, DomainError,
                     EvaluationError, ShapeError)
from .eulersums import (SumKind, c_sum, jordan_even, jordan_nielsen, milgram,
                        s_minus, s_plus, sum_oracle)
from .ipq import (Family, IpqValue, ipq_final, ipq_numeric, ipq_series,
                  ipq_value, low_order_report, r_value, recurrence_shift)
from .lognm import (LogIntegralKind, h_closed, h_pde_residual, i_closed,
                    i_pde_residual, lognm_numeric, s_sigma_relation_residual,
                    sigma_weight6_count, sigma_weight6_report)
from .quadrature import Integrand, QuadratureResult, integrate01
from .seriesring import (BivariateSeries, beta_derivative_inm, bps_exp,
                         bps_mul, gamma_ratio_series, kolbig_snp)
from .sigma import build_context, cf_num, default_context, sigma_tilde
from .special import li_moment, mpl2, nielsen_num, polylog
from .summation import sum_alternating, sum_tail
from .verify import VerificationReport, run_suite

__all__ = [
    "Atom", "BivariateSeries", "CapacityError", "ClosedForm",
    "ConvergenceError", "DomainError", "EvaluationError", "Family",
    "Integrand", "IpqValue", "LogIntegralKind", "NumericContext",
    "QuadratureResult", "ShapeError", "SumKind", "VerificationReport",
    "beta_derivative_inm", "bps_exp", "bps_mul", "build_context", "c_sum",
    "cf_add", "cf_eval", "cf_mul", "cf_num", "default_context",
    "eta_factor_closed", "euler_gamma", "gamma_ratio_series", "h_closed",
    "h_pde_residual", "i_closed", "i_pde_residual", "integrate01",
    "ipq_final", "ipq_numeric", "ipq_series", "ipq_value", "jordan_even",
    "jordan_nielsen", "kolbig_snp", "li_moment", "lognm_numeric", "low_order_report", "milgram",
    "mpl2", "nielsen_num", "polylog", "polylog_derivative_at_minus1", "psi",
    "r_value", "recurrence_shift", "run_suite", "s_minus",
    "s_minus_truncated", "s_plus", "s_sigma_relation_residual",
    "sigma_tilde", "sigma_weight6_count", "sigma_weight6_report",
    "stirling1", "sum_alternating",
    "sum_oracle", "sum_tail", "zeta_closed",
]
