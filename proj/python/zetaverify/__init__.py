"""Exact Bernoulli/zeta(2m) computations and numerical identity checks.

Thin convenience layer over the C++ extension: fraction strings coming out
of the exact kernel are wrapped into fractions.Fraction.
"""

from fractions import Fraction

try:
    from . import _zetaverify as _core
except ImportError:  # uninstalled build tree: extension sits on PYTHONPATH
    import _zetaverify as _core

factorization_report = _core.factorization_report
lhs_corollary = _core.lhs_corollary
lhs_theorem = _core.lhs_theorem
rhs_corollary = _core.rhs_corollary
rhs_theorem = _core.rhs_theorem
s1_partial = _core.s1_partial
truncated_product = _core.truncated_product
verify = _core.verify
zero_point = _core.zero_point
zeta_even_partial_sum = _core.zeta_even_partial_sum
zeta_even_value = _core.zeta_even_value

__all__ = [
    "bernoulli",
    "binomial",
    "f_series_coeffs",
    "factorial",
    "factorization_report",
    "lhs_corollary",
    "lhs_theorem",
    "rhs_corollary",
    "rhs_theorem",
    "s1_partial",
    "truncated_product",
    "verify",
    "zero_point",
    "zeta_even_exact",
    "zeta_even_partial_sum",
    "zeta_even_value",
    "zeta_via_derivative_route",
]


def factorial(n: int) -> int:
    return int(_core.factorial(n))


def binomial(n: int, k: int) -> int:
    return int(_core.binomial(n, k))


def bernoulli(n: int, method: str = "recurrence") -> "list[Fraction]":
    """Exact B_0..B_n (B_1 = -1/2 convention)."""
    return [Fraction(s) for s in _core.bernoulli(n, method)]


def f_series_coeffs(order: int) -> "list[Fraction]":
    """Taylor coefficients of e^u/(e^u-1)^2 - 1/u^2 through u^order."""
    return [Fraction(s) for s in _core.f_series_coeffs(order)]


def zeta_even_exact(m: int) -> Fraction:
    """q with zeta(2m) = q * pi^(2m), exactly."""
    _, q = _core.zeta_even_exact(m)
    return Fraction(q)


def zeta_via_derivative_route(m: int) -> "tuple[int, Fraction]":
    """(m+1, q) for zeta(2(m+1)) recovered from series coefficients."""
    idx, q = _core.zeta_via_derivative_route(m)
    return idx, Fraction(q)
