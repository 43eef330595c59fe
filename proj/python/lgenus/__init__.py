"""Exact 2-adic verification kernel for Hirzebruch index divisibility.

Thin wrapper over the C++ extension.  Exact rationals cross the boundary as
canonical "num/den" strings; the helpers here return fractions.Fraction.
"""

from fractions import Fraction

from . import _lgenus

__all__ = [
    "nu2",
    "kappa2",
    "nu2_factorial",
    "nu2_binomial",
    "nu2_power_pm",
    "bernoulli",
    "a_coefficients",
    "b_coefficients",
    "adams_t_polynomial",
    "revert",
    "qth_root",
    "c_value",
    "c_closed_form",
    "index_value",
    "congruence_margin",
    "p1",
    "divisibility_verdict",
    "solution_search",
]


def _as_str(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def nu2(q):
    """2-order of a rational (int, Fraction, or 'a/b' string); None at 0."""
    return _lgenus.nu2(_as_str(q))


def kappa2(n):
    return _lgenus.kappa2(str(n))


def nu2_factorial(n):
    return int(_lgenus.nu2_factorial(str(n)))


def nu2_binomial(n, k):
    return _lgenus.nu2_binomial(str(n), str(k))


def nu2_power_pm(n, i):
    return _lgenus.nu2_power_pm(str(n), i)


def bernoulli(n):
    return Fraction(_lgenus.bernoulli(n))


def a_coefficients(i_max):
    return [Fraction(s) for s in _lgenus.a_coefficients(i_max)]


def b_coefficients(i_max):
    return [Fraction(s) for s in _lgenus.b_coefficients(i_max)]


def adams_t_polynomial(j):
    return [int(s) for s in _lgenus.adams_t_polynomial(j)]


def revert(coeffs):
    return [Fraction(s) for s in _lgenus.revert([_as_str(c) for c in coeffs])]


def qth_root(coeffs, q, p=2):
    return [Fraction(s) for s in _lgenus.qth_root([_as_str(c) for c in coeffs], q, p)]


def c_value(k, js):
    return Fraction(_lgenus.c_value(k, list(js)))


def c_closed_form(s, k):
    return Fraction(_lgenus.c_closed_form(s, k))


def index_value(k, m):
    return Fraction(_lgenus.index_value(k, [_as_str(x) for x in m]))


def congruence_margin(k, m):
    return _lgenus.congruence_margin(k, [_as_str(x) for x in m])


def p1(k, m):
    return Fraction(_lgenus.p1(k, [_as_str(x) for x in m]))


def divisibility_verdict(k, m):
    report = _lgenus.divisibility_verdict(k, [_as_str(x) for x in m])
    report["m"] = [Fraction(s) for s in report["m"]]
    report["index"] = Fraction(report["index"])
    report["linear_term"] = Fraction(report["linear_term"])
    return report


def solution_search(k, box):
    result = _lgenus.solution_search(k, box)
    for sol in result["solutions"]:
        sol["m"] = [Fraction(s) for s in sol["m"]]
        sol["index"] = Fraction(sol["index"])
        sol["linear_term"] = Fraction(sol["linear_term"])
    return result
