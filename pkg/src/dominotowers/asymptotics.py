"""Exact rational asymptotics for the convex family.

The convex series for base width b is rational with a unique smallest pole
at 1/2 of multiplicity one, so its coefficients grow like theta_b * 2^n.
The sub-exponential factor has the closed form

    theta_b = (1/2)^(b-1) * prod_{k=1..b-1} 2^k/(2^k - 1)
              * (1 + sum_{i=0..b-2} 1 / prod_{k=i+1..b-1} (2^k - 1))

and can be assembled independently from three pieces evaluated at 1/2: the
derivative of the denominator polynomial, the numerator of 2R + H, and the
numerator of G + 1.  Both routes must agree exactly; that identity is a
test target, not an assumption.

Everything here is computed in exact rationals; floats and decimal strings
appear only at the display boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import recurrences

#: The limiting product 3.4627... over 2^(b-1), rounded to three figures
#: as the coarse two-significant-digit estimate uses it.
ESTIMATE_CONSTANT = Fraction(346, 100)


class UnsupportedB(ValueError):
    """theta is defined here for b >= 2 only; b=1 is the plain 2^n - 1 family."""


def _check_b(b: int) -> None:
    if b < 2:
        raise UnsupportedB("asymptotic factor requires b >= 2")


def theta_exact(b: int) -> Fraction:
    """Exact sub-exponential factor theta_b."""
    _check_b(b)
    value = Fraction(1, 2 ** (b - 1))
    for k in range(1, b):
        value *= Fraction(2 ** k, 2 ** k - 1)
    tail = Fraction(1)
    for i in range(0, b - 1):
        prod = 1
        for k in range(i + 1, b):
            prod *= 2 ** k - 1
        tail += Fraction(1, prod)
    return value * tail


def denominator_derivative_at_half(b: int) -> Fraction:
    """Derivative of the denominator polynomial at 1/2; negative for all b."""
    _check_b(b)
    value = Fraction(-2) * Fraction(2 ** b - 1, 2 ** b)
    for k in range(1, b):
        value *= Fraction(2 ** k - 1, 2 ** k) ** 3
    return value


def numerator_hat_at_half(b: int) -> Fraction:
    """Numerator of the skew-plus-stack factor 2R + H, evaluated at 1/2."""
    if b < 1:
        raise ValueError("b must be at least 1")
    value = Fraction(1, 2 ** b)
    for k in range(2, b + 1):
        value *= Fraction(2 ** k - 1, 2 ** k)
    return value


def numerator_bar_at_half(b: int) -> Fraction:
    """Numerator of the supporting factor G + 1, evaluated at 1/2."""
    if b < 1:
        raise ValueError("b must be at least 1")
    num = 0
    for i in range(0, b):
        prod = 1
        for k in range(1, i + 1):
            prod *= 2 ** k - 1
        num += prod
    den = 1
    for k in range(1, b):
        den *= 2 ** k
    return Fraction(num, den)


def theta_from_parts(b: int) -> Fraction:
    """theta_b assembled as (-2) * hat * bar / derivative; equals theta_exact."""
    _check_b(b)
    return (
        Fraction(-2)
        * numerator_hat_at_half(b)
        * numerator_bar_at_half(b)
        / denominator_derivative_at_half(b)
    )


def approx_theta(b: int) -> Fraction:
    """Coarse estimate 3.46 * (1/2)^(b-1)."""
    _check_b(b)
    return ESTIMATE_CONSTANT * Fraction(1, 2 ** (b - 1))


def limit_constant_fraction(terms: int) -> Fraction:
    """Partial product prod_{k=1..terms} 2^k/(2^k - 1), increasing in terms."""
    if terms < 1:
        raise ValueError("terms must be at least 1")
    value = Fraction(1)
    for k in range(1, terms + 1):
        value *= Fraction(2 ** k, 2 ** k - 1)
    return value


def limit_constant(terms: int) -> float:
    return float(limit_constant_fraction(terms))


def decimal_digits(value: Fraction, count: int) -> str:
    """First ``count`` digits of the decimal expansion, integer part included."""
    if value < 0:
        raise ValueError("expected a non-negative value")
    if count < 1:
        raise ValueError("count must be at least 1")
    whole, rem = divmod(value.numerator, value.denominator)
    digits = str(whole)
    while len(digits) < count:
        rem *= 10
        d, rem = divmod(rem, value.denominator)
        digits += str(d)
    return digits[:count]


def limit_constant_digits(count: int) -> str:
    """Stable decimal digits of the limiting product.

    The tail beyond ``terms`` factors multiplies the partial product by at
    most 1 + 2^(2-terms), so digits where the lower and upper bounds agree
    are digits of the limit.
    """
    terms = max(64, 4 * count)
    while True:
        lo = limit_constant_fraction(terms)
        hi = lo * (1 + Fraction(1, 2 ** (terms - 2)))
        lo_digits = decimal_digits(lo, count)
        if lo_digits == decimal_digits(hi, count):
            return lo_digits
        terms *= 2


@dataclass(frozen=True)
class ConvergenceReport:
    """How far c(b, n) / 2^n has converged to theta_b, all exact."""

    b: int
    n: int
    ratio: Fraction
    theta: Fraction
    relative_error: Fraction
    estimate: Fraction
    estimate_error: Fraction


def convergence_report(b: int, n: int) -> ConvergenceReport:
    _check_b(b)
    if n < b:
        raise ValueError("n must be at least b")
    ratio = Fraction(recurrences.c(b, n), 2 ** n)
    theta = theta_exact(b)
    estimate = approx_theta(b)
    return ConvergenceReport(
        b=b,
        n=n,
        ratio=ratio,
        theta=theta,
        relative_error=abs(ratio - theta) / theta,
        estimate=estimate,
        estimate_error=abs(theta - estimate),
    )
