"""Truncated formal power series with exact integer coefficients.

Every generating function used here is a sum of products of geometric
factors x^a / (1 - lam*x^a) with lam in {1, 2}, so expansions never need
rational coefficients or polynomial division.  Arithmetic truncates to the
smaller operand order and never extends it silently.

Each family can be built two ways: from the closed form (sums over subsets
of {1..b-1}, enumerated by binary counter, practical up to b = 12) and from
the functional equation that the recurrence induces.  The functional path is
the production one; the closed forms exist to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

CLOSED_FORM = "closed_form"
FUNCTIONAL = "functional"
_METHODS = (CLOSED_FORM, FUNCTIONAL)

MAX_CLOSED_FORM_B = 12


class SubsetBlowup(ValueError):
    """Closed-form subset enumeration requested beyond the practical cutoff."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients 0..order of a formal power series."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def constant(cls, value: int, order: int) -> "TruncatedSeries":
        return cls((value,) + (0,) * order)

    @classmethod
    def from_coeffs(cls, coeffs, order: int) -> "TruncatedSeries":
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("truncation cannot extend the order")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, int):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        n = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: n + 1]
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * a for a in self.coeffs))
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__


def series_add(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 + s2


def series_mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    return s1 * s2


@dataclass(frozen=True)
class GeometricFactor:
    """x^a / (1 - lam*x^a), expanded as lam^(j-1) at x^(a*j)."""

    a: int
    lam: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError("exponent must be at least 1")
        if self.lam not in (1, 2):
            raise ValueError("scale must be 1 or 2")


def expand_geometric(factor: GeometricFactor, order: int) -> TruncatedSeries:
    coeffs = [0] * (order + 1)
    power = 1
    for idx in range(factor.a, order + 1, factor.a):
        coeffs[idx] = power
        power *= factor.lam
    return TruncatedSeries(tuple(coeffs))


def _geo(a: int, lam: int, order: int) -> TruncatedSeries:
    return expand_geometric(GeometricFactor(a, lam), order)


def build_G(b: int, order: int) -> TruncatedSeries:
    """Supporting-tower series: sum over i of prod_{j<=i} of x^(b-j)/(1-x^(b-j)).

    b=1 is the empty sum, the zero series.
    """
    if b < 1:
        raise ValueError("b must be at least 1")
    total = TruncatedSeries.zero(order)
    product = TruncatedSeries.constant(1, order)
    for j in range(1, b):
        product = product * _geo(b - j, 1, order)
        total = total + product
    return total


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}")


def _subsets(upper: int):
    """All subsets of {1..upper} as sorted tuples, by binary counter."""
    for mask in range(1 << upper):
        yield tuple(k for k in range(1, upper + 1) if mask >> (k - 1) & 1)


def _functional_H_list(b: int, order: int) -> list[TruncatedSeries]:
    hs: list[TruncatedSeries] = [TruncatedSeries.zero(order)]
    for i in range(1, b + 1):
        inner = TruncatedSeries.constant(1, order)
        for j in range(1, i):
            inner = inner + (2 * (i - j) + 1) * hs[j]
        hs.append(_geo(i, 1, order) * inner)
    return hs


def build_H(b: int, order: int, method: str = FUNCTIONAL) -> TruncatedSeries:
    """Stack series for base b."""
    if b < 1:
        raise ValueError("b must be at least 1")
    _check_method(method)
    if method == FUNCTIONAL:
        return _functional_H_list(b, order)[b]
    if b > MAX_CLOSED_FORM_B:
        raise SubsetBlowup(
            f"closed form enumerates 2^{b - 1} subsets; limit is b={MAX_CLOSED_FORM_B}"
        )
    total = TruncatedSeries.zero(order)
    for subset in _subsets(b - 1):
        ks = subset + (b,)
        term = TruncatedSeries.constant(1, order)
        for j in range(len(subset)):
            weight = 2 * (ks[j + 1] - ks[j]) + 1
            term = term * (weight * _geo(ks[j], 1, order))
        total = total + term
    return _geo(b, 1, order) * total


def build_R(b: int, order: int, method: str = FUNCTIONAL) -> TruncatedSeries:
    """Right-skewed series for base b.

    The closed form multiplies each stack series H_j by the subset sum over
    S of {j..b-1} of prod 2x^k/(1-2x^k); the summand index is read as j
    throughout, which is what the numbers require.
    """
    if b < 1:
        raise ValueError("b must be at least 1")
    _check_method(method)
    if method == FUNCTIONAL:
        hs = _functional_H_list(b, order)
        rs: list[TruncatedSeries] = [TruncatedSeries.zero(order)]
        for i in range(1, b + 1):
            inner = hs[i]
            for j in range(1, i):
                inner = inner + 2 * rs[j] + hs[j]
            rs.append(_geo(i, 2, order) * inner)
        return rs[b]
    if b > MAX_CLOSED_FORM_B:
        raise SubsetBlowup(
            f"closed form enumerates 2^{b - 1} subsets; limit is b={MAX_CLOSED_FORM_B}"
        )
    total = TruncatedSeries.zero(order)
    for j in range(1, b + 1):
        h_j = build_H(j, order, CLOSED_FORM)
        subset_sum = TruncatedSeries.zero(order)
        members = list(range(j, b))
        for mask in range(1 << len(members)):
            term = TruncatedSeries.constant(1, order)
            for pos, k in enumerate(members):
                if mask >> pos & 1:
                    term = term * (2 * _geo(k, 2, order))
            subset_sum = subset_sum + term
        total = total + h_j * subset_sum
    return _geo(b, 2, order) * total


def build_C(b: int, order: int) -> TruncatedSeries:
    """Convex-tower series: (G + 1) * (2R + H)."""
    if b < 1:
        raise ValueError("b must be at least 1")
    left = build_G(b, order) + 1
    right = 2 * build_R(b, order) + build_H(b, order)
    return left * right
