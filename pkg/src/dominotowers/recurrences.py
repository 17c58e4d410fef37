"""Exact big-integer recurrences for the four tower families.

Families, all counted as fixed polyominoes made of n blocks of length k
(k=2 unless stated):

* g(b, n): supporting towers able to carry a base of b blocks; the top row
  has b-1 blocks and row lengths rise without gaps from the base length.
      g(b, n) = g(b, n-b+1) + (k-1) * g(b-1, n-b+1)
  with g(b, b-1) = 1 for b >= 2 and zero outside b >= 2, n >= max(1, b-1).

* h(b, n): stacks with base b (every column meets the base).
      h(b, n) = sum_{i=1..b} (k*(b-i) + 1) * h(i, n-b)
  with h(b, b) = 1 and zero outside n >= b >= 1.

* r(b, n): right-skewed towers with base b.
      r(b, n) = sum_{i=1..b} (k * r(i, n-b) + (k-1) * h(i, n-b))
  which is zero for n < b+1 and already yields r(b, b+1) = k-1 on its own
  (the k=2 value is 1: a single block overhanging the right end).

* c(b, n): convex towers whose widest row has b blocks (k=2 only), computed
  as the coefficient-level convolution
      c(b, n) = sum_m (g(b, m) + [m = 0]) * (2 r(b, n-m) + h(b, n-m)).
  This path is deliberately independent of the series module so the two can
  cross-check each other.

Values are filled iteratively (no deep recursion) into per-(family, k)
tables, so n in the thousands is fine.  All arithmetic is arbitrary
precision from the start.
"""

from __future__ import annotations

FAMILIES = ("g", "h", "r", "c")


class UnsupportedK(ValueError):
    """Block length below 2 has no tower interpretation here."""


class CountTable:
    """Dense memo table for one (family, k); grows monotonically on demand.

    Refills are deterministic and idempotent, so concurrent use only needs
    external serialization of the fills themselves.
    """

    def __init__(self, family: str, k: int = 2, h_table: "CountTable | None" = None):
        if family not in ("g", "h", "r"):
            raise ValueError(f"unknown family {family!r}")
        if k < 2:
            raise UnsupportedK(f"block length k={k} is not supported")
        self.family = family
        self.k = k
        self._h = h_table
        self._max_b = -1
        self._max_n = -1
        self._vals: list[list[int]] = []

    def value(self, b: int, n: int) -> int:
        if b < 1 or n < 1:
            return 0
        if self.family == "g" and (b < 2 or n < b - 1):
            return 0
        if self.family == "h" and n < b:
            return 0
        if self.family == "r" and n < b + 1:
            return 0
        self.ensure(b, n)
        return self._vals[b][n]

    def ensure(self, max_b: int, max_n: int) -> None:
        if max_b <= self._max_b and max_n <= self._max_n:
            return
        max_b = max(max_b, self._max_b)
        max_n = max(max_n, self._max_n)
        if self.family == "r":
            self._h.ensure(max_b, max_n)
        fill = getattr(self, f"_fill_{self.family}")
        self._vals = fill(max_b, max_n)
        self._max_b, self._max_n = max_b, max_n

    def _fill_g(self, max_b: int, max_n: int) -> list[list[int]]:
        vals = [[0] * (max_n + 1) for _ in range(max_b + 1)]
        for n in range(1, max_n + 1):
            for b in range(2, max_b + 1):
                if n < b - 1:
                    continue
                if n == b - 1:
                    vals[b][n] = 1
                else:
                    m = n - b + 1  # n >= b here, so m >= 1
                    vals[b][n] = vals[b][m] + (self.k - 1) * vals[b - 1][m]
        return vals

    def _fill_h(self, max_b: int, max_n: int) -> list[list[int]]:
        vals = [[0] * (max_n + 1) for _ in range(max_b + 1)]
        for n in range(1, max_n + 1):
            for b in range(1, min(n, max_b) + 1):
                if n == b:
                    vals[b][n] = 1
                else:
                    m = n - b
                    vals[b][n] = sum(
                        (self.k * (b - i) + 1) * vals[i][m]
                        for i in range(1, min(b, m) + 1)
                    )
        return vals

    def _fill_r(self, max_b: int, max_n: int) -> list[list[int]]:
        vals = [[0] * (max_n + 1) for _ in range(max_b + 1)]
        h = self._h
        for n in range(2, max_n + 1):
            for b in range(1, min(n - 1, max_b) + 1):
                m = n - b
                vals[b][n] = sum(
                    self.k * vals[i][m] + (self.k - 1) * h.value(i, m)
                    for i in range(1, min(b, m) + 1)
                )
        return vals


_tables: dict[tuple[str, int], CountTable] = {}


def _table(family: str, k: int) -> CountTable:
    if k < 2:
        raise UnsupportedK(f"block length k={k} is not supported")
    key = (family, k)
    if key not in _tables:
        if family == "r":
            _tables[key] = CountTable("r", k, h_table=_table("h", k))
        else:
            _tables[key] = CountTable(family, k)
    return _tables[key]


def g_k(b: int, n: int, k: int) -> int:
    """Supporting-tower count for block length k."""
    return _table("g", k).value(b, n)


def h_k(b: int, n: int, k: int) -> int:
    """Stack count for block length k."""
    return _table("h", k).value(b, n)


def r_k(b: int, n: int, k: int) -> int:
    """Right-skewed count for block length k."""
    return _table("r", k).value(b, n)


def g(b: int, n: int) -> int:
    return g_k(b, n, 2)


def h(b: int, n: int) -> int:
    return h_k(b, n, 2)


def r(b: int, n: int) -> int:
    return r_k(b, n, 2)


def c(b: int, n: int) -> int:
    """Convex-tower count via the convolution of g against 2r + h."""
    if b < 1 or n < 0:
        return 0
    total = 0
    for m in range(0, n + 1):
        left = g(b, m) + (1 if m == 0 else 0)
        if left:
            total += left * (2 * r(b, n - m) + h(b, n - m))
    return total


def family_value(family: str, b: int, n: int, k: int = 2) -> int:
    """Dispatch by family key; c only exists for k=2."""
    if family == "g":
        return g_k(b, n, k)
    if family == "h":
        return h_k(b, n, k)
    if family == "r":
        return r_k(b, n, k)
    if family == "c":
        if k != 2:
            raise UnsupportedK("the convex family is only defined for k=2")
        return c(b, n)
    raise ValueError(f"unknown family {family!r}")


def table(family: str, max_n: int, max_b: int, k: int = 2) -> list[list[int]]:
    """Rectangular extract: rows n = 1..max_n, columns b = 1..max_b."""
    if max_n < 1 or max_b < 1:
        raise ValueError("table bounds must be at least 1")
    if family in ("g", "h", "r"):
        _table(family, k).ensure(max_b, max_n)
    return [
        [family_value(family, b, n, k) for b in range(1, max_b + 1)]
        for n in range(1, max_n + 1)
    ]
