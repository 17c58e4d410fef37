"""Grid-level model of domino towers.

A domino occupies two horizontally adjacent unit cells.  A tower is a finite
set of dominoes in which the level-0 dominoes form one contiguous horizontal
run (the base) and every higher domino rests on the level below it: a block
with left cell (x, y) needs a block at horizontal offset -1, 0, or +1 on
level y-1, which is the same as asking that at least one of the cells
(x, y-1), (x+1, y-1) is occupied.

Shapes are fixed polyominoes: translations are identified by storing every
shape in canonical position (minimum cell x and minimum level both 0), while
rotations and reflections stay distinct.

Classification vocabulary:

* stack        - convex, and every occupied column reaches the base row.
* right-skewed - convex, and built bottom-up by repeatedly placing the next
                 row's right edge 0 or 1 cells further right, finishing with
                 a right-overhanging stack on top.  Equivalently, the mirror
                 image of a left-skewed tower.  Rectangles are excluded: at
                 least one column must lie right of the base.
* left-skewed  - mirror image of right-skewed.
* supporting   - the part of a convex tower strictly below its lowest widest
                 row.  Row lengths grow by 0 or 1 dominoes per level; rows of
                 equal length are exactly aligned, a one-longer row overhangs
                 one cell on each side (both placements are forced by the
                 support rule plus convexity of the surrounding tower).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True, order=True)
class Domino:
    """One block; occupies cells (x, y) and (x+1, y)."""

    x: int
    y: int

    @property
    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.x, self.y), (self.x + 1, self.y))


class TowerClass(Enum):
    STACK = "stack"
    RIGHT_SKEWED = "right-skewed"
    LEFT_SKEWED = "left-skewed"
    SUPPORTING = "supporting"
    CONVEX_OTHER = "convex-other"
    NON_CONVEX = "non-convex"


@dataclass(frozen=True)
class TowerShape:
    """A finite, canonically translated set of dominoes.

    Construction does not enforce tower validity; ``validate`` is the total
    predicate for that.  Identity, equality, and hashing use the sorted
    domino list, which for canonical shapes is one-to-one with the sorted
    cell list.
    """

    dominoes: tuple[Domino, ...]

    @classmethod
    def from_dominoes(cls, dominoes: Iterable[Domino]) -> "TowerShape":
        ds = set(dominoes)
        if not ds:
            raise ValueError("a tower shape needs at least one domino")
        min_x = min(d.x for d in ds)
        min_y = min(d.y for d in ds)
        shifted = sorted(Domino(d.x - min_x, d.y - min_y) for d in ds)
        return cls(tuple(shifted))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "TowerShape":
        return cls.from_dominoes(Domino(x, y) for x, y in pairs)

    @property
    def n(self) -> int:
        return len(self.dominoes)

    @cached_property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(c for d in self.dominoes for c in d.cells)

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        """Left cells of the dominoes on each level, bottom to top."""
        height = max(d.y for d in self.dominoes) + 1
        rows: list[list[int]] = [[] for _ in range(height)]
        for d in self.dominoes:
            rows[d.y].append(d.x)
        return tuple(tuple(sorted(row)) for row in rows)

    @property
    def height(self) -> int:
        return len(self.levels)

    @property
    def base_b(self) -> int:
        return len(self.levels[0])

    @property
    def max_row_b(self) -> int:
        return max(len(row) for row in self.levels)

    @property
    def top_row_b(self) -> int:
        return len(self.levels[-1])

    def row_span(self, level: int) -> tuple[int, int]:
        """Lowest and highest occupied cell x on a level (inclusive)."""
        row = self.levels[level]
        return (row[0], row[-1] + 1)

    def mirror(self) -> "TowerShape":
        """Reflection across a vertical axis, re-canonicalized."""
        return TowerShape.from_dominoes(
            Domino(-d.x - 1, d.y) for d in self.dominoes
        )

    def cell_list(self) -> list[tuple[int, int]]:
        return sorted(self.cells)

    def __str__(self) -> str:
        return " ".join(f"{x},{y}" for x, y in self.cell_list())


def offset_supported(left_cells_below: Iterable[int], domino: Domino) -> bool:
    """Support via the three-offset rule: a block at -1, 0, or +1 below."""
    below = set(left_cells_below)
    return any(domino.x + dx in below for dx in (-1, 0, 1))


def cell_supported(cells: Iterable[tuple[int, int]], domino: Domino) -> bool:
    """Support via occupancy of either cell directly underneath."""
    cs = set(cells)
    return (domino.x, domino.y - 1) in cs or (domino.x + 1, domino.y - 1) in cs


def validate(shape: TowerShape) -> bool:
    """Total predicate: contiguous base, no overlaps, every block supported."""
    # canonical position is guaranteed by construction, but cheap to confirm
    if min(c[0] for c in shape.cells) != 0 or min(d.y for d in shape.dominoes) != 0:
        return False
    for row in shape.levels:
        if not row:
            return False
        for a, b in zip(row, row[1:]):
            if b - a < 2:  # overlapping cells on one level
                return False
    base = shape.levels[0]
    if any(b - a != 2 for a, b in zip(base, base[1:])):
        return False
    for y in range(1, shape.height):
        below = shape.levels[y - 1]
        for x in shape.levels[y]:
            if not offset_supported(below, Domino(x, y)):
                return False
    return True


def is_convex(shape: TowerShape) -> bool:
    """Row convexity and column convexity of the occupied cells."""
    for row in shape.levels:
        if row[-1] - row[0] != 2 * (len(row) - 1):
            return False
    cols: dict[int, list[int]] = {}
    for x, y in shape.cells:
        cols.setdefault(x, []).append(y)
    for ys in cols.values():
        if max(ys) - min(ys) + 1 != len(ys):
            return False
    return True


def _spans(shape: TowerShape) -> list[tuple[int, int]]:
    return [shape.row_span(y) for y in range(shape.height)]


def _nested_above(spans: list[tuple[int, int]], start: int) -> bool:
    return all(
        spans[y + 1][0] >= spans[y][0] and spans[y + 1][1] <= spans[y][1]
        for y in range(start, len(spans) - 1)
    )


def is_stack(shape: TowerShape) -> bool:
    """Convex with every occupied column meeting the base row."""
    if not is_convex(shape):
        return False
    spans = _spans(shape)
    lo, hi = spans[0]
    return all(a >= lo and b <= hi for a, b in spans)


def _right_skew_from(spans: list[tuple[int, int]], lengths: list[int], y: int) -> bool:
    # Mirrors the recursive construction: above row y sits either a stack
    # whose base overhangs right by one cell, or another skewed tower whose
    # base's right edge advances by 0 or 1.  The sub-base is never wider.
    if len(spans) - y < 2:
        return False
    if lengths[y + 1] > lengths[y]:
        return False
    step = spans[y + 1][1] - spans[y][1]
    if step == 1 and _nested_above(spans, y + 1):
        return True
    return step in (0, 1) and _right_skew_from(spans, lengths, y + 1)


def is_right_skewed(shape: TowerShape) -> bool:
    if not is_convex(shape):
        return False
    lengths = [len(row) for row in shape.levels]
    return _right_skew_from(_spans(shape), lengths, 0)


def is_left_skewed(shape: TowerShape) -> bool:
    return is_right_skewed(shape.mirror())


def is_supporting(shape: TowerShape) -> bool:
    """Shape that can sit under a convex tower whose widest row is one longer.

    Row lengths never decrease and grow by at most one per level; rows of
    equal length share a span and a one-longer row overhangs by exactly one
    cell on each side.  Any other placement of an equal-length row breaks
    convexity once the wider row above is added.
    """
    spans = _spans(shape)
    for row, (lo, hi) in zip(shape.levels, spans):
        if hi - lo + 1 != 2 * len(row):  # gapped row
            return False
    for y in range(shape.height - 1):
        step = len(shape.levels[y + 1]) - len(shape.levels[y])
        if step == 0:
            if spans[y + 1] != spans[y]:
                return False
        elif step == 1:
            if spans[y + 1] != (spans[y][0] - 1, spans[y][1] + 1):
                return False
        else:
            return False
    return True


def classify(shape: TowerShape) -> TowerClass:
    """Exclusive label; precedence handles the overlaps.

    A rectangle is a stack, never skewed.  Supporting shapes that are also
    stacks (all rows equal) or would be caught earlier keep the earlier
    label; ``is_supporting`` stays available as a standalone predicate.
    """
    if not is_convex(shape):
        return TowerClass.NON_CONVEX
    if is_stack(shape):
        return TowerClass.STACK
    if is_right_skewed(shape):
        return TowerClass.RIGHT_SKEWED
    if is_left_skewed(shape):
        return TowerClass.LEFT_SKEWED
    if is_supporting(shape):
        return TowerClass.SUPPORTING
    return TowerClass.CONVEX_OTHER


@dataclass(frozen=True)
class Dissection:
    """Split of a convex tower at its lowest row of maximum length.

    ``lower`` is None exactly when the widest row is the base itself.  Both
    parts are canonical shapes; ``recombine`` restores the original because
    the wider upper base has a single legal position on the lower part's top
    row (one cell of overhang on each side).
    """

    lower: TowerShape | None
    upper: TowerShape
    split_level: int


def dissect(shape: TowerShape) -> Dissection:
    if not validate(shape):
        raise ValueError("dissect requires a valid tower")
    if not is_convex(shape):
        raise ValueError("dissect requires a convex tower")
    widest = shape.max_row_b
    level = next(
        y for y, row in enumerate(shape.levels) if len(row) == widest
    )
    upper = TowerShape.from_dominoes(
        d for d in shape.dominoes if d.y >= level
    )
    if level == 0:
        return Dissection(None, upper, 0)
    lower = TowerShape.from_dominoes(d for d in shape.dominoes if d.y < level)
    return Dissection(lower, upper, level)


def recombine(dissection: Dissection) -> TowerShape:
    lower = dissection.lower
    upper = dissection.upper
    if lower is None:
        return upper
    top_lo, _ = lower.row_span(lower.height - 1)
    dx = (top_lo - 1) - upper.row_span(0)[0]
    dy = lower.height
    combined = list(lower.dominoes)
    combined.extend(Domino(d.x + dx, d.y + dy) for d in upper.dominoes)
    return TowerShape.from_dominoes(combined)
