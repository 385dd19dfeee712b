"""Partitions, skew diagrams, row index selections, and the parallelogram
condition that governs when every entry of the e-side matrix counts paths.

Partitions are 1-indexed through ``part(i)`` to match the usual convention
for parts; storage is a plain tuple.  Index selections live on {0, ..., n}
and always carry their complements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence


class ShapeError(ValueError):
    """Invalid partition, containment, or selection data."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative parts (zeros permitted)."""

    parts: tuple[int, ...]

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        t = tuple(parts)
        if any(p < 0 for p in t):
            raise ShapeError(f"negative part in {t}")
        if any(a < b for a, b in zip(t, t[1:])):
            raise ShapeError(f"not weakly decreasing: {t}")
        return cls(t)

    def part(self, i: int) -> int:
        """1-indexed part accessor."""
        return self.parts[i - 1]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


@dataclass(frozen=True)
class SkewShape:
    """Pair of length-n compositions alpha <= beta bounding a skew diagram.

    ``make_skew`` validates that both are partitions; ``from_compositions``
    skips the monotonicity check (the connector bijection works for any
    pointwise-dominated pair, so those tests need the relaxed constructor).
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    n: int

    @classmethod
    def from_compositions(
        cls, alpha: Sequence[int], beta: Sequence[int]
    ) -> "SkewShape":
        a = tuple(alpha)
        b = tuple(beta)
        if len(a) != len(b):
            raise ShapeError(f"length mismatch: {len(a)} vs {len(b)}")
        if not a:
            raise ShapeError("need at least one row")
        if any(x < 0 for x in a) or any(x < 0 for x in b):
            raise ShapeError("negative entries")
        for i, (x, y) in enumerate(zip(a, b), start=1):
            if x > y:
                raise ShapeError(f"containment violated at row {i}: {x} > {y}")
        return cls(alpha=a, beta=b, n=len(a))

    def alpha_part(self, i: int) -> int:
        """1-indexed; i = n+1 reads as row n (boundary interpretation)."""
        if i == self.n + 1:
            return self.alpha[self.n - 1]
        return self.alpha[i - 1]

    def beta_part(self, i: int) -> int:
        """1-indexed; i = 0 reads as row 1 (boundary interpretation)."""
        if i == 0:
            return self.beta[0]
        return self.beta[i - 1]

    def row_box_columns(self, i: int) -> range:
        """Columns j of the boxes in row i (1-indexed row)."""
        return range(self.alpha[i - 1] + 1, self.beta[i - 1] + 1)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes (row, column), rows 1..n."""
        for i in range(1, self.n + 1):
            for j in self.row_box_columns(i):
                yield (i, j)

    def box_count(self) -> int:
        return sum(b - a for a, b in zip(self.alpha, self.beta))

    def max_col(self) -> int:
        return max(self.beta)

    def is_partition_pair(self) -> bool:
        return all(a >= b for a, b in zip(self.alpha, self.alpha[1:])) and all(
            a >= b for a, b in zip(self.beta, self.beta[1:])
        )


def make_skew(alpha: Sequence[int], beta: Sequence[int]) -> SkewShape:
    """Validated skew shape from two weakly decreasing part lists."""
    a = Partition.of(alpha)
    b = Partition.of(beta)
    if len(a) != len(b):
        raise ShapeError(f"length mismatch: {len(a)} vs {len(b)}")
    return SkewShape.from_compositions(a.parts, b.parts)


@dataclass(frozen=True)
class IndexSelection:
    """Equal-size subsets A, B of {0, ..., n} with their complements."""

    n: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    a_comp: tuple[int, ...] = field(init=False)
    b_comp: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        full = range(self.n + 1)
        for name, s in (("A", self.a_set), ("B", self.b_set)):
            if any(x < 0 or x > self.n for x in s):
                raise ShapeError(f"{name} not a subset of 0..{self.n}: {s}")
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ShapeError(f"{name} must be strictly increasing: {s}")
        if len(self.a_set) != len(self.b_set):
            raise ShapeError(
                f"|A| = {len(self.a_set)} but |B| = {len(self.b_set)}"
            )
        a = set(self.a_set)
        b = set(self.b_set)
        object.__setattr__(
            self, "a_comp", tuple(x for x in full if x not in a)
        )
        object.__setattr__(
            self, "b_comp", tuple(x for x in full if x not in b)
        )

    @classmethod
    def make(
        cls, n: int, a_set: Sequence[int], b_set: Sequence[int]
    ) -> "IndexSelection":
        return cls(n=n, a_set=tuple(sorted(a_set)), b_set=tuple(sorted(b_set)))

    @property
    def l(self) -> int:
        return len(self.a_set)

    @property
    def r(self) -> int:
        return self.n + 1 - len(self.a_set)


class HypothesisCheck(NamedTuple):
    ok: bool
    violations: tuple[tuple[int, int], ...]


def parallelogram_clause(shape: SkewShape, a_p: int, b_p: int) -> bool:
    """Per-pair condition for the e-entry to count paths correctly.

    Holds when a' <= b', or when the degree outruns the variable range,
    or when the minimal parallelogram of boxes between the two rows fits
    inside the diagram.
    """
    if a_p - b_p <= 0:
        return True
    # now 1 <= b' + 1 <= a' <= n, so the part lookups stay in range
    if a_p - b_p > shape.beta_part(b_p + 1) - shape.alpha_part(a_p):
        return True
    for i in range(b_p + 1, a_p + 1):
        if shape.alpha_part(i) - shape.alpha_part(a_p) > a_p - i:
            return False
        if shape.beta_part(b_p + 1) - shape.beta_part(i) > i - b_p - 1:
            return False
    return True


def parallelogram_hypothesis(
    shape: SkewShape, sel: IndexSelection
) -> HypothesisCheck:
    """Check every (a', b') pair in A^c x B^c; report all violators."""
    violations = tuple(
        (a_p, b_p)
        for a_p in sel.a_comp
        for b_p in sel.b_comp
        if not parallelogram_clause(shape, a_p, b_p)
    )
    return HypothesisCheck(ok=not violations, violations=violations)


def near_staircase_check(p: Partition) -> bool:
    """True when each part is at most 1 less than the preceding part."""
    return all(a - b <= 1 for a, b in zip(p.parts, p.parts[1:]))


def line_runs(shape: SkewShape, t: int) -> list[tuple[int, int]]:
    """Maximal contiguous column intervals of horizontal line t.

    Line t collects the bottom sides of row-t boxes and the top sides of
    row-(t+1) boxes; the runs are the connected components a horizontal
    walk can move within.
    """
    iv = []
    for row in (t, t + 1):
        if 1 <= row <= shape.n and shape.alpha[row - 1] < shape.beta[row - 1]:
            iv.append((shape.alpha[row - 1], shape.beta[row - 1]))
    iv.sort()
    runs: list[tuple[int, int]] = []
    for lo, hi in iv:
        if runs and lo <= runs[-1][1]:
            runs[-1] = (runs[-1][0], max(runs[-1][1], hi))
        else:
            runs.append((lo, hi))
    return runs


def is_row_connected(shape: SkewShape) -> bool:
    """True when every horizontal line is a single run whose extreme
    columns are exactly the designated endpoint columns of that line.

    Degenerate diagrams (gaps inside a line, or designated endpoints away
    from its ends) break the per-pair path-count formulas: a same-row
    pair can have no horizontal route although its matrix entry is 1, and
    the complementary walk can strand short of its sink.  The determinant
    identity itself is unaffected.  For partition pairs the endpoint
    condition is automatic whenever the designated points lie on the run
    at all, so on partitions this is purely a connectivity predicate.
    """
    for t in range(shape.n + 1):
        left = shape.alpha_part(t + 1)
        right = shape.beta_part(t)
        runs = line_runs(shape, t)
        if not runs:
            if left != right:
                return False
        elif len(runs) > 1:
            return False
        else:
            lo, hi = runs[0]
            if left != lo or right != hi:
                return False
    return True


def staircase(n: int) -> SkewShape:
    """Staircase complement inside the n x n square: alpha_i = n - i."""
    if n < 1:
        raise ShapeError("staircase needs n >= 1")
    return make_skew([n - i for i in range(1, n + 1)], [n] * n)


def rectangle(m: int, n: int) -> SkewShape:
    """Full m-column, n-row rectangle: alpha = 0, beta = (m^n)."""
    if n < 1 or m < 1:
        raise ShapeError("rectangle needs m, n >= 1")
    return make_skew([0] * n, [m] * n)


def partitions_with(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing length-n tuples with parts in 0..max_part,
    in descending lexicographic order."""

    def rec(k: int, bound: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for p in range(bound, -1, -1):
            for rest in rec(k - 1, p):
                yield (p,) + rest

    yield from rec(n, max_part)


def skew_shapes(n: int, max_part: int) -> Iterator[SkewShape]:
    """All skew shapes with n rows and parts bounded by max_part."""
    all_parts = list(partitions_with(n, max_part))
    for beta in all_parts:
        for alpha in all_parts:
            if all(a <= b for a, b in zip(alpha, beta)):
                yield SkewShape.from_compositions(alpha, beta)


def selections(n: int) -> Iterator[IndexSelection]:
    """All equal-size selection pairs on {0, ..., n}, smallest size first."""
    universe = range(n + 1)
    for k in range(n + 2):
        for a in itertools.combinations(universe, k):
            for b in itertools.combinations(universe, k):
                yield IndexSelection(n=n, a_set=a, b_set=b)


def compositions_with(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """All length-n tuples with entries in 0..max_part (order-free parts)."""
    yield from itertools.product(range(max_part, -1, -1), repeat=n)


def composition_shapes(n: int, max_part: int) -> Iterator[SkewShape]:
    """All pointwise-dominated composition pairs, partitions included."""
    all_comps = list(compositions_with(n, max_part))
    for beta in all_comps:
        for alpha in all_comps:
            if all(a <= b for a, b in zip(alpha, beta)):
                yield SkewShape.from_compositions(alpha, beta)
