"""The furtherness distance and its matrix.

``furtherness(space, x, y)`` measures how far y is from x, asymmetrically:
it is the least position at which y can appear in a chain of opens that
starts at the minimal open of x and grows with no open strictly between
consecutive steps.  Equivalently it counts the indistinguishability classes
that the minimal open of y adds over the one of x.  The value is 0 exactly
when y lies in the minimal open of x, so rows of zeros in the matrix list
minimal opens and columns of zeros list point closures.

On a space where distinct points are topologically distinguishable this is
an asymmetric metric; in general only the separation axiom fails.  Set-level
variants take the minimum over the target (and source) set, with infinity
for an empty side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from . import _kernels as K
from .spaces import FinSpace, PointLike, SetLike, mask_indices

Further = Union[int, float]  # non-negative int, or math.inf


def furtherness(space: FinSpace, x: PointLike, y: PointLike) -> int:
    i = space.index(x)
    j = space.index(y)
    return space.further_flat[i * space.n + j]


def furtherness_to_set(space: FinSpace, source: SetLike, target: SetLike) -> Further:
    """min over the target (and over the source when it is a set).

    Either side empty gives infinity; there is nothing to be close to.
    """
    t = space.mask(target)
    s = space.mask(source)
    v = K.set_to_set(space.n, space.further_flat, s, t)
    return math.inf if v < 0 else v


def point_to_set(space: FinSpace, x: PointLike, target: SetLike) -> Further:
    t = space.mask(target)
    v = K.point_to_set(space.n, space.further_flat, space.index(x), t)
    return math.inf if v < 0 else v


@dataclass(frozen=True)
class MatrixReport:
    """Structural read-off of a furtherness matrix.

    All sets are masks over the matrix's point order.  ``row_zeros[x]`` is
    the set with furtherness 0 from x (the minimal open of x) and
    ``col_zeros[x]`` the set of points from which x has furtherness 0 (the
    closure of {x}).  A point is flagged maximum/minimum when its row/column
    vanishes entirely; on a distinguishable space those are the points above
    resp. below every other point.
    """

    labels: tuple[str, ...]
    row_zeros: tuple[int, ...]
    col_zeros: tuple[int, ...]
    open_singletons: int
    maximum_points: int
    minimum_points: int
    distinct_rows: bool
    distinct_cols: bool
    has_zero_row_or_col: bool

    @property
    def t0(self) -> bool:
        return self.distinct_rows


class FurtherMatrix:
    """Square table of pairwise furtherness values."""

    def __init__(self, labels: tuple[str, ...], flat: tuple[int, ...]):
        self.labels = tuple(labels)
        self.n = len(self.labels)
        if len(flat) != self.n * self.n:
            raise ValueError("flat matrix length must be n*n")
        self.flat = tuple(flat)

    @classmethod
    def of(cls, space: FinSpace) -> "FurtherMatrix":
        return cls(space.labels, space.further_flat)

    def index(self, point: PointLike) -> int:
        if isinstance(point, str):
            try:
                return self.labels.index(point)
            except ValueError:
                raise KeyError(point) from None
        return int(point)

    def entry(self, x: PointLike, y: PointLike) -> int:
        return self.flat[self.index(x) * self.n + self.index(y)]

    def row(self, x: PointLike) -> tuple[int, ...]:
        i = self.index(x) * self.n
        return self.flat[i : i + self.n]

    def col(self, y: PointLike) -> tuple[int, ...]:
        j = self.index(y)
        return self.flat[j :: self.n]

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(self.flat[i * n : (i + 1) * n] for i in range(n))

    def row_dominates(self, x: PointLike, y: PointLike) -> bool:
        """Entrywise row[x] <= row[y]; holds exactly when x is 0-far from y.

        Wherever x's row is zero, y's must then be zero too, so domination
        pins down the containment of minimal opens.
        """
        rx = self.row(x)
        ry = self.row(y)
        return all(a <= b for a, b in zip(rx, ry))

    def report(self) -> MatrixReport:
        n = self.n
        row_zeros = []
        col_zeros = []
        singles = 0
        maxima = 0
        minima = 0
        for x in range(n):
            rz = 0
            cz = 0
            for y in range(n):
                if self.flat[x * n + y] == 0:
                    rz |= 1 << y
                if self.flat[y * n + x] == 0:
                    cz |= 1 << y
            row_zeros.append(rz)
            col_zeros.append(cz)
            if rz == 1 << x:
                singles |= 1 << x
            if all(self.flat[x * n + y] == 0 for y in range(n)):
                maxima |= 1 << x
            if all(self.flat[y * n + x] == 0 for y in range(n)):
                minima |= 1 << x
        rows = self.rows
        cols = tuple(self.col(j) for j in range(n))
        return MatrixReport(
            labels=self.labels,
            row_zeros=tuple(row_zeros),
            col_zeros=tuple(col_zeros),
            open_singletons=singles,
            maximum_points=maxima,
            minimum_points=minima,
            distinct_rows=len(set(rows)) == n,
            distinct_cols=len(set(cols)) == n,
            has_zero_row_or_col=bool(maxima or minima),
        )

    def __eq__(self, other):
        return (
            isinstance(other, FurtherMatrix)
            and self.labels == other.labels
            and self.flat == other.flat
        )

    def __hash__(self):
        return hash((self.labels, self.flat))

    def __str__(self):
        w = max(len(lab) for lab in self.labels)
        w = max(w, max(len(str(v)) for v in self.flat))
        head = " " * (w + 2) + " ".join(lab.rjust(w) for lab in self.labels)
        lines = [head]
        for x, lab in enumerate(self.labels):
            row = " ".join(str(v).rjust(w) for v in self.row(x))
            lines.append(f"{lab.rjust(w)}  {row}")
        return "\n".join(lines)


def furtherness_matrix(space: FinSpace) -> FurtherMatrix:
    return FurtherMatrix.of(space)


def matrix_report(space_or_matrix) -> MatrixReport:
    if isinstance(space_or_matrix, FurtherMatrix):
        return space_or_matrix.report()
    return FurtherMatrix.of(space_or_matrix).report()
