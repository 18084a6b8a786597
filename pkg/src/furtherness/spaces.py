"""Finite topological spaces, represented by their minimal basis.

Every point x of a finite space has a smallest open set containing it (the
intersection of all opens containing x), and the topology is exactly the
family of unions of these basic sets.  A :class:`FinSpace` therefore stores
one bitmask per point.  Two invariants characterize valid bases:

* each point belongs to its own basic set, and
* whenever y belongs to the basic set of x, the basic set of y is contained
  in it.

Point sets are bitmasks over point indices throughout the core API; the
``mask`` / ``members`` helpers convert between masks and label collections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

from . import _kernels as K
from .errors import (
    BasisNotNestedError,
    DuplicateLabelError,
    EmptyInputError,
    MissingEmptyOrFullError,
    NotClosedUnderIntersectionError,
    NotClosedUnderUnionError,
    PointNotInOwnBasisError,
    SpaceError,
    UnknownLabelError,
)

PointLike = Union[int, str]
SetLike = Union[int, Iterable[PointLike]]


def mask_indices(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Sort point sets by cardinality, then by their sorted index lists."""
    return tuple(sorted(masks, key=lambda m: (m.bit_count(), tuple(mask_indices(m)))))


@dataclass(frozen=True)
class OpenFamily:
    """A topology given extensionally, in canonical order."""

    n: int
    opens: tuple[int, ...]

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.opens)

    def __contains__(self, mask: int) -> bool:
        return mask in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.opens)

    def __len__(self) -> int:
        return len(self.opens)


@dataclass(frozen=True)
class FinSpace:
    """A finite topological space with labeled points.

    ``basis[i]`` is the bitmask of the minimal open set of point i.  The
    constructor validates the basis invariants; use :func:`from_open_sets`
    to build a space from a full open family instead.
    """

    labels: tuple[str, ...]
    basis: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "basis", tuple(int(m) for m in self.basis))
        if not self.labels:
            raise EmptyInputError("point list")
        seen: set[str] = set()
        for lab in self.labels:
            if not isinstance(lab, str) or not lab:
                raise SpaceError(f"point labels must be nonempty strings, got {lab!r}")
            if lab in seen:
                raise DuplicateLabelError(lab)
            seen.add(lab)
        n = len(self.labels)
        if len(self.basis) != n:
            raise SpaceError("basis must assign one open set per point")
        full = (1 << n) - 1
        for x, m in enumerate(self.basis):
            if m & ~full:
                raise SpaceError(f"basic set of {self.labels[x]!r} is out of range")
            if not (m >> x) & 1:
                raise PointNotInOwnBasisError(self.labels[x])
        for x, m in enumerate(self.basis):
            for y in mask_indices(m):
                if self.basis[y] & ~m:
                    raise BasisNotNestedError(self.labels[x], self.labels[y])

    # -- size and coercion -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, point: PointLike) -> int:
        if isinstance(point, str):
            try:
                return self._label_index[point]
            except KeyError:
                raise UnknownLabelError(point) from None
        i = int(point)
        if not 0 <= i < self.n:
            raise SpaceError(f"point index {i} out of range")
        return i

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def mask(self, points: SetLike) -> int:
        """Coerce an int mask or an iterable of labels/indices to a mask."""
        if isinstance(points, int):
            if points & ~self.full:
                raise SpaceError(f"mask {points:#x} out of range for {self.n} points")
            return points
        out = 0
        for p in points:
            out |= 1 << self.index(p)
        return out

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in mask_indices(mask))

    # -- topology ----------------------------------------------------------

    def min_open(self, point: PointLike) -> int:
        return self.basis[self.index(point)]

    def minimal_open(self, points: SetLike) -> int:
        """Smallest open superset of a nonempty point set."""
        a = self.mask(points)
        if not a:
            raise EmptyInputError()
        return K.minimal_open_mask(self.n, self.basis, a)

    def is_open(self, points: SetLike) -> bool:
        a = self.mask(points)
        return K.minimal_open_mask(self.n, self.basis, a) == a

    @cached_property
    def open_family(self) -> OpenFamily:
        """Every open set, i.e. every union of basic sets."""
        seen = {0}
        queue = [0]
        for o in queue:
            for b in self.basis:
                v = o | b
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return OpenFamily(self.n, canonical_sets(seen))

    def closure(self, points: SetLike) -> int:
        return K.closure_mask(self.n, self.basis, self.mask(points))

    def interior(self, points: SetLike) -> int:
        return K.interior_mask(self.n, self.basis, self.mask(points))

    def boundary(self, points: SetLike) -> int:
        a = self.mask(points)
        return K.closure_mask(self.n, self.basis, a) & ~K.interior_mask(
            self.n, self.basis, a
        )

    @cached_property
    def is_t0(self) -> bool:
        """Whether distinct points always have distinct minimal opens."""
        return len(set(self.basis)) == self.n

    def opposite(self) -> "FinSpace":
        """Same points, opens and closed sets exchanged.

        The minimal open of x in the opposite space is the closure of {x}
        here.
        """
        basis = tuple(
            K.closure_mask(self.n, self.basis, 1 << x) for x in range(self.n)
        )
        return FinSpace(self.labels, basis)

    def subspace(self, points: SetLike) -> "FinSpace":
        """Restriction to a nonempty point set, labels kept."""
        a = self.mask(points)
        if not a:
            raise EmptyInputError("subspace carrier")
        kept = list(mask_indices(a))
        pos = {x: k for k, x in enumerate(kept)}
        labels = tuple(self.labels[x] for x in kept)
        basis = []
        for x in kept:
            m = self.basis[x] & a
            basis.append(sum(1 << pos[y] for y in mask_indices(m)))
        return FinSpace(labels, tuple(basis))

    # -- kernel products shared by the other modules ------------------------

    @cached_property
    def further_flat(self) -> tuple[int, ...]:
        """Row-major distance matrix as a flat tuple (see ``distance``)."""
        return K.further_matrix(self.n, self.basis)

    @cached_property
    def class_ids(self) -> tuple[int, ...]:
        """Indistinguishability class of each point, by first occurrence."""
        return K.class_ids(self.n, self.basis)

    def __repr__(self):
        sets = ",".join("{" + ",".join(self.members(m)) + "}" for m in self.basis)
        return f"FinSpace({','.join(self.labels)}; {sets})"


def _label_positions(labels: tuple[str, ...]) -> dict[str, int]:
    out: dict[str, int] = {}
    for i, lab in enumerate(labels):
        if lab in out:
            raise DuplicateLabelError(lab)
        out[lab] = i
    return out


def _coerce_mask(positions: dict[str, int], n: int, points: SetLike) -> int:
    if isinstance(points, int):
        if points & ~((1 << n) - 1):
            raise SpaceError(f"mask {points:#x} out of range for {n} points")
        return points
    out = 0
    for p in points:
        if isinstance(p, str):
            if p not in positions:
                raise UnknownLabelError(p)
            out |= 1 << positions[p]
        else:
            i = int(p)
            if not 0 <= i < n:
                raise SpaceError(f"point index {i} out of range")
            out |= 1 << i
    return out


def _render(labels: tuple[str, ...], mask: int) -> tuple[str, ...]:
    return tuple(labels[i] for i in mask_indices(mask))


def from_minimal_basis(labels: Iterable[str], basis: Iterable[SetLike]) -> FinSpace:
    """Build a space from per-point minimal opens (masks or label lists)."""
    labels = tuple(labels)
    positions = _label_positions(labels)
    masks = tuple(_coerce_mask(positions, len(labels), b) for b in basis)
    return FinSpace(labels, masks)


def from_open_sets(labels: Iterable[str], opens: Iterable[SetLike]) -> FinSpace:
    """Build a space from its full open family.

    The family must contain the empty and the full set and be closed under
    pairwise union and intersection; violations raise with a witness pair.
    The minimal basis is recovered by intersecting, for every point, all
    opens that contain it.
    """
    labels = tuple(labels)
    n = len(labels)
    if n == 0:
        raise EmptyInputError("point list")
    positions = _label_positions(labels)
    family = canonical_sets({_coerce_mask(positions, n, o) for o in opens})
    full = (1 << n) - 1
    if 0 not in family:
        raise MissingEmptyOrFullError("empty")
    if full not in family:
        raise MissingEmptyOrFullError("full")
    have = set(family)
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            if a | b not in have:
                raise NotClosedUnderUnionError(
                    (_render(labels, a), _render(labels, b))
                )
            if a & b not in have:
                raise NotClosedUnderIntersectionError(
                    (_render(labels, a), _render(labels, b))
                )
    basis = []
    for x in range(n):
        m = full
        for o in family:
            if (o >> x) & 1:
                m &= o
        basis.append(m)
    return FinSpace(labels, tuple(basis))
