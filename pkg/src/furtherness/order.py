"""Specialization order, quotients, maps, beat points, cores, and products.

A finite topology and a reflexive transitive relation are two views of the
same data: x <= y exactly when x belongs to the minimal open of y, so the
minimal basis read column-wise IS the relation.  Everything here leans on
that translation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .distance import furtherness
from .errors import EmptyInputError, PreconditionViolatedError, SpaceError
from .spaces import FinSpace, PointLike, mask_indices


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; ``below[y]`` masks {x | x <= y}."""

    labels: tuple[str, ...]
    below: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def leq(self, x: int, y: int) -> bool:
        return bool((self.below[y] >> x) & 1)

    @cached_property
    def is_antisymmetric(self) -> bool:
        return len(set(self.below)) == self.n

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction, as (lower, upper) pairs; needs antisymmetry."""
        if not self.is_antisymmetric:
            raise PreconditionViolatedError(
                "cover relation is only defined for a partial order"
            )
        out = []
        for y in range(self.n):
            strict = self.below[y] & ~(1 << y)
            for x in mask_indices(strict):
                blocked = False
                for z in mask_indices(strict & ~(1 << x)):
                    if (self.below[z] >> x) & 1:
                        blocked = True
                        break
                if not blocked:
                    out.append((x, y))
        return tuple(sorted(out))


def specialization_preorder(space: FinSpace) -> Preorder:
    """x <= y iff x lies in the minimal open of y iff y is 0-far from x."""
    return Preorder(space.labels, space.basis)


def order_to_space(order: Preorder) -> FinSpace:
    """Inverse translation; down-set masks are exactly a minimal basis."""
    return FinSpace(order.labels, order.below)


@dataclass(frozen=True)
class QuotientResult:
    """Identification of mutually 0-far points.

    ``class_of[x]`` is the class index of original point x and
    ``representatives[c]`` the first original point of class c; the quotient
    space carries one point per class, labeled by joining member labels
    with "|".
    """

    space: FinSpace
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]


def kolmogorov_quotient(space: FinSpace) -> QuotientResult:
    cls = space.class_ids
    k = max(cls) + 1
    reps = [-1] * k
    members: list[list[int]] = [[] for _ in range(k)]
    for x, c in enumerate(cls):
        if reps[c] < 0:
            reps[c] = x
        members[c].append(x)
    labels = tuple("|".join(space.labels[x] for x in ms) for ms in members)
    basis = []
    for c in range(k):
        m = 0
        for y in mask_indices(space.basis[reps[c]]):
            m |= 1 << cls[y]
        basis.append(m)
    return QuotientResult(FinSpace(labels, tuple(basis)), cls, tuple(reps))


@dataclass(frozen=True)
class SpaceMap:
    """A total map between spaces, by codomain index per domain point."""

    domain: FinSpace
    codomain: FinSpace
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.domain.n:
            raise SpaceError("map must assign an image to every domain point")
        for i in self.image:
            if not 0 <= i < self.codomain.n:
                raise SpaceError(f"image index {i} out of codomain range")

    def __call__(self, x: PointLike) -> int:
        return self.image[self.domain.index(x)]


def space_map(
    domain: FinSpace,
    codomain: FinSpace,
    mapping: Union[Mapping[str, str], Sequence[PointLike]],
) -> SpaceMap:
    if isinstance(mapping, Mapping):
        image = tuple(
            codomain.index(mapping[lab]) for lab in domain.labels
        )
    else:
        image = tuple(codomain.index(p) for p in mapping)
    return SpaceMap(domain, codomain, image)


def identity_map(space: FinSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.n)))


def is_continuous(f: SpaceMap) -> bool:
    """Zero-distance preservation: y in U_x forces f(y) in U_{f(x)}."""
    dom, cod, img = f.domain, f.codomain, f.image
    for x in range(dom.n):
        target = cod.basis[img[x]]
        for y in mask_indices(dom.basis[x]):
            if not (target >> img[y]) & 1:
                return False
    return True


def is_continuous_by_preimages(f: SpaceMap) -> bool:
    """Textbook continuity: the preimage of every open is open."""
    dom, cod, img = f.domain, f.codomain, f.image
    for o in cod.open_family:
        pre = 0
        for x in range(dom.n):
            if (o >> img[x]) & 1:
                pre |= 1 << x
        if not dom.is_open(pre):
            return False
    return True


def is_furtherness_preserving(f: SpaceMap) -> bool:
    """Distance equality on every ordered pair; implies continuity."""
    dom, cod, img = f.domain, f.codomain, f.image
    df = dom.further_flat
    cf = cod.further_flat
    for x in range(dom.n):
        for y in range(dom.n):
            if df[x * dom.n + y] != cf[img[x] * cod.n + img[y]]:
                return False
    return True


def beat_points(space: FinSpace) -> tuple[int, int]:
    """Masks (down, up) of beat points, via zero-furtherness relations.

    x beats downward when exactly one other point y is 0-far from x with no
    third point strictly between them in the 0-far relation; upward is the
    mirror image.  On a space with distinguishable points this says the set
    strictly below (above) x has a maximum (minimum).
    """
    n = space.n
    flat = space.further_flat
    down = 0
    up = 0
    for x in range(n):
        dcount = 0
        ucount = 0
        for y in range(n):
            if y == x:
                continue
            if flat[x * n + y] == 0:
                blocked = any(
                    z != x
                    and z != y
                    and flat[x * n + z] == 0
                    and flat[z * n + y] == 0
                    for z in range(n)
                )
                if not blocked:
                    dcount += 1
            if flat[y * n + x] == 0:
                blocked = any(
                    z != x
                    and z != y
                    and flat[y * n + z] == 0
                    and flat[z * n + x] == 0
                    for z in range(n)
                )
                if not blocked:
                    ucount += 1
        if dcount == 1:
            down |= 1 << x
        if ucount == 1:
            up |= 1 << x
    return down, up


def is_minimal(space: FinSpace) -> bool:
    """No identifications to make and no beat points to strip."""
    if not space.is_t0:
        return False
    down, up = beat_points(space)
    return not (down | up)


def core(space: FinSpace) -> FinSpace:
    """Kolmogorov quotient, then iterated beat-point removal.

    Removal order is fixed (lowest index first) so the output is a
    deterministic function of the input; the no-beat-point postcondition
    does not depend on the order.
    """
    out = kolmogorov_quotient(space).space
    while True:
        down, up = beat_points(out)
        beats = down | up
        if not beats:
            return out
        low = beats & -beats
        out = out.subspace(out.full & ~low)


def product(factors: Iterable[FinSpace]) -> FinSpace:
    """Product space; points are factor-index tuples in row-major order.

    The minimal open of a tuple is the product of the factor minimal opens;
    labels join the factor labels with a comma.
    """
    factors = list(factors)
    if not factors:
        raise EmptyInputError("factor list")
    sizes = [f.n for f in factors]

    def flat_index(tup: tuple[int, ...]) -> int:
        idx = 0
        for size, i in zip(sizes, tup):
            idx = idx * size + i
        return idx

    labels = []
    basis = []
    for tup in itertools.product(*(range(s) for s in sizes)):
        labels.append(",".join(f.labels[i] for f, i in zip(factors, tup)))
        m = 0
        for member in itertools.product(
            *(mask_indices(f.basis[i]) for f, i in zip(factors, tup))
        ):
            m |= 1 << flat_index(member)
        basis.append(m)
    return FinSpace(tuple(labels), tuple(basis))


def _class_open_size(space: FinSpace, point: int) -> int:
    """Number of indistinguishability classes inside the minimal open."""
    cls = space.class_ids
    return len({cls[y] for y in mask_indices(space.basis[point])})


def product_furtherness(
    space_x: FinSpace,
    space_y: FinSpace,
    p: tuple[PointLike, PointLike],
    q: tuple[PointLike, PointLike],
) -> int:
    """Distance between two points of a binary product, in closed form.

    Uses only the factor distances and the class counts of the target
    minimal opens, so the product space itself is never built.
    """
    a, b = p
    c, d = q
    fx = furtherness(space_x, a, c)
    fy = furtherness(space_y, b, d)
    size_c = _class_open_size(space_x, space_x.index(c))
    size_d = _class_open_size(space_y, space_y.index(d))
    return fx * size_d + fy * size_c - fx * fy


def product_furtherness_nfold(
    factors: Sequence[FinSpace],
    ps: Sequence[PointLike],
    qs: Sequence[PointLike],
) -> int:
    """Closed form for any number of factors.

    The distance is the difference between the product of the target class
    counts and the product of their per-factor leftovers; for two factors
    this reduces to :func:`product_furtherness`.
    """
    if not factors:
        raise EmptyInputError("factor list")
    whole = 1
    left = 1
    for f, a, c in zip(factors, ps, qs):
        size = _class_open_size(f, f.index(c))
        whole *= size
        left *= size - furtherness(f, a, c)
    return whole - left
