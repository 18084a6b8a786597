"""Centers, radii, and the union and quasi-center theory of subsets.

The center of a subset collects its points furthest from the boundary and
the radius is that furthest value, with infinity exactly for clopen sets
(no boundary to be far from).  The quasi variants measure against the
complement instead of the boundary.  ``union_analysis`` evaluates the
predicted center and radius of a separated union from the per-part data
and always carries the directly computed answer alongside, because the
prediction is a claim under test here, not a shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import _kernels as K
from .distance import Further
from .errors import EmptyOrFullSubsetError, PreconditionViolatedError
from .spaces import FinSpace, SetLike, mask_indices


@dataclass(frozen=True)
class RegionReport:
    """Center/radius of a subset against its own boundary (all masks)."""

    subset: int
    interior: int
    boundary: int
    center: int
    radius: Further


def region_report(space: FinSpace, subset: SetLike) -> RegionReport:
    a = space.mask(subset)
    interior = space.interior(a)
    boundary = space.closure(a) & ~interior
    center, r = K.center_radius(space.n, space.further_flat, a, boundary)
    return RegionReport(a, interior, boundary, center, math.inf if r < 0 else r)


@dataclass(frozen=True)
class QuasiReport:
    """Center/radius of a subset against its complement (all masks)."""

    subset: int
    quasi_center: int
    quasi_radius: Further


def quasi_report(space: FinSpace, subset: SetLike) -> QuasiReport:
    a = space.mask(subset)
    center, r = K.center_radius(space.n, space.further_flat, a, space.full & ~a)
    return QuasiReport(a, center, math.inf if r < 0 else r)


def are_separated(space: FinSpace, first: SetLike, second: SetLike) -> bool:
    """Neither set meets the closure of the other."""
    a = space.mask(first)
    b = space.mask(second)
    return not (a & space.closure(b)) and not (space.closure(a) & b)


@dataclass(frozen=True)
class UnionAnalysis:
    """Predicted versus direct center/radius of a separated union.

    ``tilde_sets[j]`` holds the centers of input j sitting closer to some
    other input's boundary than their own radius; those drop out of the
    union's center.  ``dominant`` indexes the inputs of maximal radius whose
    centers survive that pruning.  When any survivors exist the union's
    center is exactly their union (case ``*-dominates``); otherwise the
    union's radius drops strictly below the max (case ``*-collapses``) and
    only the direct computation answers.
    """

    inputs: tuple[int, ...]
    reports: tuple[RegionReport, ...]
    tilde_sets: tuple[int, ...]
    dominant: tuple[int, ...]
    case: str
    predicted_center: Optional[int]
    predicted_radius: Optional[Further]
    direct: RegionReport


def union_analysis(space: FinSpace, subsets: Sequence[SetLike]) -> UnionAnalysis:
    masks = [space.mask(s) for s in subsets]
    if not masks:
        raise PreconditionViolatedError("at least one subset is required")
    for j, a in enumerate(masks):
        if not a:
            raise PreconditionViolatedError(f"subset #{j} is empty")
        if space.is_open(a) and space.is_open(space.full & ~a):
            raise PreconditionViolatedError(
                f"subset #{j} {{{','.join(space.members(a))}}} is clopen"
            )
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not are_separated(space, masks[i], masks[j]):
                raise PreconditionViolatedError(
                    f"subsets #{i} and #{j} are not separated"
                )

    reports = [region_report(space, a) for a in masks]
    flat = space.further_flat
    n = space.n
    # radii are finite here: no input is clopen
    top = max(r.radius for r in reports)
    tilde = []
    for j, rep in enumerate(reports):
        t = 0
        for c in mask_indices(rep.center):
            for i, other in enumerate(reports):
                if i == j:
                    continue
                v = K.point_to_set(n, flat, c, other.boundary)
                if 0 <= v < rep.radius:
                    t |= 1 << c
                    break
        tilde.append(t)

    dominant = tuple(
        j
        for j, rep in enumerate(reports)
        if rep.radius == top and rep.center & ~tilde[j]
    )
    predicted = 0
    for j in dominant:
        predicted |= reports[j].center & ~tilde[j]

    two = len(masks) == 2
    radii_tie = two and reports[0].radius == reports[1].radius
    if predicted:
        if two:
            case = "tie-dominates" if radii_tie else "max-dominates"
        else:
            case = "dominant-union"
        predicted_center: Optional[int] = predicted
        predicted_radius: Optional[Further] = top
    else:
        if two:
            case = "tie-collapses" if radii_tie else "max-collapses"
        else:
            case = "direct-only"
        predicted_center = None
        predicted_radius = None

    union = 0
    for a in masks:
        union |= a
    direct = region_report(space, union)
    return UnionAnalysis(
        inputs=tuple(masks),
        reports=tuple(reports),
        tilde_sets=tuple(tilde),
        dominant=dominant,
        case=case,
        predicted_center=predicted_center,
        predicted_radius=predicted_radius,
        direct=direct,
    )


@dataclass(frozen=True)
class BallEntry:
    """One largest contained forward ball; ``contained`` marks nesting."""

    center: int
    radius: int
    ball: int
    contained: bool


def largest_forward_balls(space: FinSpace, subset: SetLike) -> tuple[BallEntry, ...]:
    """Largest forward balls inside a proper nonempty subset.

    A ball of radius r around x stays inside the subset exactly when r is at
    most the furtherness from x to the complement, so the maximal radius is
    the quasi-radius and the admissible centers are the quasi-center.  Balls
    strictly inside a sibling ball are flagged rather than dropped; radius
    maximality and inclusion maximality genuinely differ.
    """
    a = space.mask(subset)
    if not a or a == space.full:
        raise EmptyOrFullSubsetError()
    n = space.n
    flat = space.further_flat
    center, radius = K.center_radius(n, flat, a, space.full & ~a)
    balls = []
    for x in mask_indices(center):
        m = 0
        if radius > 0:
            for y in range(n):
                if flat[x * n + y] < radius:
                    m |= 1 << y
        balls.append((x, m))
    out = []
    for x, m in balls:
        nested = any(m != other and not (m & ~other) for _, other in balls)
        out.append(BallEntry(center=x, radius=radius, ball=m, contained=nested))
    return tuple(out)
