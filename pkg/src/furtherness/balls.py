"""Balls of the furtherness semidistance and the topologies they induce.

Forward balls look outward from a point (who is within n-1 steps of me),
backward balls look inward (who reaches me within n-1 steps).  Radius-one
balls are the minimal open and the point closure, and the two ball families
regenerate the original topology and its opposite.  Taking the pointwise
maximum of the two directions gives a genuine pseudo-metric whose topology
is the join of the two.
"""

from __future__ import annotations

from .errors import ZeroRadiusError
from .spaces import FinSpace, OpenFamily, PointLike, canonical_sets


def ball(space: FinSpace, center: PointLike, radius: int, backward: bool = False) -> int:
    """Points with furtherness below ``radius`` from (or to) the center."""
    if not isinstance(radius, int) or radius < 1:
        raise ZeroRadiusError()
    x = space.index(center)
    n = space.n
    flat = space.further_flat
    out = 0
    for y in range(n):
        v = flat[y * n + x] if backward else flat[x * n + y]
        if v < radius:
            out |= 1 << y
    return out


def symmetrized_furtherness(space: FinSpace, x: PointLike, y: PointLike) -> int:
    """max of the two one-way values; symmetric and triangle-true."""
    i = space.index(x)
    j = space.index(y)
    flat = space.further_flat
    return max(flat[i * space.n + j], flat[j * space.n + i])


def symmetrized_ball(space: FinSpace, center: PointLike, radius: int) -> int:
    """Ball of the symmetrized distance; the two directed balls intersected."""
    if not isinstance(radius, int) or radius < 1:
        raise ZeroRadiusError()
    return ball(space, center, radius) & ball(space, center, radius, backward=True)


def generated_topology(n: int, generators) -> OpenFamily:
    """Close a set family under pairwise intersection and union.

    The empty and full sets are added up front; iterating both closures to a
    fixpoint resolves the basis-versus-subbasis question by brute force.
    """
    full = (1 << n) - 1
    fam = {0, full}
    fam.update(generators)
    while True:
        fresh = set()
        members = sorted(fam)
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                u = a | b
                if u not in fam:
                    fresh.add(u)
                v = a & b
                if v not in fam:
                    fresh.add(v)
        if not fresh:
            return OpenFamily(n, canonical_sets(fam))
        fam |= fresh


def ball_topology(space: FinSpace, backward: bool = False) -> OpenFamily:
    """Topology generated by all balls of one direction.

    Radii run 1..n only; balls stabilize once the radius clears the largest
    matrix entry.  Forward regenerates the space's own topology, backward
    the opposite one.
    """
    n = space.n
    gens = [
        ball(space, x, r, backward=backward)
        for x in range(n)
        for r in range(1, n + 1)
    ]
    return generated_topology(n, gens)


def symmetrized_topology(space: FinSpace) -> OpenFamily:
    """Topology of the symmetrized distance.

    Equals the smallest topology containing both the original opens and
    their complements; on a space with distinguishable points it is the full
    power set.
    """
    n = space.n
    gens = [
        symmetrized_ball(space, x, r) for x in range(n) for r in range(1, n + 1)
    ]
    return generated_topology(n, gens)
