"""Definition-literal oracles used to freeze expected values.

Everything here works on frozensets of labels and scans the whole open
family, so no bitmask trick, minimal-basis shortcut, counting formula, or
candidate lemma from the package is shared.  Slow on purpose; meant for
spaces with a handful of points.
"""

from functools import reduce
from itertools import chain, combinations


def family_from_basis(labels, basis_sets):
    """All unions of minimal basis sets, as a set of frozensets."""
    opens = {frozenset()}
    for r in range(1, len(basis_sets) + 1):
        for combo in combinations(sorted(basis_sets, key=sorted), r):
            opens.add(frozenset(chain.from_iterable(combo)))
    return opens


def brute_min_open(family, x):
    return reduce(frozenset.__and__, (o for o in family if x in o))


def brute_closure(family, labels, a):
    return frozenset(
        x for x in labels if all(o & a for o in family if x in o)
    )


def brute_interior(family, a):
    return frozenset(
        x for x in a if any(x in o and o <= a for o in family)
    )


def brute_boundary(family, labels, a):
    return brute_closure(family, labels, a) - brute_interior(family, a)


def covers_of(family, o):
    """Strict open supersets of ``o`` with no open strictly between."""
    return [
        v
        for v in family
        if o < v and not any(o < w < v for w in family)
    ]


def saturated_chains(family, start):
    """Every maximal nested run of opens from ``start`` (they end at X)."""
    chains = []

    def grow(path):
        nxt = covers_of(family, path[-1])
        if not nxt:
            chains.append(list(path))
            return
        for v in nxt:
            grow(path + [v])

    grow([start])
    return chains


def brute_furtherness(family, x, y):
    """Least chain position at which y appears, minimized over all runs."""
    best = None
    for run in saturated_chains(family, brute_min_open(family, x)):
        for k, o in enumerate(run):
            if y in o:
                if best is None or k < best:
                    best = k
                break
    return best


def brute_point_to_set(family, x, target):
    if not target:
        return None
    return min(brute_furtherness(family, x, t) for t in target)


def brute_center_radius(family, a, target):
    """Returns (center frozenset, radius or None-for-infinite)."""
    if not a:
        return frozenset(), None
    if not target:
        return frozenset(a), None
    dist = {x: brute_point_to_set(family, x, target) for x in a}
    radius = max(dist.values())
    return frozenset(x for x in a if dist[x] == radius), radius
