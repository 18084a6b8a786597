"""Chain-search oracle for the furtherness distance.

This module recomputes furtherness straight from its definition: the value
for (x, y) is the least position at which y shows up in some nested run of
opens that starts at the minimal open of x and, at each step, jumps to an
open with nothing strictly between.  It shares no code with the fast
counting formula in ``distance`` beyond the space type itself, which is the
point: the two routes check each other.

The search walks the cover graph of the open-set lattice.  Every cover of
an open O has the form O | min_open(a) for some point a outside O, so the
candidate step set is small; candidates are then filtered by an explicit
no-open-in-between scan against the full family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .spaces import FinSpace, PointLike, canonical_sets


@lru_cache(maxsize=1 << 15)
def cover_successors(space: FinSpace, o: int) -> tuple[int, ...]:
    """Opens covering ``o``: strict supersets with nothing strictly between."""
    fam = space.open_family
    candidates = []
    seen = set()
    for a in range(space.n):
        if (o >> a) & 1:
            continue
        v = o | space.basis[a]
        if v != o and v not in seen:
            seen.add(v)
            candidates.append(v)
    out = []
    for v in candidates:
        between = False
        for w in fam:
            if w != o and w != v and not (o & ~w) and not (w & ~v):
                between = True
                break
        if not between:
            out.append(v)
    return canonical_sets(out)


@dataclass(frozen=True)
class ChainWitness:
    """A nested run of opens, each step a cover in the open-set lattice."""

    opens: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.opens) - 1

    def validate(self, space: FinSpace, x: PointLike) -> None:
        """Raise unless this is a genuine nested run starting at x's open."""
        if not self.opens:
            raise ValueError("empty chain")
        if self.opens[0] != space.min_open(x):
            raise ValueError("chain does not start at the minimal open of x")
        fam = space.open_family
        for o in self.opens:
            if o not in fam:
                raise ValueError("chain contains a non-open set")
        for o, v in zip(self.opens, self.opens[1:]):
            if not (o & ~v == 0 and o != v):
                raise ValueError("chain is not strictly increasing")
            for w in fam:
                if w != o and w != v and not (o & ~w) and not (w & ~v):
                    raise ValueError("chain step is not a cover")


def furtherness_oracle(space: FinSpace, x: PointLike, y: PointLike) -> tuple[int, ChainWitness]:
    """Least position at which y appears in a nested run around x.

    Breadth-first search over the cover graph, so the first open containing
    y is met at the minimal possible depth; the witness chain is recovered
    from parent pointers.
    """
    j = space.index(y)
    start = space.min_open(x)
    parent: dict[int, int | None] = {start: None}
    layer = [start]
    k = 0
    while layer:
        for o in layer:
            if (o >> j) & 1:
                chain = [o]
                at: int | None = o
                while parent[at] is not None:
                    at = parent[at]
                    chain.append(at)
                chain.reverse()
                return k, ChainWitness(tuple(chain))
        nxt = []
        for o in layer:
            for v in cover_successors(space, o):
                if v not in parent:
                    parent[v] = o
                    nxt.append(v)
        layer = nxt
        k += 1
    raise AssertionError("unreachable: the full set contains every point")


def union_witness(space: FinSpace, x: PointLike, y: PointLike) -> ChainWitness:
    """Shortest nested run from x's minimal open to min_open({x,y}).

    The target is the union of the two minimal opens; the returned chain
    ends at exactly that open (its length is checked against the oracle
    value by the test suite, not assumed here).
    """
    target = space.min_open(x) | space.min_open(y)
    start = space.min_open(x)
    parent: dict[int, int | None] = {start: None}
    layer = [start]
    while layer:
        for o in layer:
            if o == target:
                chain = [o]
                at: int | None = o
                while parent[at] is not None:
                    at = parent[at]
                    chain.append(at)
                chain.reverse()
                return ChainWitness(tuple(chain))
        nxt = []
        for o in layer:
            for v in cover_successors(space, o):
                # chains to the target stay inside it: covers only grow
                if v & ~target:
                    continue
                if v not in parent:
                    parent[v] = o
                    nxt.append(v)
        layer = nxt
    raise AssertionError("unreachable: the target is an open superset of the start")


def witness_chains(space: FinSpace, x: PointLike, y: PointLike) -> tuple[ChainWitness, ...]:
    """Every nested run of minimal length whose last open contains y.

    Enumerates all cover paths of length furtherness_oracle(x, y) from the
    minimal open of x and keeps those ending in an open containing y; no
    path is pruned, so callers can inspect the full witness set.
    """
    k, _ = furtherness_oracle(space, x, y)
    j = space.index(y)
    out: list[ChainWitness] = []
    chain = [space.min_open(x)]

    def rec():
        if len(chain) - 1 == k:
            if (chain[-1] >> j) & 1:
                out.append(ChainWitness(tuple(chain)))
            return
        for v in cover_successors(space, chain[-1]):
            chain.append(v)
            rec()
            chain.pop()

    rec()
    return tuple(out)
