"""Exhaustive and sampled verification of the package's theorems.

Every mathematical claim the library relies on is registered here as a
named property.  A property runner sweeps a corpus (all labeled topologies
up to a size cap, or seeded random spaces) and reports the first
counterexample as a replayable space document plus witness data.  The
command line exposes the registry via ``verify``; the acceptance test
suite drives the same runners.

Runners are deterministic: corpora are enumerated in a fixed order, random
sampling is seeded, and parallel sweeps merge results in enumeration order.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Optional

from . import balls as B
from . import distance as D
from . import order as O
from . import oracle as ORC
from . import regions as R
from .dot import export_dot
from .generate import (
    default_labels,
    enumerate_topologies,
    family_generated_bases,
    random_space,
)
from .serialization import parse_space, serialize_space, space_to_document
from .spaces import FinSpace, mask_indices


@dataclass
class VerifyOptions:
    max_n: int = 4
    samples: int = 1000
    sample_n: int = 6
    seed: int = 1
    jobs: int = 1


@dataclass
class VerifyReport:
    prop: str
    checked: int
    passed: bool
    counterexample: Optional[dict]
    seconds: float

    def to_json(self) -> dict:
        return {
            "prop": self.prop,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
        }


# name -> runner(opts) -> (checked, counterexample | None)
PROPERTIES: dict[str, Callable[[VerifyOptions], tuple[int, Optional[dict]]]] = {}
# per-space checks, kept importable for worker processes
_SPACE_CHECKS: dict[str, Callable[[FinSpace], Optional[dict]]] = {}


def run_property(name: str, opts: Optional[VerifyOptions] = None) -> VerifyReport:
    opts = opts or VerifyOptions()
    runner = PROPERTIES[name]
    t0 = time.perf_counter()
    checked, counter = runner(opts)
    return VerifyReport(name, checked, counter is None, counter, time.perf_counter() - t0)


def run_all(names=None, opts: Optional[VerifyOptions] = None) -> list[VerifyReport]:
    return [run_property(name, opts) for name in (names or PROPERTIES)]


def _set(space: FinSpace, mask: int) -> list[str]:
    return list(space.members(mask))


def _fail(space: FinSpace, **witness) -> dict:
    return {"space": space_to_document(space), **witness}


def _pool_task(args):
    name, n, basis = args
    return _SPACE_CHECKS[name](FinSpace(default_labels(n), basis))


def _sweep(name: str, max_n: int, jobs: int) -> tuple[int, Optional[dict]]:
    check = _SPACE_CHECKS[name]
    spaces = (
        sp for n in range(1, max_n + 1) for sp in enumerate_topologies(n)
    )
    checked = 0
    if jobs <= 1:
        for sp in spaces:
            checked += 1
            w = check(sp)
            if w is not None:
                return checked, w
        return checked, None
    tasks = ((name, sp.n, sp.basis) for sp in spaces)
    with Pool(jobs) as pool:
        # imap keeps enumeration order, so the first hit is deterministic
        for w in pool.imap(_pool_task, tasks, chunksize=64):
            checked += 1
            if w is not None:
                pool.terminate()
                return checked, w
    return checked, None


def space_property(name: str, cap: Optional[int] = None):
    """Register a per-space check swept over the enumerated corpus."""

    def deco(check: Callable[[FinSpace], Optional[dict]]):
        _SPACE_CHECKS[name] = check

        def runner(opts: VerifyOptions):
            limit = min(opts.max_n, cap) if cap else opts.max_n
            return _sweep(name, limit, opts.jobs)

        PROPERTIES[name] = runner
        return check

    return deco


def custom_property(name: str):
    def deco(runner: Callable[[VerifyOptions], tuple[int, Optional[dict]]]):
        PROPERTIES[name] = runner
        return runner

    return deco


def _subsets(space: FinSpace):
    return range(space.full + 1)


# ---------------------------------------------------------------------------
# space core


@space_property("family-closure")
def _family_closure(sp: FinSpace):
    """Open family contains empty and full and is closed under | and &."""
    fam = sp.open_family
    have = set(fam)
    if 0 not in have or sp.full not in have:
        return _fail(sp, missing="empty or full")
    for a in fam:
        for b in fam:
            if (a | b) not in have or (a & b) not in have:
                return _fail(sp, pair=[_set(sp, a), _set(sp, b)])
    return None


@space_property("open-membership")
def _open_membership(sp: FinSpace):
    """is_open, family membership, and minimal-open fixpoint all agree."""
    fam = set(sp.open_family)
    for s in _subsets(sp):
        in_fam = s in fam
        if sp.is_open(s) != in_fam:
            return _fail(sp, subset=_set(sp, s))
        if s and (sp.minimal_open(s) == s) != in_fam:
            return _fail(sp, subset=_set(sp, s))
        if s:
            mo = sp.minimal_open(s)
            smaller = [
                o for o in fam if not (s & ~o) and o.bit_count() < mo.bit_count()
            ]
            if not sp.is_open(mo) or (s & ~mo) or smaller:
                return _fail(sp, subset=_set(sp, s), minimal=_set(sp, mo))
    return None


@space_property("interior-closure-duality")
def _duality(sp: FinSpace):
    for s in _subsets(sp):
        rest = sp.full & ~s
        if sp.interior(s) != sp.full & ~sp.closure(rest):
            return _fail(sp, subset=_set(sp, s))
        if sp.closure(s) != sp.full & ~sp.interior(rest):
            return _fail(sp, subset=_set(sp, s))
    return None


@space_property("opposite-involution")
def _opposite_involution(sp: FinSpace):
    op = sp.opposite()
    if op.opposite() != sp:
        return _fail(sp)
    want = {sp.full & ~o for o in sp.open_family}
    if set(op.open_family) != want:
        return _fail(sp)
    return None


@space_property("reconstruction")
def _reconstruction(sp: FinSpace):
    from .spaces import from_open_sets

    rebuilt = from_open_sets(sp.labels, list(sp.open_family))
    if rebuilt != sp:
        return _fail(sp)
    return None


@space_property("t0-opposite")
def _t0_opposite(sp: FinSpace):
    if sp.is_t0 != sp.opposite().is_t0:
        return _fail(sp)
    return None


# ---------------------------------------------------------------------------
# distance and matrix


@space_property("zero-diagonal")
def _zero_diagonal(sp: FinSpace):
    for x in range(sp.n):
        if D.furtherness(sp, x, x) != 0:
            return _fail(sp, point=sp.labels[x])
    return None


@space_property("range-bound")
def _range_bound(sp: FinSpace):
    for v in sp.further_flat:
        if not 0 <= v <= sp.n - 1:
            return _fail(sp, value=v)
    return None


@space_property("triangle-inequality")
def _triangle(sp: FinSpace):
    n = sp.n
    flat = sp.further_flat
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if flat[x * n + y] > flat[x * n + z] + flat[z * n + y]:
                    return _fail(
                        sp, triple=[sp.labels[x], sp.labels[y], sp.labels[z]]
                    )
    return None


@space_property("zero-characterization")
def _zero_char(sp: FinSpace):
    """Zero distance, membership in the minimal open, and basis nesting agree."""
    n = sp.n
    flat = sp.further_flat
    for x in range(n):
        row_zero = 0
        for y in range(n):
            zero = flat[x * n + y] == 0
            member = bool((sp.basis[x] >> y) & 1)
            nested = not (sp.basis[y] & ~sp.basis[x])
            if zero != member or zero != nested:
                return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
            if zero:
                row_zero |= 1 << y
        if row_zero != sp.basis[x]:
            return _fail(sp, point=sp.labels[x])
        col_zero = 0
        for y in range(n):
            if flat[y * n + x] == 0:
                col_zero |= 1 << y
        if col_zero != sp.closure(1 << x):
            return _fail(sp, point=sp.labels[x])
    return None


@space_property("t0-criterion")
def _t0_criterion(sp: FinSpace):
    n = sp.n
    flat = sp.further_flat
    glued = any(
        flat[x * n + y] == 0 and flat[y * n + x] == 0
        for x in range(n)
        for y in range(n)
        if x != y
    )
    rep = D.matrix_report(sp)
    if sp.is_t0 != (not glued):
        return _fail(sp)
    if rep.distinct_rows != sp.is_t0 or rep.distinct_cols != sp.is_t0:
        return _fail(sp)
    return None


@space_property("oracle-equivalence")
def _oracle_equiv(sp: FinSpace):
    for x in range(sp.n):
        for y in range(sp.n):
            fast = D.furtherness(sp, x, y)
            slow, witness = ORC.furtherness_oracle(sp, x, y)
            if fast != slow or witness.length != slow:
                return _fail(
                    sp, pair=[sp.labels[x], sp.labels[y]], fast=fast, slow=slow
                )
            witness.validate(sp, x)
    return None


@space_property("chain-witness")
def _chain_witness(sp: FinSpace):
    """Minimal chains end exactly at the union of the two minimal opens."""
    for x in range(sp.n):
        for y in range(sp.n):
            k = D.furtherness(sp, x, y)
            target = sp.basis[x] | sp.basis[y]
            direct = ORC.union_witness(sp, x, y)
            direct.validate(sp, x)
            if direct.opens[-1] != target or direct.length != k:
                return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
            for chain in ORC.witness_chains(sp, x, y):
                chain.validate(sp, x)
                if chain.opens[-1] != target:
                    return _fail(
                        sp,
                        pair=[sp.labels[x], sp.labels[y]],
                        chain=[_set(sp, o) for o in chain.opens],
                    )
                if any((o >> y) & 1 for o in chain.opens[:-1]):
                    return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
    return None


@space_property("cover-single-step")
def _cover_single_step(sp: FinSpace):
    """Lemma-based cover candidates equal true covers; T0 covers add one point."""
    fam = list(sp.open_family)
    for o in fam:
        fast = set(ORC.cover_successors(sp, o))
        slow = set()
        for v in fam:
            if v == o or (o & ~v):
                continue
            if not any(w != o and w != v and not (o & ~w) and not (w & ~v) for w in fam):
                slow.add(v)
        if fast != slow:
            return _fail(sp, open=_set(sp, o))
        if sp.is_t0:
            for v in fast:
                if (v & ~o).bit_count() != 1:
                    return _fail(sp, open=_set(sp, o), cover=_set(sp, v))
    return None


@space_property("row-dominance")
def _row_dominance(sp: FinSpace):
    m = D.furtherness_matrix(sp)
    for x in range(sp.n):
        for y in range(sp.n):
            if m.row_dominates(x, y) != (D.furtherness(sp, x, y) == 0):
                return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
    return None


@space_property("zero-count-bound")
def _zero_count_bound(sp: FinSpace):
    n = sp.n
    flat = sp.further_flat
    zeros = [sum(1 for y in range(n) if flat[x * n + y] == 0) for x in range(n)]
    for x in range(n):
        for y in range(n):
            if flat[y * n + x] > zeros[x]:
                return _fail(sp, pair=[sp.labels[y], sp.labels[x]])
    if max(flat) > max(zeros):
        return _fail(sp)
    return None


@space_property("extreme-points")
def _extreme_points(sp: FinSpace):
    rep = D.matrix_report(sp)
    maxima = sum(1 << x for x in range(sp.n) if sp.basis[x] == sp.full)
    minima = sum(1 << x for x in range(sp.n) if sp.closure(1 << x) == sp.full)
    if rep.maximum_points != maxima or rep.minimum_points != minima:
        return _fail(sp)
    return None


@space_property("matrix-report-flags")
def _report_flags(sp: FinSpace):
    rep = D.matrix_report(sp)
    singles = sum(1 << x for x in range(sp.n) if sp.basis[x] == 1 << x)
    if rep.open_singletons != singles:
        return _fail(sp)
    if rep.t0 != sp.is_t0:
        return _fail(sp)
    if rep.has_zero_row_or_col != bool(rep.maximum_points or rep.minimum_points):
        return _fail(sp)
    if rep.row_zeros != sp.basis:
        return _fail(sp)
    if rep.col_zeros != tuple(sp.closure(1 << x) for x in range(sp.n)):
        return _fail(sp)
    return None


# ---------------------------------------------------------------------------
# order structure


@space_property("preorder-laws")
def _preorder_laws(sp: FinSpace):
    order = O.specialization_preorder(sp)
    n = sp.n
    for x in range(n):
        if not order.leq(x, x):
            return _fail(sp, point=sp.labels[x])
    for x in range(n):
        for y in range(n):
            if order.leq(x, y):
                for z in range(n):
                    if order.leq(z, x) and not order.leq(z, y):
                        return _fail(sp, triple=[sp.labels[z], sp.labels[x], sp.labels[y]])
    if order.is_antisymmetric != sp.is_t0:
        return _fail(sp)
    if O.order_to_space(order) != sp:
        return _fail(sp)
    return None


@space_property("quotient-preserves")
def _quotient_preserves(sp: FinSpace):
    q = O.kolmogorov_quotient(sp)
    if not q.space.is_t0:
        return _fail(sp)
    n = sp.n
    for x in range(n):
        for y in range(n):
            same = q.class_of[x] == q.class_of[y]
            both_zero = (
                D.furtherness(sp, x, y) == 0 and D.furtherness(sp, y, x) == 0
            )
            if same != both_zero:
                return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
            if D.furtherness(q.space, q.class_of[x], q.class_of[y]) != D.furtherness(
                sp, x, y
            ):
                return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
    again = O.kolmogorov_quotient(q.space)
    if again.space.n != q.space.n or again.space.basis != q.space.basis:
        return _fail(sp)
    return None


@space_property("minimal-rigidity")
def _minimal_rigidity(sp: FinSpace):
    """On minimal spaces, pointwise-zero continuous self-maps are the identity."""
    if not O.is_minimal(sp):
        return None
    n = sp.n
    flat = sp.further_flat
    for image in itertools.product(range(n), repeat=n):
        if any(flat[image[x] * n + x] != 0 for x in range(n)):
            continue
        f = O.SpaceMap(sp, sp, image)
        if not O.is_continuous(f):
            continue
        if image != tuple(range(n)):
            return _fail(sp, map=[sp.labels[i] for i in image])
    return None


@space_property("core-properties")
def _core_properties(sp: FinSpace):
    c = O.core(sp)
    if not O.is_minimal(c):
        return _fail(sp, core=serialize_space(c))
    return None


def _space_pairs(max_n: int):
    corpus = [
        sp for n in range(1, max_n + 1) for sp in enumerate_topologies(n)
    ]
    return corpus


@custom_property("continuity-agreement")
def _continuity_agreement(opts: VerifyOptions):
    corpus = _space_pairs(min(opts.max_n, 3))
    checked = 0
    for dom in corpus:
        for cod in corpus:
            for image in itertools.product(range(cod.n), repeat=dom.n):
                checked += 1
                f = O.SpaceMap(dom, cod, image)
                if O.is_continuous(f) != O.is_continuous_by_preimages(f):
                    return checked, {
                        "domain": space_to_document(dom),
                        "codomain": space_to_document(cod),
                        "map": list(image),
                    }
    return checked, None


@custom_property("preserving-implies-continuous")
def _preserving_continuous(opts: VerifyOptions):
    corpus = _space_pairs(min(opts.max_n, 3))
    checked = 0
    for dom in corpus:
        for cod in corpus:
            for image in itertools.product(range(cod.n), repeat=dom.n):
                checked += 1
                f = O.SpaceMap(dom, cod, image)
                if O.is_furtherness_preserving(f) and not O.is_continuous(f):
                    return checked, {
                        "domain": space_to_document(dom),
                        "codomain": space_to_document(cod),
                        "map": list(image),
                    }
    return checked, None


@custom_property("product-formula")
def _product_formula(opts: VerifyOptions):
    corpus = _space_pairs(min(opts.max_n, 3))
    checked = 0
    for left in corpus:
        for right in corpus:
            prod = O.product([left, right])
            checked += 1
            for ax in range(left.n):
                for ay in range(right.n):
                    for cx in range(left.n):
                        for cy in range(right.n):
                            got = O.product_furtherness(
                                left, right, (ax, ay), (cx, cy)
                            )
                            direct = D.furtherness(
                                prod, ax * right.n + ay, cx * right.n + cy
                            )
                            if got != direct:
                                return checked, {
                                    "left": space_to_document(left),
                                    "right": space_to_document(right),
                                    "pair": [[ax, ay], [cx, cy]],
                                    "formula": got,
                                    "direct": direct,
                                }
    return checked, None


@custom_property("product-nfold")
def _product_nfold(opts: VerifyOptions):
    twos = list(enumerate_topologies(2))
    checked = 0
    for fx, fy, fz in itertools.product(twos, repeat=3):
        factors = [fx, fy, fz]
        prod = O.product(factors)
        checked += 1
        for ps in itertools.product(range(2), repeat=3):
            for qs in itertools.product(range(2), repeat=3):
                flat_p = (ps[0] * 2 + ps[1]) * 2 + ps[2]
                flat_q = (qs[0] * 2 + qs[1]) * 2 + qs[2]
                direct = D.furtherness(prod, flat_p, flat_q)
                formula = O.product_furtherness_nfold(factors, ps, qs)
                if direct != formula:
                    return checked, {
                        "factors": [space_to_document(f) for f in factors],
                        "pair": [list(ps), list(qs)],
                    }
    return checked, None


# ---------------------------------------------------------------------------
# balls


@space_property("ball-radius-one")
def _ball_radius_one(sp: FinSpace):
    for x in range(sp.n):
        if B.ball(sp, x, 1) != sp.basis[x]:
            return _fail(sp, point=sp.labels[x])
        if B.ball(sp, x, 1, backward=True) != sp.closure(1 << x):
            return _fail(sp, point=sp.labels[x])
        if B.ball(sp, x, sp.n) != sp.full and max(sp.further_flat) < sp.n:
            return _fail(sp, point=sp.labels[x])
    return None


@space_property("forward-ball-topology")
def _forward_ball_topology(sp: FinSpace):
    if B.ball_topology(sp) != sp.open_family:
        return _fail(sp)
    return None


@space_property("backward-ball-topology")
def _backward_ball_topology(sp: FinSpace):
    if B.ball_topology(sp, backward=True) != sp.opposite().open_family:
        return _fail(sp)
    return None


@space_property("ball-basis")
def _ball_basis(sp: FinSpace):
    """Pairwise intersections of balls contain a ball around each member."""
    n = sp.n
    for backward in (False, True):
        per_point = [
            [B.ball(sp, x, r, backward=backward) for r in range(1, n + 1)]
            for x in range(n)
        ]
        family = {b for row in per_point for b in row}
        for b1 in family:
            for b2 in family:
                inter = b1 & b2
                for z in mask_indices(inter):
                    if not any(not (b3 & ~inter) for b3 in per_point[z]):
                        return _fail(sp, point=sp.labels[z], backward=backward)
    return None


@space_property("symmetrized-metric")
def _symmetrized_metric(sp: FinSpace):
    n = sp.n
    for x in range(n):
        if B.symmetrized_furtherness(sp, x, x) != 0:
            return _fail(sp, point=sp.labels[x])
        for y in range(n):
            sxy = B.symmetrized_furtherness(sp, x, y)
            if sxy != B.symmetrized_furtherness(sp, y, x):
                return _fail(sp, pair=[sp.labels[x], sp.labels[y]])
            for z in range(n):
                if sxy > B.symmetrized_furtherness(
                    sp, x, z
                ) + B.symmetrized_furtherness(sp, z, y):
                    return _fail(
                        sp, triple=[sp.labels[x], sp.labels[y], sp.labels[z]]
                    )
    return None


@space_property("symmetrized-discrete-t0")
def _symmetrized_discrete(sp: FinSpace):
    if sp.is_t0 and len(B.symmetrized_topology(sp)) != 1 << sp.n:
        return _fail(sp)
    return None


@space_property("symmetrized-smallest-join", cap=3)
def _symmetrized_join(sp: FinSpace):
    sym = set(B.symmetrized_topology(sp))
    both = set(sp.open_family) | set(sp.opposite().open_family)
    if not both <= sym:
        return _fail(sp)
    for other in enumerate_topologies(sp.n):
        fam = set(other.open_family)
        if both <= fam and not sym <= fam:
            return _fail(sp, topology=[_set(sp, o) for o in sorted(fam)])
    return None


@space_property("symmetrized-disconnected")
def _symmetrized_disconnected(sp: FinSpace):
    """With more than one indistinguishability class, a proper clopen exists.

    The bare |X| > 1 version is false (a two-point indiscrete space has an
    indiscrete symmetrized topology), so the hypothesis is the corrected
    one, which agrees with |X| > 1 on spaces with distinguishable points.
    """
    if max(sp.class_ids) == 0:
        return None
    fam = set(B.symmetrized_topology(sp))
    if not any(0 < c < sp.full and c in fam and (sp.full & ~c) in fam for c in fam):
        return _fail(sp)
    return None


# ---------------------------------------------------------------------------
# regions


@space_property("point-set-closure")
def _point_set_closure(sp: FinSpace):
    for s in _subsets(sp):
        cl = sp.closure(s)
        for x in range(sp.n):
            if D.point_to_set(sp, x, s) != D.point_to_set(sp, x, cl):
                return _fail(sp, point=sp.labels[x], subset=_set(sp, s))
    return None


@space_property("separation-obstruction")
def _separation_obstruction(sp: FinSpace):
    for a in range(1, sp.full + 1):
        for b in range(1, sp.full + 1):
            if D.furtherness_to_set(sp, a, b) == 0:
                if not (sp.minimal_open(a) & sp.minimal_open(b)):
                    return _fail(sp, pair=[_set(sp, a), _set(sp, b)])
    return None


@space_property("radius-zero-interior")
def _radius_zero(sp: FinSpace):
    for s in range(1, sp.full + 1):
        rep = R.region_report(sp, s)
        if (rep.radius == 0) != (rep.interior == 0):
            return _fail(sp, subset=_set(sp, s))
        if rep.interior == 0 and rep.center != s:
            return _fail(sp, subset=_set(sp, s))
    return None


@space_property("center-in-interior")
def _center_in_interior(sp: FinSpace):
    for s in range(1, sp.full + 1):
        rep = R.region_report(sp, s)
        if rep.interior:
            if rep.center & ~rep.interior:
                return _fail(sp, subset=_set(sp, s))
            if not rep.radius > 0:
                return _fail(sp, subset=_set(sp, s))
    return None


@space_property("radius-clopen")
def _radius_clopen(sp: FinSpace):
    for s in _subsets(sp):
        rep = R.region_report(sp, s)
        clopen = sp.is_open(s) and sp.is_open(sp.full & ~s)
        if (rep.radius == math.inf) != clopen:
            return _fail(sp, subset=_set(sp, s))
        if s and not rep.center:
            return _fail(sp, subset=_set(sp, s))
        if rep.center & ~s:
            return _fail(sp, subset=_set(sp, s))
    return None


@space_property("radius-monotone")
def _radius_monotone(sp: FinSpace):
    for s in _subsets(sp):
        rep = R.region_report(sp, s)
        if rep.radius > R.region_report(sp, rep.interior).radius:
            return _fail(sp, subset=_set(sp, s))
        if rep.radius > R.region_report(sp, sp.closure(s)).radius:
            return _fail(sp, subset=_set(sp, s))
    return None


@space_property("subspace-radius-monotone")
def _subspace_radius(sp: FinSpace):
    """Passing to a subspace shrinks distances and boundaries, so the radius
    against the subspace boundary, measured in the ambient distance, can only
    grow.  The naive version with the subspace's own recomputed distance is
    false; a three-point counterexample is pinned in the test suite.
    """
    for carrier in range(1, sp.full + 1):
        sub = sp.subspace(carrier)
        kept = list(mask_indices(carrier))
        for u, upos in ((x, p) for p, x in enumerate(kept)):
            for v, vpos in ((x, p) for p, x in enumerate(kept)):
                if D.furtherness(sub, upos, vpos) > D.furtherness(sp, u, v):
                    return _fail(sp, pair=[sp.labels[u], sp.labels[v]],
                                 carrier=_set(sp, carrier))
        for inner in range(1 << len(kept)):
            small = 0
            for pos, x in enumerate(kept):
                if (inner >> pos) & 1:
                    small |= 1 << x
            sub_rep = R.region_report(sub, inner)
            bd_in_x = 0
            for pos, x in enumerate(kept):
                if (sub_rep.boundary >> pos) & 1:
                    bd_in_x |= 1 << x
            if bd_in_x & ~R.region_report(sp, small).boundary:
                return _fail(sp, subset=_set(sp, small), carrier=_set(sp, carrier))
            if small == 0 or bd_in_x == 0:
                restricted: float = math.inf
            else:
                restricted = max(
                    D.point_to_set(sp, x, bd_in_x) for x in mask_indices(small)
                )
            if R.region_report(sp, small).radius > restricted:
                return _fail(sp, subset=_set(sp, small), carrier=_set(sp, carrier))
    return None


def _qualifying_pairs(sp: FinSpace):
    full = sp.full
    closures = [sp.closure(s) for s in range(full + 1)]
    clopen = [
        s for s in range(full + 1) if sp.is_open(s) and sp.is_open(full & ~s)
    ]
    clopen = set(clopen)
    for a in range(1, full):
        if a in clopen:
            continue
        for b in range(a + 1, full + 1):
            if b in clopen or (a & b):
                continue
            if (a & closures[b]) or (closures[a] & b):
                continue
            yield a, b


def _check_union(sp: FinSpace, parts: list[int]) -> Optional[dict]:
    """Check exactly what the union theorems claim for this arity.

    Pairs carry the full package: the max-radius bound, the prediction in
    dominate cases, strict decrease in collapse cases.  Larger families only
    claim the prediction when it is nonempty; their empty-prediction case
    makes no promise beyond the direct computation existing.
    """
    ana = R.union_analysis(sp, parts)
    top = max(rep.radius for rep in ana.reports)
    pair = len(parts) == 2
    if pair and ana.direct.radius > top:
        return _fail(sp, parts=[_set(sp, p) for p in parts], bound="exceeded")
    if ana.predicted_center is not None:
        if (
            ana.direct.center != ana.predicted_center
            or ana.direct.radius != ana.predicted_radius
        ):
            return _fail(
                sp,
                parts=[_set(sp, p) for p in parts],
                case=ana.case,
                predicted=_set(sp, ana.predicted_center),
                direct=_set(sp, ana.direct.center),
            )
    elif pair and not ana.direct.radius < top:
        return _fail(sp, parts=[_set(sp, p) for p in parts], case=ana.case)
    return None


@space_property("union-pairs")
def _union_pairs(sp: FinSpace):
    for a, b in _qualifying_pairs(sp):
        w = _check_union(sp, [a, b])
        if w is not None:
            return w
    return None


@custom_property("union-random")
def _union_random(opts: VerifyOptions):
    checked = 0
    for i in range(opts.samples):
        sp = random_space(opts.sample_n, opts.seed + i)
        taken = 0
        for a, b in _qualifying_pairs(sp):
            w = _check_union(sp, [a, b])
            checked += 1
            if w is not None:
                return checked, {**w, "seed": opts.seed + i}
            taken += 1
            if taken >= 10:
                break
    return checked, None


@custom_property("union-triples")
def _union_triples(opts: VerifyOptions):
    checked = 0
    for index, sp in enumerate(enumerate_topologies(5)):
        if index % 31:
            continue
        pairs = set(_qualifying_pairs(sp))
        members = sorted({s for pair in pairs for s in pair})
        found = 0
        for trio in itertools.combinations(members, 3):
            a, b, c = trio
            if (a, b) in pairs and (a, c) in pairs and (b, c) in pairs:
                w = _check_union(sp, list(trio))
                checked += 1
                if w is not None:
                    return checked, w
                found += 1
                if found >= 3:
                    break
    return checked, None


@space_property("quasi-ball-identity")
def _quasi_ball(sp: FinSpace):
    n = sp.n
    for s in range(1, sp.full):
        q = R.quasi_report(sp, s)
        for x in mask_indices(s):
            lim = D.point_to_set(sp, x, sp.full & ~s)
            for r in range(1, n + 1):
                inside = not (B.ball(sp, x, r) & ~s)
                if inside != (r <= lim):
                    return _fail(sp, subset=_set(sp, s), point=sp.labels[x], radius=r)
        entries = R.largest_forward_balls(sp, s)
        centers = 0
        for e in entries:
            centers |= 1 << e.center
            if e.radius != q.quasi_radius:
                return _fail(sp, subset=_set(sp, s))
            if e.radius >= 1 and (e.ball != B.ball(sp, e.center, e.radius)):
                return _fail(sp, subset=_set(sp, s))
            if e.ball & ~s:
                return _fail(sp, subset=_set(sp, s))
        if centers != q.quasi_center:
            return _fail(sp, subset=_set(sp, s))
    return None


# ---------------------------------------------------------------------------
# infrastructure


@custom_property("enumerator-counts")
def _enumerator_counts(opts: VerifyOptions):
    want_all = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}
    want_t0 = {1: 1, 2: 3, 3: 19, 4: 219}
    checked = 0
    for n in range(1, min(opts.max_n, 5) + 1):
        seen = set()
        count = 0
        for sp in enumerate_topologies(n):
            seen.add(sp.basis)
            count += 1
        checked += count
        if count != want_all[n] or len(seen) != count:
            return checked, {"n": n, "count": count}
        if n in want_t0:
            t0count = sum(1 for _ in enumerate_topologies(n, t0_only=True))
            if t0count != want_t0[n]:
                return checked, {"n": n, "t0_count": t0count}
        if n <= 4:
            cross = family_generated_bases(n)
            if cross != frozenset(s.basis for s in enumerate_topologies(n)):
                return checked, {"n": n, "generator": "family"}
            cross_t0 = family_generated_bases(n, t0_only=True)
            if cross_t0 != frozenset(
                s.basis for s in enumerate_topologies(n, t0_only=True)
            ):
                return checked, {"n": n, "generator": "family-t0"}
    return checked, None


@space_property("roundtrip-identity", cap=3)
def _roundtrip(sp: FinSpace):
    if parse_space(serialize_space(sp)) != sp:
        return _fail(sp)
    return None


@space_property("dot-stable", cap=3)
def _dot_stable(sp: FinSpace):
    for mode in ("hasse", "lattice"):
        first = export_dot(sp, mode)
        if export_dot(sp, mode) != first:
            return _fail(sp, mode=mode)
        if not first.startswith("digraph"):
            return _fail(sp, mode=mode)
    return None


@custom_property("random-valid")
def _random_valid(opts: VerifyOptions):
    checked = 0
    for i in range(opts.samples):
        sp = random_space(opts.sample_n, opts.seed + i)
        again = random_space(opts.sample_n, opts.seed + i)
        checked += 1
        if sp != again:
            return checked, {"seed": opts.seed + i, "reason": "not deterministic"}
        # FinSpace construction already validates the basis invariants
        if sp.n != opts.sample_n:
            return checked, {"seed": opts.seed + i}
    return checked, None
