import math

import pytest

from furtherness import (
    EmptyOrFullSubsetError,
    FinSpace,
    PreconditionViolatedError,
    are_separated,
    ball,
    largest_forward_balls,
    quasi_report,
    region_report,
    union_analysis,
)


def test_region_e1_no_interior(e1):
    rep = region_report(e1, e1.mask(["2", "3"]))
    assert rep.interior == 0
    assert rep.boundary == e1.full
    assert rep.center == e1.mask(["2", "3"])
    assert rep.radius == 0


def test_region_e2_two_points(e2):
    rep = region_report(e2, e2.mask("ac"))
    assert rep.center == e2.mask("a")
    assert rep.radius == 1
    assert rep.boundary == e2.mask("bc")


def test_region_singleton_d(e2):
    rep = region_report(e2, e2.mask("d"))
    assert rep.boundary == e2.mask("c")
    assert rep.radius == 3


def test_clopen_radius_infinite(q1):
    rep = region_report(q1, q1.mask("ab"))
    assert rep.boundary == 0
    assert rep.center == q1.mask("ab")
    assert rep.radius == math.inf


def test_quasi_differs_from_region_on_clopen(q1):
    rep = quasi_report(q1, q1.mask("ab"))
    assert rep.quasi_center == q1.mask("ab")
    assert rep.quasi_radius == 1


def test_quasi_full_set_infinite(e2):
    assert quasi_report(e2, e2.full).quasi_radius == math.inf


def test_separated(e2):
    assert are_separated(e2, e2.mask("d"), e2.mask("b"))
    assert not are_separated(e2, e2.mask("b"), e2.mask("c"))
    assert not are_separated(e2, e2.mask("ab"), e2.mask("b"))


def test_union_collapse_case(e2):
    ana = union_analysis(e2, [e2.mask("d"), e2.mask("b")])
    assert ana.case == "max-collapses"
    assert ana.predicted_center is None
    assert ana.direct.radius == 2
    assert ana.direct.radius < max(rep.radius for rep in ana.reports)
    assert ana.tilde_sets == (e2.mask("d"), 0)


def test_union_tie_dominates(q1):
    ana = union_analysis(q1, [q1.mask("a"), q1.mask("c")])
    assert ana.case == "tie-dominates"
    assert ana.predicted_center == q1.mask("ac")
    assert ana.predicted_radius == 1
    assert ana.direct.center == ana.predicted_center
    assert ana.direct.radius == ana.predicted_radius


def test_union_single_subset_is_its_own_report(e2):
    ana = union_analysis(e2, [e2.mask("d")])
    rep = region_report(e2, e2.mask("d"))
    assert ana.predicted_center == rep.center
    assert ana.predicted_radius == rep.radius
    assert ana.direct == rep


def test_union_rejects_empty_part(e2):
    with pytest.raises(PreconditionViolatedError):
        union_analysis(e2, [0, e2.mask("b")])


def test_union_rejects_clopen_part(q1):
    with pytest.raises(PreconditionViolatedError):
        union_analysis(q1, [q1.mask("ab"), q1.mask("c")])


def test_union_rejects_non_separated(e2):
    with pytest.raises(PreconditionViolatedError):
        union_analysis(e2, [e2.mask("b"), e2.mask("c")])


def test_union_rejects_no_subsets(e2):
    with pytest.raises(PreconditionViolatedError):
        union_analysis(e2, [])


def test_largest_balls_q1(q1):
    entries = largest_forward_balls(q1, q1.mask("ab"))
    by_center = {q1.labels[e.center]: e for e in entries}
    assert set(by_center) == {"a", "b"}
    assert all(e.radius == 1 for e in entries)
    assert by_center["a"].ball == q1.mask("a")
    assert by_center["b"].ball == q1.mask("ab")
    assert by_center["a"].contained and not by_center["b"].contained


def test_largest_balls_match_ball_function(e2):
    for mask in range(1, e2.full):
        for entry in largest_forward_balls(e2, mask):
            if entry.radius >= 1:
                assert entry.ball == ball(e2, entry.center, entry.radius)
                assert not entry.ball & ~mask


def test_largest_balls_reject_trivial(e2):
    with pytest.raises(EmptyOrFullSubsetError):
        largest_forward_balls(e2, 0)
    with pytest.raises(EmptyOrFullSubsetError):
        largest_forward_balls(e2, e2.full)


def test_subspace_radius_can_drop_when_recomputed():
    # the ambient radius of {a} is 2, yet inside the subspace {a,c} the
    # recomputed distance to the same boundary point is 1: restricting a
    # space shortens chains, so radii measured wholly inside the subspace
    # may shrink, never the reverse for the ambient-distance version
    sp = FinSpace(("a", "b", "c"), (0b001, 0b010, 0b111))
    assert region_report(sp, 0b001).radius == 2
    sub = sp.subspace(0b101)
    assert region_report(sub, 0b01).radius == 1


def test_radius_zero_iff_no_interior(e1, e2, q1):
    for sp in (e1, e2, q1):
        for mask in range(1, sp.full + 1):
            rep = region_report(sp, mask)
            assert (rep.radius == 0) == (rep.interior == 0)
