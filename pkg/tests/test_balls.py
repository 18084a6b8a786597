import pytest

from furtherness import (
    FinSpace,
    ZeroRadiusError,
    ball,
    ball_topology,
    generated_topology,
    symmetrized_ball,
    symmetrized_furtherness,
    symmetrized_topology,
)


def test_radius_one_forward_is_min_open(e2):
    for x in e2.labels:
        assert ball(e2, x, 1) == e2.min_open(x)


def test_radius_one_backward_is_closure(e2):
    for x in range(e2.n):
        assert ball(e2, x, 1, backward=True) == e2.closure(1 << x)


def test_ball_growth(e2):
    assert ball(e2, "a", 1) == e2.mask("a")
    assert ball(e2, "a", 2) == e2.mask("abd")
    assert ball(e2, "a", 3) == e2.mask("abd")
    assert ball(e2, "a", 4) == e2.full


def test_radius_must_be_positive(e2):
    with pytest.raises(ZeroRadiusError):
        ball(e2, "a", 0)
    with pytest.raises(ZeroRadiusError):
        ball(e2, "a", -2)


def test_forward_topology_recovers_original(e1, e2, q1):
    for sp in (e1, e2, q1):
        assert ball_topology(sp) == sp.open_family


def test_backward_topology_is_opposite(e1, e2, q1):
    for sp in (e1, e2, q1):
        assert ball_topology(sp, backward=True) == sp.opposite().open_family


def test_generated_topology_closes_generators():
    fam = generated_topology(3, [0b011, 0b110])
    assert set(fam) == {0b000, 0b010, 0b011, 0b110, 0b111}


def test_symmetrized_values(e2):
    assert symmetrized_furtherness(e2, "a", "c") == 3
    assert symmetrized_furtherness(e2, "c", "a") == 3
    assert symmetrized_furtherness(e2, "a", "b") == 1


def test_symmetrized_ball_is_two_sided(e2):
    for x in range(e2.n):
        for r in range(1, e2.n + 1):
            want = ball(e2, x, r) & ball(e2, x, r, backward=True)
            assert symmetrized_ball(e2, x, r) == want


def test_symmetrized_topology_discrete_for_t0(e2):
    assert len(symmetrized_topology(e2)) == 1 << e2.n


def test_symmetrized_topology_partition(e1):
    # classes {1,2} and {3}: opens are unions of classes
    assert set(symmetrized_topology(e1)) == {0b000, 0b011, 0b100, 0b111}


def test_symmetrized_balls_of_radius_one_are_classes(e1):
    for x in range(e1.n):
        cls = sum(
            1 << y for y in range(e1.n) if e1.class_ids[y] == e1.class_ids[x]
        )
        assert symmetrized_ball(e1, x, 1) == cls


def test_indiscrete_pair_stays_connected():
    # both distances vanish, so the symmetrized topology stays indiscrete;
    # a proper clopen set only appears once points are distinguishable
    indis = FinSpace(("a", "b"), (0b11, 0b11))
    assert symmetrized_furtherness(indis, "a", "b") == 0
    assert set(symmetrized_topology(indis)) == {0b00, 0b11}


def test_two_class_space_splits(e1):
    fam = set(symmetrized_topology(e1))
    assert 0b011 in fam and 0b100 in fam  # complementary proper opens
