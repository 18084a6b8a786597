import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from furtherness import (
    enumerate_topologies,
    furtherness,
    furtherness_matrix,
    furtherness_to_set,
    matrix_report,
    point_to_set,
    random_space,
)
from oracles import brute_furtherness, brute_point_to_set

E2_ROWS = ((0, 1, 3, 1), (0, 0, 2, 1), (0, 0, 0, 0), (1, 2, 3, 0))
E1_ROWS = ((0, 0, 1), (0, 0, 1), (0, 0, 0))


def test_matrix_e2(e2):
    assert furtherness_matrix(e2).rows == E2_ROWS


def test_matrix_e1(e1):
    assert furtherness_matrix(e1).rows == E1_ROWS


def test_single_values(e2):
    assert furtherness(e2, "a", "b") == 1
    assert furtherness(e2, "a", "c") == 3
    assert furtherness(e2, "d", "a") == 1
    assert furtherness(e2, "c", "a") == 0


def test_point_set_asymmetry(e2):
    # one direction can vanish while the other does not
    assert point_to_set(e2, "a", "bc") == 1
    assert furtherness_to_set(e2, "bc", "a") == 0


def test_set_to_set_empty_is_infinite(e2):
    assert furtherness_to_set(e2, "a", ()) == math.inf
    assert furtherness_to_set(e2, (), "a") == math.inf


def test_matrix_entry_row_col(e2):
    m = furtherness_matrix(e2)
    assert m.entry("a", "c") == 3
    assert m.row("d") == (1, 2, 3, 0)
    assert m.col("c") == (3, 2, 0, 3)


def test_row_dominates(e2):
    m = furtherness_matrix(e2)
    assert m.row_dominates("b", "a")
    assert not m.row_dominates("a", "b")
    assert m.row_dominates("c", "a")


def test_report_e2(e2):
    rep = matrix_report(e2)
    assert rep.t0
    assert rep.open_singletons == e2.mask("ad")
    assert rep.maximum_points == e2.mask("c")
    assert rep.minimum_points == 0
    assert rep.row_zeros == e2.basis
    assert rep.has_zero_row_or_col


def test_report_e1(e1):
    rep = matrix_report(e1)
    assert not rep.t0
    assert not rep.distinct_rows and not rep.distinct_cols


def test_matrix_str_contains_labels(e2):
    text = str(furtherness_matrix(e2))
    assert "a" in text and "0" in text


def test_matrix_equality(e2, e1):
    assert furtherness_matrix(e2) == furtherness_matrix(e2)
    assert furtherness_matrix(e2) != furtherness_matrix(e1)


def test_against_definition_small():
    # every space on up to three points, every ordered pair, straight from
    # the chain definition
    for sp in enumerate_topologies(3):
        fam = {frozenset(sp.members(o)) for o in sp.open_family}
        for x in sp.labels:
            for y in sp.labels:
                assert furtherness(sp, x, y) == brute_furtherness(fam, x, y)


def test_point_to_set_against_definition(q1):
    fam = {frozenset(q1.members(o)) for o in q1.open_family}
    for x in q1.labels:
        for mask in range(1, q1.full + 1):
            target = frozenset(q1.members(mask))
            assert point_to_set(q1, x, mask) == brute_point_to_set(fam, x, target)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_triangle_on_random_spaces(seed):
    sp = random_space(7, seed)
    n = sp.n
    flat = sp.further_flat
    for x in range(n):
        for y in range(n):
            for z in range(n):
                assert flat[x * n + y] <= flat[x * n + z] + flat[z * n + y]


def test_range_bound_rows(e2):
    for v in e2.further_flat:
        assert 0 <= v <= e2.n - 1


def test_unknown_label_raises(e2):
    with pytest.raises(Exception):
        furtherness(e2, "a", "nope")
