import json

import pytest

from furtherness import FinSpace, from_open_sets


@pytest.fixture
def e1():
    """Three points, opens {∅, {1,2}, X}; points 1 and 2 indistinguishable."""
    return from_open_sets(("1", "2", "3"), [0b000, 0b011, 0b111])


@pytest.fixture
def e2():
    """The four-point running example with matrix rows 0131/0021/0000/1230."""
    return from_open_sets(
        ("a", "b", "c", "d"),
        [0b0000, 0b0001, 0b1000, 0b0011, 0b1001, 0b1011, 0b1111],
    )


@pytest.fixture
def sierp():
    """Two points, {a} open, b generic."""
    return FinSpace(("a", "b"), (0b01, 0b11))


@pytest.fixture
def sierp_xy():
    """Sierpinski again with different labels, for product tests."""
    return FinSpace(("x", "y"), (0b01, 0b11))


@pytest.fixture
def q1():
    """Four points, the nine-open family with basis a:{a} b:{a,b} c:{c} d:{c,d}."""
    return FinSpace(("a", "b", "c", "d"), (0b0001, 0b0011, 0b0100, 0b1100))


@pytest.fixture
def space_file(tmp_path):
    """Write a space document to disk and hand back the path."""

    def write(space_or_doc, name="space.json"):
        path = tmp_path / name
        if isinstance(space_or_doc, FinSpace):
            from furtherness import serialize_space

            path.write_text(serialize_space(space_or_doc))
        else:
            path.write_text(json.dumps(space_or_doc))
        return str(path)

    return write
