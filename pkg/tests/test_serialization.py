import json

import pytest

from furtherness import (
    DocumentSyntaxError,
    NotClosedUnderUnionError,
    SchemaError,
    document_to_space,
    enumerate_topologies,
    parse_space,
    serialize_space,
    space_to_document,
)

E2_OPENS_DOC = (
    '{"points":["a","b","c","d"],"opens":[[],["a"],["d"],["a","b"],["a","d"],'
    '["a","b","d"],["a","b","c","d"]]}'
)


def test_parse_opens_form(e2):
    assert parse_space(E2_OPENS_DOC) == e2


def test_serialize_emits_min_basis(e2):
    doc = json.loads(serialize_space(e2))
    assert doc == {
        "points": ["a", "b", "c", "d"],
        "min_basis": {"a": ["a"], "b": ["a", "b"], "c": ["a", "b", "c", "d"], "d": ["d"]},
    }


def test_one_point_space_document():
    sp = parse_space('{"points":["x"],"min_basis":{"x":["x"]}}')
    assert sp.n == 1
    assert serialize_space(sp) == '{"points":["x"],"min_basis":{"x":["x"]}}'


def test_roundtrip_all_small_spaces():
    for n in (1, 2, 3):
        for sp in enumerate_topologies(n):
            assert parse_space(serialize_space(sp)) == sp


def test_document_roundtrip_dict(e2):
    assert document_to_space(space_to_document(e2)) == e2


def test_incomplete_example_family_rejected():
    # the family misses {a} ∪ {c}, so it is not a topology
    doc = (
        '{"points":["a","b","c","d"],"opens":[[],["a"],["c"],["a","b"],["c","d"],'
        '["a","b","c"],["a","c","d"],["a","b","c","d"]]}'
    )
    with pytest.raises(NotClosedUnderUnionError) as exc:
        parse_space(doc)
    msg = str(exc.value)
    assert "{a}" in msg and "{c}" in msg


def test_bad_json_is_syntax_error():
    with pytest.raises(DocumentSyntaxError):
        parse_space("{not json")


def test_schema_requires_points():
    with pytest.raises(SchemaError):
        document_to_space({"min_basis": {}})


def test_schema_rejects_both_forms(e2):
    doc = space_to_document(e2)
    doc["opens"] = [[]]
    with pytest.raises(SchemaError):
        document_to_space(doc)


def test_schema_rejects_neither_form():
    with pytest.raises(SchemaError):
        document_to_space({"points": ["a"]})


def test_schema_rejects_unknown_keys(e2):
    doc = space_to_document(e2)
    doc["extra"] = 1
    with pytest.raises(SchemaError):
        document_to_space(doc)


def test_schema_rejects_missing_basis_entry():
    with pytest.raises(SchemaError):
        document_to_space({"points": ["a", "b"], "min_basis": {"a": ["a"]}})


def test_schema_rejects_non_object():
    with pytest.raises(SchemaError):
        document_to_space([1, 2])


def test_schema_rejects_unknown_member():
    with pytest.raises(Exception):
        document_to_space({"points": ["a"], "min_basis": {"a": ["a", "z"]}})
