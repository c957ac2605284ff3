"""Tests for space and map documents."""

import pytest

from etheta.errors import DocumentError, DomainMismatch, NotASubset
from etheta.maps import constant_map
from etheta.utils.documents import (
    format_set,
    load_map,
    load_space,
    map_from_document,
    map_to_document,
    parse_json,
    parse_map_literal,
    parse_set_literal,
    parse_space,
    save_space,
    serialize_space,
)

GOLDEN = ["example2.space", "example4.space", "example5.space", "point1.space"]


class TestSpaceDocuments:
    """Test reading and writing spaces."""

    @pytest.mark.parametrize("name", GOLDEN)
    def test_golden_files_are_canonical(self, data_dir, name) -> None:
        path = data_dir / name
        assert serialize_space(load_space(str(path))) + "\n" == path.read_text(encoding="utf-8")

    def test_loads_match_library(self, data_dir, example4) -> None:
        assert load_space(str(data_dir / "example4.space")) == example4

    def test_empty_and_full_are_implied(self) -> None:
        space = parse_space('{"points": ["a", "b"], "opens": [["a"]]}')
        assert space.opens.masks == (0, 1, 3)

    def test_save_then_load(self, tmp_path, example5) -> None:
        path = tmp_path / "x.space"
        save_space(example5, str(path))
        assert load_space(str(path)) == example5

    def test_syntax_error_position(self) -> None:
        with pytest.raises(DocumentError) as info:
            parse_json('{"points": ["a",\n  ]}')
        assert info.value.line == 2
        assert info.value.column > 0
        assert "line 2" in str(info.value)

    def test_shape_errors(self) -> None:
        with pytest.raises(DocumentError):
            parse_space('["a"]')
        with pytest.raises(DocumentError):
            parse_space('{"points": "ab"}')
        with pytest.raises(DocumentError):
            parse_space('{"points": ["a"], "opens": ["a"]}')

    def test_topology_errors_pass_through(self) -> None:
        with pytest.raises(NotASubset):
            parse_space('{"points": ["a"], "opens": [["z"]]}')

    def test_missing_file(self, tmp_path) -> None:
        with pytest.raises(FileNotFoundError):
            load_space(str(tmp_path / "none.space"))


class TestMapDocuments:
    """Test reading and writing maps."""

    def test_file_references(self, data_dir, example4) -> None:
        f = load_map(str(data_dir / "constant_c.map"))
        assert f == constant_map(example4, example4, "c")

    def test_inline_round_trip(self, example4, point) -> None:
        f = constant_map(example4, point, "x")
        assert map_from_document(map_to_document(f)) == f

    def test_missing_key(self) -> None:
        with pytest.raises(DocumentError):
            map_from_document({"domain": {}, "map": {}})

    def test_partial_table(self, data_dir) -> None:
        document = {"domain": "example4.space", "codomain": "point1.space", "map": {"a": "x"}}
        with pytest.raises(DomainMismatch):
            map_from_document(document, data_dir)


class TestLiterals:
    """Test command-line literals."""

    def test_set_literal(self, example4) -> None:
        assert example4.labels_of(parse_set_literal(example4, "a, c")) == ["a", "c"]
        assert parse_set_literal(example4, "").bits == 0
        with pytest.raises(DocumentError):
            parse_set_literal(example4, "a,z")

    def test_map_literal(self) -> None:
        assert parse_map_literal("a:c,b:c") == {"a": "c", "b": "c"}
        with pytest.raises(DocumentError) as info:
            parse_map_literal("a:c,bc")
        assert info.value.column == 5

    def test_format_set(self) -> None:
        assert format_set(["a", "b"]) == "{a,b}"
        assert format_set([]) == "{}"
