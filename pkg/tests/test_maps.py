"""Tests for the maps package."""

import pytest

from etheta.errors import DomainMismatch, EmptyCarrier, PreconditionUnmet
from etheta.maps import (
    MapPropertyKind,
    SpaceMap,
    compose,
    constant_map,
    enumerate_maps,
    graph_forms,
    identity_map,
    map_from_labels,
    preimage_dset,
    product_projections,
    property_of,
    property_table,
    restrict,
    weak_irresolute_forms,
)
from etheta.space import library


class TestSpaceMap:
    """Test map construction and set images."""

    def test_images_and_preimages(self, example4) -> None:
        f = constant_map(example4, example4, "c")
        assert f.images == (2, 2, 2, 2)
        assert f.image(example4.point_set(["a", "b"])) == 0b0100
        assert f.preimage(example4.point_set(["c"])) == example4.full
        assert f.preimage(example4.point_set(["a"])) == 0
        assert not f.is_surjective()
        assert not f.is_injective()

    def test_graph(self, example2, point) -> None:
        f = constant_map(example2, point, "x")
        assert f.graph().bits == 0b111

    def test_wrong_image_count(self, example2, point) -> None:
        with pytest.raises(DomainMismatch):
            SpaceMap(example2, point, (0, 0))
        with pytest.raises(DomainMismatch):
            SpaceMap(point, example2, (3,))

    def test_map_from_labels(self, example4) -> None:
        f = map_from_labels(example4, example4, {"a": "b", "b": "a", "c": "c", "d": "d"})
        assert f.images == (1, 0, 2, 3)
        assert f.to_labels()["a"] == "b"
        with pytest.raises(DomainMismatch):
            map_from_labels(example4, example4, {"a": "b"})
        with pytest.raises(DomainMismatch):
            map_from_labels(example4, example4, {p: "z" for p in "abcd"})
        with pytest.raises(DomainMismatch):
            map_from_labels(example4, example4, {p: "a" for p in "abcde"})

    @pytest.mark.parametrize(
        "domain,codomain,expected",
        [
            (library.example2_space, library.point_space, 1),
            (library.point_space, library.example2_space, 3),
            (library.sierpinski, library.sierpinski, 4),
            (library.example2_space, library.sierpinski, 8),
        ],
    )
    def test_enumerate_maps(self, domain, codomain, expected) -> None:
        maps = list(enumerate_maps(domain(), codomain()))
        assert len(maps) == expected
        assert len({f.images for f in maps}) == expected

    def test_compose(self, example4, point) -> None:
        f = identity_map(example4)
        g = constant_map(example4, point, "x")
        assert compose(f, g).images == (0, 0, 0, 0)
        with pytest.raises(DomainMismatch):
            compose(g, g)

    def test_restrict(self, example4) -> None:
        f = constant_map(example4, example4, "c")
        g = restrict(f, example4.point_set(["a", "b"]))
        assert g.domain.point_names == ("a", "b")
        assert g.images == (2, 2)
        with pytest.raises(EmptyCarrier):
            restrict(f, 0)

    def test_product_projections(self) -> None:
        first, second = product_projections(library.discrete(2), library.sierpinski())
        assert first.images == (0, 0, 1, 1)
        assert second.images == (0, 1, 0, 1)
        assert property_of(first, MapPropertyKind.CONTINUOUS).holds
        assert property_of(second, MapPropertyKind.CONTINUOUS).holds


class TestProperties:
    """Test the map predicates."""

    def test_constant_map_golden(self, example4) -> None:
        f = constant_map(example4, example4, "c")
        assert property_of(f, MapPropertyKind.S_ESTAR_CONTINUOUS).holds
        result = property_of(f, MapPropertyKind.S_CONTINUOUS)
        assert not result.holds
        assert result.witness is not None

    def test_constant_map_is_continuous(self, example4) -> None:
        f = constant_map(example4, example4, "c")
        assert property_of(f, MapPropertyKind.CONTINUOUS).holds
        assert property_of(f, MapPropertyKind.ESTAR_IRRESOLUTE).holds

    def test_identity(self, example4) -> None:
        f = identity_map(example4)
        for kind in (
            MapPropertyKind.CONTINUOUS,
            MapPropertyKind.OPEN_MAP,
            MapPropertyKind.ESTAR_OPEN_MAP,
            MapPropertyKind.ESTAR_IRRESOLUTE,
            MapPropertyKind.WEAKLY_ESTAR_IRRESOLUTE,
        ):
            assert property_of(f, kind).holds, kind

    def test_property_table_order(self, example5) -> None:
        table = property_table(identity_map(example5))
        assert list(table) == list(MapPropertyKind)

    def test_equivalent_forms_agree_on_small_maps(self, small_spaces) -> None:
        spaces = [s for s in small_spaces if s.size <= 2]
        for domain in spaces:
            for codomain in spaces:
                for f in enumerate_maps(domain, codomain):
                    forms = weak_irresolute_forms(f)
                    assert len(set(forms)) == 1, f.to_labels()

    def test_graph_forms_return_pair(self, example4) -> None:
        forms = graph_forms(constant_map(example4, example4, "c"))
        assert len(forms) == 2
        assert forms[0] == forms[1]


class TestPreimageDset:
    """Test pulling D-sets back."""

    def test_identity_pulls_back(self, example4) -> None:
        b = example4.point_set(["b"])
        result = preimage_dset(identity_map(example4), b)
        assert result.holds
        assert result.preimage == b
        u, v = result.decomposition
        assert (u - v) == b

    def test_requires_surjection(self, example4) -> None:
        with pytest.raises(PreconditionUnmet):
            preimage_dset(constant_map(example4, example4, "c"), example4.point_set(["c"]))

    def test_requires_dset(self, example4) -> None:
        with pytest.raises(PreconditionUnmet):
            preimage_dset(identity_map(example4), example4.full)
