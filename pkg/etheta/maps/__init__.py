"""Maps between finite spaces and their continuity properties."""

from etheta.maps.space_map import (
    SpaceMap,
    compose,
    constant_map,
    enumerate_maps,
    identity_map,
    map_from_labels,
    product_projections,
    restrict,
)
from etheta.maps.properties import (
    MapPropertyKind,
    MapPropertyResult,
    PreimageDset,
    graph_forms,
    preimage_dset,
    property_of,
    property_table,
    theta_s_characterization,
    theta_s_corollary,
    weak_irresolute_forms,
)

__all__ = [
    "SpaceMap",
    "MapPropertyKind",
    "MapPropertyResult",
    "PreimageDset",
    "identity_map",
    "constant_map",
    "map_from_labels",
    "enumerate_maps",
    "compose",
    "restrict",
    "product_projections",
    "property_of",
    "property_table",
    "preimage_dset",
    "weak_irresolute_forms",
    "graph_forms",
    "theta_s_characterization",
    "theta_s_corollary",
]
