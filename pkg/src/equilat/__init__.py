"""Exact equilateral sets in sup-norm spaces and their linked families of pairs."""

from .errors import EquilatError
from .families import (
    Pair,
    PairFamily,
    WeakSeparationWitness,
    augment_with_extremes,
    family_facts_check,
    family_from_weak_separation,
    find_family_extension,
    is_linked,
    is_maximal_linked,
    is_nonempty_linked,
    is_weakly_separated,
    weak_separation_from_family,
)
from .maximality import (
    Box,
    Region,
    extension_region,
    find_extension,
    forced_coordinates,
    grid_oracle_extension,
    is_maximal_equilateral,
)
from .msearch import m_search
from .supnorm import (
    PointSet,
    family_from_points,
    fresh_coordinate_extension,
    is_equilateral,
    is_separated,
    normalize_to_sphere,
    points_from_family,
    reduce_to_unit_box,
    separated_to_family,
    sup_distance,
    two_equilateral_from_family,
)

__all__ = [
    "EquilatError",
    "m_search",
    "Pair",
    "PairFamily",
    "WeakSeparationWitness",
    "augment_with_extremes",
    "family_facts_check",
    "family_from_weak_separation",
    "find_family_extension",
    "is_linked",
    "is_maximal_linked",
    "is_nonempty_linked",
    "is_weakly_separated",
    "weak_separation_from_family",
    "Box",
    "Region",
    "extension_region",
    "find_extension",
    "forced_coordinates",
    "grid_oracle_extension",
    "is_maximal_equilateral",
    "PointSet",
    "family_from_points",
    "fresh_coordinate_extension",
    "is_equilateral",
    "is_separated",
    "normalize_to_sphere",
    "points_from_family",
    "reduce_to_unit_box",
    "separated_to_family",
    "sup_distance",
    "two_equilateral_from_family",
]

__version__ = "0.1.0"
