"""Exact enumeration of dominant regions of k-Catalan arrangements,
their floors and ceilings, the floor/ceiling bijection, and the Panyushev
complement, for crystallographic root systems."""

from .alcoves import (
    Alcove,
    Hyperplane,
    alcove_ceilings,
    alcove_floors,
    alcove_from_rvec,
    alcove_walls,
    fundamental_alcove,
    maximal_alcove,
    minimal_alcove,
    pseudomaximal_alcove,
    reflect,
    shi_valid,
)
from .bijection import (
    all_hyperplane_sets,
    fold,
    hyperplane_set,
    map_ceilings_to_floors,
    map_floors_to_ceilings,
    parse_hyperplane_set,
    verify_floor_ceiling_bijection,
)
from .chains import (
    INFINITY,
    FilterChain,
    IdealChain,
    all_order_filters,
    all_order_ideals,
    complement,
    enumerate_geometric_filter_chains,
    indecomposable_in_filter_chain,
    indecomposable_in_ideal_chain,
    is_geometric,
    is_positive,
    max_level_sum,
    max_level_sums,
    min_level_sum,
    min_level_sums,
    positive_extension,
    support,
)
from .panyushev import (
    ceiling_antichain,
    floor_antichain,
    panyushev_complement,
    panyushev_orbits,
    panyushev_via_regions,
)
from .regions import (
    Region,
    distribution,
    enumerate_regions,
    is_bounded,
    joint_profile,
    region_from_alcove,
    region_from_filter_chain,
    region_via_minimal_alcove,
    with_ceilings,
    with_exact_ceilings,
    with_exact_floors,
    with_floors,
)
from .root_system import Point, Root, RootSystem, build_root_system

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
