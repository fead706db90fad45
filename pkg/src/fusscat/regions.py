"""Dominant regions of the k-Catalan arrangement.

A region is keyed by its geometric chain of order filters
J_i = {a : <x, a> > i on the region}; the complementary ideal chain is
derived.  Floors and ceilings are computed eagerly from rank-r
indecomposability (filter side for floors, ideal side for ceilings); the
alcove route through the minimal and pseudomaximal alcoves gives the same
sets and is used as a cross-check in the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .alcoves import Alcove, Hyperplane, minimal_alcove
from .chains import (
    INFINITY,
    FilterChain,
    IdealChain,
    complement,
    enumerate_geometric_filter_chains,
    indecomposable_in_filter_chain,
    indecomposable_in_ideal_chain,
    is_geometric,
    is_positive,
    max_level_sums,
    min_level_sums,
)
from .root_system import RootSystem


@dataclass(frozen=True)
class Region:
    key: FilterChain
    ideal_key: IdealChain
    floors: frozenset[Hyperplane]
    ceilings: frozenset[Hyperplane]

    @property
    def rs(self) -> RootSystem:
        return self.key.rs

    @property
    def k(self) -> int:
        return self.key.k

    def __repr__(self):
        return f"Region({self.key!r})"


def region_from_filter_chain(chain: FilterChain) -> Region:
    """Build the region keyed by a geometric filter chain.

    Floors: H(a, r) for a of filter rank r (r = max level sum <= k).
    Ceilings: H(a, r) for a of ideal rank r (r = min level sum <= k).
    """
    if not is_geometric(chain):
        raise ValueError("filter chain is not geometric")
    rs, k = chain.rs, chain.k
    ideal = complement(chain)
    filter_ranks = max_level_sums(chain)
    ideal_ranks = min_level_sums(ideal)
    floors = set()
    ceilings = set()
    for i, a in enumerate(rs.positive_roots):
        r = filter_ranks[i]
        if 1 <= r <= k and indecomposable_in_filter_chain(chain, a, r):
            floors.add(Hyperplane(a, r))
        r = ideal_ranks[i]
        if r != INFINITY and r <= k and indecomposable_in_ideal_chain(ideal, a, int(r)):
            ceilings.add(Hyperplane(a, int(r)))
    assert len(floors) <= rs.rank and len(ceilings) <= rs.rank
    return Region(chain, ideal, frozenset(floors), frozenset(ceilings))


def region_from_alcove(alcove: Alcove, k: int) -> Region:
    """The region of the k-Catalan arrangement containing a dominant alcove."""
    if not alcove.is_dominant:
        raise ValueError("alcove is not dominant")
    if k < 1:
        raise ValueError("k must be a positive integer")
    rs = alcove.rs
    masks = []
    for i in range(1, k + 1):
        mask = 0
        for t in range(rs.n_positive_roots):
            if alcove.rvec[t] > i:
                mask |= 1 << t
        masks.append(mask)
    chain = FilterChain(rs, tuple(masks))
    assert is_geometric(chain), "alcove threshold chain is not geometric"
    return region_from_filter_chain(chain)


def region_via_minimal_alcove(chain: FilterChain) -> Region:
    """Realize the region geometrically through its minimal alcove and
    check that the alcove lies in the keyed region (round trip)."""
    if not is_geometric(chain):
        raise ValueError("filter chain is not geometric")
    region = region_from_alcove(minimal_alcove(chain), chain.k)
    assert region.key == chain, "minimal alcove left its region"
    return region


def is_bounded(region: Region) -> bool:
    return is_positive(region.ideal_key)


def enumerate_regions(rs: RootSystem, k: int) -> tuple[Region, ...]:
    """All dominant regions in deterministic order."""
    return tuple(
        region_from_filter_chain(c) for c in enumerate_geometric_filter_chains(rs, k)
    )


def _check_hyperplanes(regions, hyperplanes) -> frozenset[Hyperplane]:
    m = frozenset(hyperplanes)
    if regions:
        rs, k = regions[0].rs, regions[0].k
        for h in m:
            rs.root_index(h.root)
            if not 1 <= h.level <= k:
                raise ValueError(f"hyperplane level {h.level} outside 1..{k}")
    return m


def with_floors(regions, hyperplanes) -> tuple[Region, ...]:
    """Regions having every given hyperplane among their floors."""
    m = _check_hyperplanes(regions, hyperplanes)
    return tuple(r for r in regions if m <= r.floors)


def with_ceilings(regions, hyperplanes) -> tuple[Region, ...]:
    """Regions having every given hyperplane among their ceilings."""
    m = _check_hyperplanes(regions, hyperplanes)
    return tuple(r for r in regions if m <= r.ceilings)


def with_exact_floors(regions, hyperplanes) -> tuple[Region, ...]:
    m = _check_hyperplanes(regions, hyperplanes)
    return tuple(r for r in regions if r.floors == m)


def with_exact_ceilings(regions, hyperplanes) -> tuple[Region, ...]:
    m = _check_hyperplanes(regions, hyperplanes)
    return tuple(r for r in regions if r.ceilings == m)


def _stat_set(region: Region, stat: str) -> frozenset[Hyperplane]:
    if stat == "floors":
        return region.floors
    if stat == "ceilings":
        return region.ceilings
    raise ValueError("stat must be 'floors' or 'ceilings'")


def distribution(regions, stat: str, r: int) -> dict[int, int]:
    """Histogram {l: number of regions with exactly l hyperplanes of
    height r among stat}, complete over l = 0..rank."""
    if not regions:
        return {}
    k, n = regions[0].k, regions[0].rs.rank
    if not 1 <= r <= k:
        raise ValueError(f"height {r} outside 1..{k}")
    counts = Counter(
        sum(1 for h in _stat_set(region, stat) if h.level == r) for region in regions
    )
    return {l: counts.get(l, 0) for l in range(n + 1)}


def joint_profile(regions, stat: str) -> dict[tuple[int, ...], int]:
    """Histogram over the full per-height count vector (a_1, ..., a_k)."""
    out: Counter = Counter()
    for region in regions:
        by_height = Counter(h.level for h in _stat_set(region, stat))
        out[tuple(by_height.get(j, 0) for j in range(1, region.k + 1))] += 1
    return dict(sorted(out.items()))
