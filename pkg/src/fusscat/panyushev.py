"""The Panyushev complement on root poset ideals (the k = 1 picture).

Pan(I) is the ideal generated by the minimal elements of the complement
filter.  On regions of the 1-Catalan arrangement this is conjugate, via
the region/ideal bijection, to "read off the floors, reinterpret them as
ceilings": the unique region whose ceilings are the floors of the region
of I corresponds to Pan(I).
"""

from __future__ import annotations

from itertools import combinations

from .chains import IdealChain, all_order_ideals, complement, mask_to_roots
from .regions import Region, enumerate_regions
from .root_system import Root, RootSystem


def is_antichain(rs: RootSystem, roots) -> bool:
    roots = tuple(roots)
    for a, b in combinations(roots, 2):
        if rs.poset_leq(a, b) or rs.poset_leq(b, a):
            return False
    return True


def minimal_elements(rs: RootSystem, mask: int) -> int:
    out = 0
    for i in range(rs.n_positive_roots):
        if mask >> i & 1 and not (rs.down_closure_masks[i] & mask & ~(1 << i)):
            out |= 1 << i
    return out


def maximal_elements(rs: RootSystem, mask: int) -> int:
    out = 0
    for i in range(rs.n_positive_roots):
        if mask >> i & 1 and not (rs.up_closure_masks[i] & mask & ~(1 << i)):
            out |= 1 << i
    return out


def _single_ideal(chain: IdealChain) -> int:
    if chain.k != 1:
        raise ValueError("the Panyushev complement acts on single ideals (k = 1)")
    return chain.masks[0]


def panyushev_complement(chain: IdealChain) -> IdealChain:
    """Downward closure of the minimal elements of the complement filter."""
    rs = chain.rs
    mask = _single_ideal(chain)
    mins = minimal_elements(rs, rs.full_mask ^ mask)
    closed = 0
    m = mins
    while m:
        i = (m & -m).bit_length() - 1
        closed |= rs.down_closure_masks[i]
        m &= m - 1
    return IdealChain(rs, (closed,))


def ceiling_antichain(region: Region) -> frozenset[Root]:
    """Roots whose level-1 hyperplane is a ceiling of a k = 1 region."""
    if region.k != 1:
        raise ValueError("ceiling antichains are defined for k = 1 regions")
    roots = frozenset(h.root for h in region.ceilings)
    assert is_antichain(region.rs, roots)
    return roots


def floor_antichain(region: Region) -> frozenset[Root]:
    """Roots whose level-1 hyperplane is a floor of a k = 1 region."""
    if region.k != 1:
        raise ValueError("floor antichains are defined for k = 1 regions")
    roots = frozenset(h.root for h in region.floors)
    assert is_antichain(region.rs, roots)
    return roots


def panyushev_via_regions(chain: IdealChain) -> IdealChain:
    """Compute the complement through the region machinery: take the
    region of the ideal, read its floor antichain, find the unique region
    whose ceiling antichain matches, and return that region's ideal.
    Asserts agreement with :func:`panyushev_complement`."""
    rs = chain.rs
    mask = _single_ideal(chain)
    regions = enumerate_regions(rs, 1)
    source = [r for r in regions if r.ideal_key.masks[0] == mask]
    assert len(source) == 1, "ideal does not key a unique region"
    target = floor_antichain(source[0])
    matches = [r for r in regions if ceiling_antichain(r) == target]
    assert len(matches) == 1, "ceiling antichain does not determine a unique region"
    result = matches[0].ideal_key
    assert result == panyushev_complement(chain)
    return result


def panyushev_orbits(rs: RootSystem) -> tuple[tuple[IdealChain, ...], ...]:
    """Partition of all ideals into complement orbits.

    Ideals are ordered by their bitmask; each orbit starts at its smallest
    member and orbits are listed by smallest member.
    """
    ideals = all_order_ideals(rs)
    seen: set[int] = set()
    orbits = []
    for start in ideals:
        if start.masks[0] in seen:
            continue
        orbit = []
        current = start
        while current.masks[0] not in seen:
            seen.add(current.masks[0])
            orbit.append(current)
            current = panyushev_complement(current)
        assert current == start, "complement iteration left its cycle"
        orbits.append(tuple(orbit))
    return tuple(orbits)


def antichain_of_ideal(chain: IdealChain) -> frozenset[Root]:
    """Maximal elements: the antichain naturally labelling an ideal."""
    rs = chain.rs
    return frozenset(mask_to_roots(rs, maximal_elements(rs, _single_ideal(chain))))
