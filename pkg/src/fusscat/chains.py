"""Chains of ideals and order filters in the root poset.

Subsets of the positive roots are held as int bitmasks over the positive
root index space (|positive roots| <= 24 at desk scale), so the additive
closure conditions reduce to a few mask operations per sum-table entry.

An ascending chain of k ideals I_1 <= ... <= I_k and the complementary
descending chain of filters J_i = complement(I_i) are *geometric* when

  (1) (I_i + I_j) n Phi+  is contained in I_{i+j}   for i+j <= k, and
  (2) (J_i + J_j) n Phi+  is contained in J_{i+j}   for i, j in {0..k},

with I_0 empty, J_0 = Phi+ and J_i = J_k for i > k.  Pairs with i = 0 or
j = 0 hold automatically for ideals (empty) and filters (upward closure).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import inf

from .root_system import Root, RootSystem

INFINITY = inf


def roots_to_mask(rs: RootSystem, roots) -> int:
    mask = 0
    for a in roots:
        mask |= 1 << rs.root_index(a)
    return mask


def mask_to_roots(rs: RootSystem, mask: int) -> tuple[Root, ...]:
    return tuple(a for i, a in enumerate(rs.positive_roots) if mask >> i & 1)


def is_ideal_mask(rs: RootSystem, mask: int) -> bool:
    """Downward closed in the root poset."""
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        if rs.down_closure_masks[i] & ~mask:
            return False
        m &= m - 1
    return True


def is_filter_mask(rs: RootSystem, mask: int) -> bool:
    """Upward closed in the root poset."""
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        if rs.up_closure_masks[i] & ~mask:
            return False
        m &= m - 1
    return True


def sumset_mask(rs: RootSystem, x: int, y: int) -> int:
    """Mask of positive roots expressible as b + c with b in x, c in y."""
    out = 0
    for t, pairs in enumerate(rs.sum_table):
        for i, j in pairs:
            if (x >> i & 1 and y >> j & 1) or (x >> j & 1 and y >> i & 1):
                out |= 1 << t
                break
    return out


@dataclass(frozen=True)
class IdealChain:
    """Ascending chain of k order ideals, one bitmask per level."""

    rs: RootSystem
    masks: tuple[int, ...]

    def __post_init__(self):
        if not self.masks:
            raise ValueError("chain needs at least one level")
        prev = 0
        for mask in self.masks:
            if mask & ~self.rs.full_mask:
                raise ValueError("mask outside the positive root index space")
            if not is_ideal_mask(self.rs, mask):
                raise ValueError("level is not an order ideal")
            if prev & ~mask:
                raise ValueError("ideal chain is not ascending")
            prev = mask

    @classmethod
    def from_roots(cls, rs: RootSystem, levels) -> "IdealChain":
        return cls(rs, tuple(roots_to_mask(rs, level) for level in levels))

    @property
    def k(self) -> int:
        return len(self.masks)

    @property
    def ideals(self) -> tuple[tuple[Root, ...], ...]:
        return tuple(mask_to_roots(self.rs, m) for m in self.masks)

    def __repr__(self):
        levels = ";".join(
            ",".join(str(a) for a in level) or "-" for level in self.ideals
        )
        return f"IdealChain({self.rs.label}, k={self.k}, {levels})"


@dataclass(frozen=True)
class FilterChain:
    """Descending chain of k order filters, one bitmask per level."""

    rs: RootSystem
    masks: tuple[int, ...]

    def __post_init__(self):
        if not self.masks:
            raise ValueError("chain needs at least one level")
        prev = self.rs.full_mask
        for mask in self.masks:
            if mask & ~self.rs.full_mask:
                raise ValueError("mask outside the positive root index space")
            if not is_filter_mask(self.rs, mask):
                raise ValueError("level is not an order filter")
            if mask & ~prev:
                raise ValueError("filter chain is not descending")
            prev = mask

    @classmethod
    def from_roots(cls, rs: RootSystem, levels) -> "FilterChain":
        return cls(rs, tuple(roots_to_mask(rs, level) for level in levels))

    @property
    def k(self) -> int:
        return len(self.masks)

    @property
    def filters(self) -> tuple[tuple[Root, ...], ...]:
        return tuple(mask_to_roots(self.rs, m) for m in self.masks)

    def __repr__(self):
        levels = ";".join(
            ",".join(str(a) for a in level) or "-" for level in self.filters
        )
        return f"FilterChain({self.rs.label}, k={self.k}, {levels})"


def complement(chain):
    """Complement each level; an involution between the two chain kinds."""
    full = chain.rs.full_mask
    masks = tuple(full ^ m for m in chain.masks)
    if isinstance(chain, IdealChain):
        return FilterChain(chain.rs, masks)
    if isinstance(chain, FilterChain):
        return IdealChain(chain.rs, masks)
    raise TypeError(f"not a chain: {chain!r}")


def _as_ideal_chain(chain) -> IdealChain:
    if isinstance(chain, IdealChain):
        return chain
    if isinstance(chain, FilterChain):
        return complement(chain)
    raise TypeError(f"not a chain: {chain!r}")


def is_geometric(chain) -> bool:
    """Check the additive closure conditions (1) and (2)."""
    c = _as_ideal_chain(chain)
    rs, k = c.rs, c.k
    ideal = c.masks
    filt = [rs.full_mask ^ m for m in ideal]
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            s = sumset_mask(rs, filt[i - 1], filt[j - 1])
            if s & ~filt[min(i + j, k) - 1]:
                return False
            if i + j <= k:
                s = sumset_mask(rs, ideal[i - 1], ideal[j - 1])
                if s & ~ideal[i + j - 1]:
                    return False
    return True


def is_positive(chain) -> bool:
    """True iff every simple root lies in the top ideal I_k."""
    c = _as_ideal_chain(chain)
    simple_mask = roots_to_mask(c.rs, c.rs.simple_roots)
    return simple_mask & ~c.masks[-1] == 0


def support(chain) -> tuple[Root, ...]:
    """The simple roots contained in the top ideal I_k."""
    c = _as_ideal_chain(chain)
    simple_mask = roots_to_mask(c.rs, c.rs.simple_roots)
    return mask_to_roots(c.rs, c.masks[-1] & simple_mask)


@lru_cache(maxsize=None)
def min_level_sums(chain: IdealChain):
    """For each positive root a, the minimum of r_1 + ... + r_m over all
    decompositions of a into positive roots with the i-th part in ideal
    level r_i; INFINITY when no decomposition stays inside I_k.

    Computed by a binary-split recursion in height order; any multi-part
    decomposition can be merged pairwise into sum-table splits, so the
    binary minimum equals the unrestricted one.
    """
    rs = chain.rs
    out: list = []
    for t in range(rs.n_positive_roots):
        best = INFINITY
        for level, mask in enumerate(chain.masks, start=1):
            if mask >> t & 1:
                best = level
                break
        for i, j in rs.sum_table[t]:
            cand = out[i] + out[j]  # both parts have smaller height
            if cand < best:
                best = cand
        out.append(best)
    return tuple(out)


@lru_cache(maxsize=None)
def max_level_sums(chain: FilterChain):
    """For each positive root a, the maximum of k_1 + ... + k_m over all
    decompositions of a into positive roots, the i-th part weighted by the
    deepest filter level containing it (level 0 = all positive roots).
    """
    rs = chain.rs
    out: list[int] = []
    for t in range(rs.n_positive_roots):
        best = 0
        for level in range(chain.k, 0, -1):
            if chain.masks[level - 1] >> t & 1:
                best = level
                break
        for i, j in rs.sum_table[t]:
            cand = out[i] + out[j]
            if cand > best:
                best = cand
        out.append(best)
    return tuple(out)


def min_level_sum(chain: IdealChain, a: Root):
    return min_level_sums(chain)[chain.rs.root_index(a)]


def max_level_sum(chain: FilterChain, a: Root) -> int:
    return max_level_sums(chain)[chain.rs.root_index(a)]


def indecomposable_in_ideal_chain(chain: IdealChain, a: Root, r: int) -> bool:
    """Rank-r indecomposability on the ideal side.

    Requires a in I_r with minimal level sum exactly r, no split of a into
    I_i + I_j with i + j = r, and every extension a + b with level sum
    t <= k forcing b into I_{t-r}.
    """
    rs = chain.rs
    k = chain.k
    if not 1 <= r <= k:
        raise ValueError(f"rank {r} outside 1..{k}")
    t = rs.root_index(a)
    if not chain.masks[r - 1] >> t & 1:
        return False
    sums = min_level_sums(chain)
    if sums[t] != r:
        return False
    for i in range(1, r):
        j = r - i
        x, y = chain.masks[i - 1], chain.masks[j - 1]
        for bi, ci in rs.sum_table[t]:
            if (x >> bi & 1 and y >> ci & 1) or (x >> ci & 1 and y >> bi & 1):
                return False
    for b_idx, b in enumerate(rs.positive_roots):
        ab = tuple(x + y for x, y in zip(a, b))
        if not rs.is_positive_root(ab):
            continue
        tv = sums[rs.root_index(ab)]
        if tv <= k:
            if tv - r < 1 or not chain.masks[tv - r - 1] >> b_idx & 1:
                return False
    return True


def indecomposable_in_filter_chain(chain: FilterChain, a: Root, r: int) -> bool:
    """Rank-r indecomposability on the filter side (mirror of the ideal
    version, with level 0 meaning "any positive root")."""
    rs = chain.rs
    k = chain.k
    if not 1 <= r <= k:
        raise ValueError(f"rank {r} outside 1..{k}")
    t = rs.root_index(a)
    if not chain.masks[r - 1] >> t & 1:
        return False
    sums = max_level_sums(chain)
    if sums[t] != r:
        return False
    full = rs.full_mask
    for i in range(0, r + 1):
        j = r - i
        x = full if i == 0 else chain.masks[i - 1]
        y = full if j == 0 else chain.masks[j - 1]
        for bi, ci in rs.sum_table[t]:
            if (x >> bi & 1 and y >> ci & 1) or (x >> ci & 1 and y >> bi & 1):
                return False
    for b_idx, b in enumerate(rs.positive_roots):
        ab = tuple(x + y for x, y in zip(a, b))
        if not rs.is_positive_root(ab):
            continue
        tv = sums[rs.root_index(ab)]
        if tv <= k:
            j = tv - r
            if j > 0 and not chain.masks[j - 1] >> b_idx & 1:
                return False
    return True


def positive_extension(chain: IdealChain) -> IdealChain:
    """Extend a geometric k-chain by the level

        I_{k+1} = union over i+j=k+1 of (I_i + I_j) n Phi+, with I_k and
        all simple roots added,

    yielding a positive geometric (k+1)-chain (asserted)."""
    rs = chain.rs
    k = chain.k
    top = chain.masks[-1] | roots_to_mask(rs, rs.simple_roots)
    for i in range(1, k + 1):
        j = k + 1 - i
        if 1 <= j <= k:
            top |= sumset_mask(rs, chain.masks[i - 1], chain.masks[j - 1])
    extended = IdealChain(rs, chain.masks + (top,))
    assert is_geometric(extended) and is_positive(extended)
    return extended


def all_order_filters(rs: RootSystem) -> tuple[int, ...]:
    """All order filters of the root poset as bitmasks, ascending as ints.

    Filters are generated as upward closures of antichains, depth-first
    over the root index with comparability pruning.
    """
    n = rs.n_positive_roots
    comparable = [
        (rs.up_closure_masks[i] | rs.down_closure_masks[i]) & ~(1 << i)
        for i in range(n)
    ]
    out: list[int] = []

    def rec(i: int, antichain: int, closure: int):
        if i == n:
            out.append(closure)
            return
        rec(i + 1, antichain, closure)
        if not comparable[i] & antichain:
            rec(i + 1, antichain | 1 << i, closure | rs.up_closure_masks[i])

    rec(0, 0, 0)
    return tuple(sorted(out))


def region_sort_key(chain: FilterChain) -> tuple[int, ...]:
    """Deterministic region ordering key: the per-root maximum level sums
    truncated at k (the k-Catalan data of the region's minimal alcove)."""
    k = chain.k
    return tuple(min(v, k) for v in max_level_sums(chain))


def enumerate_geometric_filter_chains(rs: RootSystem, k: int) -> tuple[FilterChain, ...]:
    """All geometric descending chains of k order filters, each once,
    sorted by :func:`region_sort_key`."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    filters = all_order_filters(rs)
    full = rs.full_mask
    found: list[FilterChain] = []
    chain: list[int] = []

    def conditions_at(m: int) -> bool:
        # pairs i + j = m, checked as soon as level m is fixed
        jm = chain[m - 1]
        im = full ^ jm
        for i in range(1, m):
            j = m - i
            if i > j:
                break
            if sumset_mask(rs, chain[i - 1], chain[j - 1]) & ~jm:
                return False
            if sumset_mask(rs, full ^ chain[i - 1], full ^ chain[j - 1]) & ~im:
                return False
        return True

    def leaf_conditions() -> bool:
        # pairs with i + j > k fold onto the last filter level
        jk = chain[k - 1]
        for i in range(1, k + 1):
            for j in range(max(i, k + 1 - i), k + 1):
                if sumset_mask(rs, chain[i - 1], chain[j - 1]) & ~jk:
                    return False
        return True

    def rec(level: int):
        prev = full if level == 1 else chain[level - 1 - 1]
        for mask in filters:
            if mask & ~prev:
                continue
            chain.append(mask)
            if conditions_at(level):
                if level == k:
                    if leaf_conditions():
                        found.append(FilterChain(rs, tuple(chain)))
                else:
                    rec(level + 1)
            chain.pop()

    rec(1)
    found.sort(key=region_sort_key)
    assert len({c.masks for c in found}) == len(found)
    return tuple(found)


def all_order_ideals(rs: RootSystem) -> tuple[IdealChain, ...]:
    """All order ideals as single-level chains, ascending by mask."""
    full = rs.full_mask
    masks = sorted(full ^ f for f in all_order_filters(rs))
    return tuple(IdealChain(rs, (m,)) for m in masks)
