import pytest

from fusscat import (
    INFINITY,
    FilterChain,
    IdealChain,
    all_order_filters,
    build_root_system,
    complement,
    enumerate_geometric_filter_chains,
    indecomposable_in_filter_chain,
    indecomposable_in_ideal_chain,
    is_geometric,
    is_positive,
    max_level_sum,
    min_level_sum,
    min_level_sums,
    positive_extension,
    support,
)
from fusscat.chains import mask_to_roots, roots_to_mask

import oracles

B2 = build_root_system("B2")
A1, A2, G2 = (build_root_system(s) for s in ("A1", "A2", "G2"))
a1, a2, a12, a112 = (1, 0), (0, 1), (1, 1), (2, 1)


def ideal(rs, *levels):
    return IdealChain.from_roots(rs, levels)


def filt(rs, *levels):
    return FilterChain.from_roots(rs, levels)


def test_complement_examples():
    c = ideal(B2, [])
    assert complement(c).filters == ((a1, a2, a12, a112),)
    c = ideal(B2, [a1, a2])
    assert complement(c).filters == ((a12, a112),)
    c = ideal(A2, [], [(1, 0)])
    assert complement(c).filters == ((( 1, 0), (0, 1), (1, 1)), ((0, 1), (1, 1)))
    for chain in enumerate_geometric_filter_chains(B2, 2):
        assert complement(complement(chain)) == chain


def test_chain_validation():
    with pytest.raises(ValueError):
        ideal(B2, [a12])  # not downward closed
    with pytest.raises(ValueError):
        filt(B2, [a1])  # not upward closed
    with pytest.raises(ValueError):
        ideal(B2, [a1, a2], [a1])  # not ascending
    with pytest.raises(ValueError):
        filt(B2, [a112], [a12, a112])  # not descending


def test_is_geometric_examples():
    # any k=1 chain is geometric
    for mask in all_order_filters(B2):
        assert is_geometric(FilterChain(B2, (mask,)))
    assert is_geometric(ideal(B2, [a1], [a1]))
    assert not is_geometric(ideal(B2, [], [a1, a2, a12]))


def test_is_positive_and_support():
    assert is_positive(ideal(B2, [a1, a2]))
    assert not is_positive(ideal(B2, [a1]))
    assert is_positive(ideal(B2, list(B2.positive_roots)))
    assert support(ideal(B2, [a1, a2])) == (a1, a2)
    assert support(ideal(B2, [])) == ()
    assert support(ideal(B2, [a1])) == (a1,)
    assert support(ideal(B2, [a1, a2])) == tuple(B2.simple_roots)


def test_min_level_sum_examples():
    c = ideal(B2, [a1, a2])
    assert min_level_sum(c, a1) == 1
    assert min_level_sum(c, a12) == 2
    assert min_level_sum(c, a112) == 3
    assert min_level_sum(ideal(B2, [a1]), a2) == INFINITY


def test_max_level_sum_examples():
    empty = filt(B2, [])
    for a in B2.positive_roots:
        assert max_level_sum(empty, a) == 0
    c = filt(B2, [a12, a112])
    assert max_level_sum(c, a112) == 1
    full = filt(B2, list(B2.positive_roots), list(B2.positive_roots))
    for a in B2.positive_roots:
        assert max_level_sum(full, a) >= 2  # a in J_k gives at least k


def test_level_sums_match_brute_force():
    for rs in (A2, B2, G2):
        for k in (1, 2):
            for chain in enumerate_geometric_filter_chains(rs, k):
                idl = complement(chain)
                for a in rs.positive_roots:
                    assert min_level_sum(idl, a) == oracles.min_level_sum_oracle(idl, a)
                    assert max_level_sum(chain, a) == oracles.max_level_sum_oracle(chain, a)


def test_finite_level_sum_forces_membership():
    # min level sum r <= k puts the root in I_r
    for rs in (A2, B2, G2):
        for chain in enumerate_geometric_filter_chains(rs, 2):
            idl = complement(chain)
            sums = min_level_sums(idl)
            for i, value in enumerate(sums):
                if value != INFINITY and value <= idl.k:
                    assert idl.masks[int(value) - 1] >> i & 1


def test_indecomposable_level_sum_identities():
    # for an indecomposable root: splits lose exactly 1; extensions add exactly
    for rs in (A2, B2, G2):
        for chain in enumerate_geometric_filter_chains(rs, 2):
            idl = complement(chain)
            sums = min_level_sums(idl)
            for t, a in enumerate(rs.positive_roots):
                r = sums[t]
                if r == INFINITY or r > idl.k or not indecomposable_in_ideal_chain(idl, a, int(r)):
                    continue
                for i, j in rs.sum_table[t]:
                    assert sums[t] == sums[i] + sums[j] - 1
                for b_idx, b in enumerate(rs.positive_roots):
                    ab = tuple(x + y for x, y in zip(a, b))
                    if rs.is_positive_root(ab) and sums[rs.root_index(ab)] <= idl.k:
                        assert sums[t] + sums[b_idx] == sums[rs.root_index(ab)]


def test_k1_indecomposables_are_extremal_elements():
    # ideal side: maximal elements; filter side: minimal elements
    for rs in (A2, B2, G2):
        for chain in enumerate_geometric_filter_chains(rs, 1):
            idl = complement(chain)
            ideal_roots = set(idl.ideals[0])
            maximal = {
                a for a in ideal_roots
                if not any(b != a and rs.poset_leq(a, b) for b in ideal_roots)
            }
            got = {a for a in rs.positive_roots if indecomposable_in_ideal_chain(idl, a, 1)}
            assert got == maximal
            filter_roots = set(chain.filters[0])
            minimal = {
                a for a in filter_roots
                if not any(b != a and rs.poset_leq(b, a) for b in filter_roots)
            }
            got = {a for a in rs.positive_roots if indecomposable_in_filter_chain(chain, a, 1)}
            assert got == minimal


def test_k1_indecomposable_examples():
    c = ideal(B2, [a1, a2])
    assert {a for a in B2.positive_roots if indecomposable_in_ideal_chain(c, a, 1)} == {a1, a2}
    c = ideal(B2, [a1, a2, a12])
    assert {a for a in B2.positive_roots if indecomposable_in_ideal_chain(c, a, 1)} == {a12}
    j = filt(B2, [a12, a112])
    assert {a for a in B2.positive_roots if indecomposable_in_filter_chain(j, a, 1)} == {a12}
    full = filt(B2, list(B2.positive_roots))
    assert {a for a in B2.positive_roots if indecomposable_in_filter_chain(full, a, 1)} == {a1, a2}


def test_positive_extension_examples():
    ext = positive_extension(ideal(B2, [a1, a2]))
    assert ext.ideals[-1] == (a1, a2, a12)
    ext = positive_extension(ideal(B2, []))
    assert ext.ideals[-1] == (a1, a2)
    ext = positive_extension(ideal(A1, []))
    assert ext.ideals == ((), ((1,),))


def test_positive_extension_properties():
    for rs in (A2, B2, G2):
        for k in (1, 2):
            for chain in enumerate_geometric_filter_chains(rs, k):
                idl = complement(chain)
                ext = positive_extension(idl)
                assert ext.k == k + 1
                assert ext.masks[:k] == idl.masks
                assert is_geometric(ext) and is_positive(ext)
                # level sums at or below k agree with the unextended chain;
                # for positive chains they agree everywhere
                base = min_level_sums(idl)
                extended = min_level_sums(ext)
                for i in range(rs.n_positive_roots):
                    if extended[i] <= k:
                        assert extended[i] == base[i]
                if is_positive(idl):
                    assert base == extended


def test_enumeration_counts():
    for k in (1, 2, 3):
        assert len(enumerate_geometric_filter_chains(A1, k)) == k + 1
    assert len(enumerate_geometric_filter_chains(B2, 1)) == 6
    assert len(enumerate_geometric_filter_chains(B2, 2)) == 15
    # the six k=1 chains are the upward closures of the six antichains
    singles = {c.masks[0] for c in enumerate_geometric_filter_chains(B2, 1)}
    assert singles == set(all_order_filters(B2))


def test_enumeration_matches_antichain_oracle():
    for label in ("A2", "A3", "B2", "B3", "G2", "D4"):
        rs = build_root_system(label)
        assert len(enumerate_geometric_filter_chains(rs, 1)) == len(oracles.antichains(rs))


def test_enumeration_deterministic():
    first = enumerate_geometric_filter_chains(B2, 2)
    second = enumerate_geometric_filter_chains(B2, 2)
    assert first == second


def test_mask_round_trip():
    mask = roots_to_mask(B2, [a1, a112])
    assert mask_to_roots(B2, mask) == (a1, a112)
