import random
from fractions import Fraction
from math import ceil

import pytest

from fusscat import (
    FilterChain,
    IdealChain,
    alcove_ceilings,
    alcove_floors,
    alcove_from_rvec,
    alcove_walls,
    build_root_system,
    complement,
    enumerate_geometric_filter_chains,
    fundamental_alcove,
    is_positive,
    maximal_alcove,
    minimal_alcove,
    pseudomaximal_alcove,
    reflect,
    shi_valid,
)
from fusscat.alcoves import Alcove, Hyperplane

B2 = build_root_system("B2")
A1 = build_root_system("A1")
a1, a2, a12, a112 = (1, 0), (0, 1), (1, 1), (2, 1)


def test_fundamental_alcove():
    for label in ("A1", "A2", "B2", "G2", "B3"):
        alcove = fundamental_alcove(build_root_system(label))
        assert all(r == 1 for r in alcove.rvec)
    assert fundamental_alcove(B2).anchor == (Fraction(1, 4), Fraction(1, 4))
    assert B2.pairing(fundamental_alcove(B2).anchor, a112) == Fraction(3, 4)
    mixed = fundamental_alcove(build_root_system("A2xA1"))
    assert mixed.anchor == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 2))


def test_shi_valid():
    assert shi_valid(B2, (1, 1, 1, 1))
    assert shi_valid(B2, (1, 1, 2, 2))
    assert not shi_valid(B2, (1, 1, 3, 3))
    assert not shi_valid(B2, (1, 1, 3, 4))
    with pytest.raises(ValueError):
        shi_valid(B2, (1, 1))


def test_reflect_rank_one():
    slab = fundamental_alcove(A1)
    image = reflect(slab, (1,), 1)
    assert image.rvec == (2,)
    assert Fraction(1) < image.anchor[0] < Fraction(2)


def test_reflect_highest_root_wall():
    image = reflect(fundamental_alcove(B2), a112, 1)
    assert image.rvec == (1, 1, 1, 2)  # adjacent: only that coordinate flips


def test_reflect_involution_random():
    rng = random.Random(7)
    alcove = fundamental_alcove(B2)
    for _ in range(100):
        root = B2.positive_roots[rng.randrange(4)]
        level = rng.randrange(-2, 4)
        mirrored = reflect(alcove, root, level)
        assert reflect(mirrored, root, level) == alcove
        assert shi_valid(B2, mirrored.rvec)
        alcove = mirrored  # wander the arrangement


def test_anchor_rvec_coherence():
    rng = random.Random(11)
    alcove = fundamental_alcove(B2)
    for _ in range(50):
        root = B2.positive_roots[rng.randrange(4)]
        alcove = reflect(alcove, root, rng.randrange(0, 3))
        for a, r in zip(B2.positive_roots, alcove.rvec):
            p = B2.pairing(alcove.anchor, a)
            assert r - 1 < p < r and p.denominator != 1
            assert ceil(p) == r


def test_alcove_from_rvec():
    assert alcove_from_rvec(B2, (1, 1, 1, 1)) == fundamental_alcove(B2)
    alcove = alcove_from_rvec(B2, (1, 1, 2, 2))
    assert alcove.rvec == (1, 1, 2, 2)
    far = alcove_from_rvec(A1, (5,))
    assert Fraction(4) < far.anchor[0] < Fraction(5)
    with pytest.raises(ValueError):
        alcove_from_rvec(B2, (1, 1, 3, 3))


def test_minimal_alcove_examples():
    assert minimal_alcove(FilterChain.from_roots(B2, [[]])) == fundamental_alcove(B2)
    chain = FilterChain.from_roots(B2, [[a12, a112]])
    assert minimal_alcove(chain).rvec == (1, 1, 2, 2)
    full = FilterChain.from_roots(B2, [list(B2.positive_roots)] * 2)
    assert minimal_alcove(full).rvec == (3, 3, 5, 7)


def test_maximal_alcove_examples():
    chain = IdealChain.from_roots(B2, [[a1, a2]])
    assert maximal_alcove(chain).rvec == (1, 1, 2, 3)
    everything = IdealChain.from_roots(B2, [list(B2.positive_roots)])
    assert maximal_alcove(everything).rvec == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        maximal_alcove(IdealChain.from_roots(B2, [[a1]]))


def test_pseudomaximal_examples():
    assert pseudomaximal_alcove(IdealChain.from_roots(A1, [[]])).rvec == (2,)
    assert pseudomaximal_alcove(IdealChain.from_roots(B2, [[]])).rvec == (2, 2, 4, 6)


def test_pseudomaximal_equals_maximal_when_positive():
    for label, k in (("A2", 2), ("B2", 2), ("G2", 1)):
        rs = build_root_system(label)
        for chain in enumerate_geometric_filter_chains(rs, k):
            idl = complement(chain)
            if is_positive(idl):
                assert pseudomaximal_alcove(idl) == maximal_alcove(idl)


def test_walls_of_fundamental_alcove():
    walls = alcove_walls(fundamental_alcove(B2))
    assert set(walls) == {
        (a1, 0, "lower"),
        (a2, 0, "lower"),
        (a112, 1, "upper"),
    }
    mixed = fundamental_alcove(build_root_system("A2xA1"))
    uppers = {(root, level) for root, level, side in alcove_walls(mixed) if side == "upper"}
    assert uppers == {((1, 1, 0), 1), ((0, 0, 1), 1)}  # one ceiling per factor


def test_walls_rank_one_slab():
    slab = alcove_from_rvec(A1, (2,))
    assert set(alcove_walls(slab)) == {((1,), 1, "lower"), ((1,), 2, "upper")}
    assert alcove_floors(slab) == {Hyperplane((1,), 1)}
    assert alcove_ceilings(slab) == {Hyperplane((1,), 2)}


def test_walls_flip_validity_example():
    alcove = alcove_from_rvec(B2, (1, 1, 2, 2))
    walls = alcove_walls(alcove)
    assert len(walls) == 3


def test_floors_ceilings_of_fundamental():
    alcove = fundamental_alcove(B2)
    assert alcove_floors(alcove) == frozenset()
    assert alcove_ceilings(alcove) == {Hyperplane(a112, 1)}


def test_floors_require_dominant():
    below = reflect(fundamental_alcove(B2), a1, 0)
    assert not below.is_dominant
    with pytest.raises(ValueError):
        alcove_floors(below)
    with pytest.raises(ValueError):
        alcove_ceilings(below)


def test_dominant_alcove_facet_budget():
    # every dominant alcove: at most rank floors/ceilings, at least one
    # ceiling, and at least one floor or chamber wall
    for label, k in (("B2", 2), ("A2", 2), ("G2", 1)):
        rs = build_root_system(label)
        for chain in enumerate_geometric_filter_chains(rs, k):
            for alcove in (minimal_alcove(chain), pseudomaximal_alcove(complement(chain))):
                floors = alcove_floors(alcove)
                ceilings = alcove_ceilings(alcove)
                assert len(floors) <= rs.rank
                assert len(ceilings) <= rs.rank
                assert len(ceilings) >= 1
                lowers = [w for w in alcove_walls(alcove) if w[2] == "lower"]
                assert len(lowers) >= 1


def test_alcove_equality_by_rvec():
    a = alcove_from_rvec(B2, (1, 1, 2, 2))
    b = reflect(reflect(a, a1, 1), a1, 1)
    assert a == b and hash(a) == hash(b)


def test_anchor_on_hyperplane_rejected():
    with pytest.raises(ValueError):
        Alcove(B2, (Fraction(1), Fraction(1, 3)))
