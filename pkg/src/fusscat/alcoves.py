"""Exact-rational alcove geometry of the affine Coxeter arrangement.

An alcove is an open simplex cut out by the hyperplanes <x, a> = r over
all positive roots a and integers r.  It is represented by an exact
rational interior point (the anchor, authoritative) together with the
derived integer vector rvec, where rvec[a] is the unique integer r with
r - 1 < <x, a> < r on the alcove.

An integer vector arises from an alcove exactly when it satisfies the
two-sided wall-crossing criterion

    r_a + r_b - 1 <= r_{a+b} <= r_a + r_b    whenever a, b, a+b are roots,

which also drives the wall tests: flipping one coordinate by +-1 yields a
valid vector precisely when the corresponding hyperplane supports a facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .chains import (
    INFINITY,
    FilterChain,
    IdealChain,
    max_level_sums,
    min_level_sums,
    positive_extension,
)
from .root_system import Point, Root, RootSystem


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane <x, root> = level with level >= 1.

    Level-0 hyperplanes are the dominant chamber walls; they are reported
    separately by :func:`alcove_walls` and never appear in floor, ceiling
    or fold input sets.
    """

    root: Root
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("hyperplane level must be >= 1")

    def __repr__(self):
        return f"H({','.join(str(c) for c in self.root)}; {self.level})"


class Alcove:
    """Open alcove with exact anchor and cached integer coordinates.

    Two alcoves are equal iff they are the same open simplex, i.e. their
    rvecs agree; anchors are not compared.
    """

    __slots__ = ("rs", "anchor", "rvec")

    def __init__(self, rs: RootSystem, anchor: Point):
        coords = tuple(Fraction(c) for c in anchor)
        if len(coords) != rs.rank:
            raise ValueError("anchor has wrong dimension")
        rvec = []
        for a in rs.positive_roots:
            p = rs.pairing(coords, a)
            if p.denominator == 1:
                raise ValueError(f"anchor lies on a hyperplane of {a}")
            rvec.append(ceil(p))
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "anchor", coords)
        object.__setattr__(self, "rvec", tuple(rvec))

    def __setattr__(self, name, value):
        raise AttributeError("Alcove is immutable")

    def __eq__(self, other):
        if not isinstance(other, Alcove):
            return NotImplemented
        return self.rs is other.rs and self.rvec == other.rvec

    def __hash__(self):
        return hash((id(self.rs), self.rvec))

    def __repr__(self):
        return f"Alcove({self.rs.label}, rvec={self.rvec})"

    def level_of(self, a: Root) -> int:
        return self.rvec[self.rs.root_index(a)]

    @property
    def is_dominant(self) -> bool:
        return all(r >= 1 for r in self.rvec)


def fundamental_alcove(rs: RootSystem) -> Alcove:
    """The alcove at the origin corner of the dominant chamber.

    Its anchor has <x, a_i> = 1/h for each simple root, h the Coxeter
    number of the factor of a_i; every rvec entry is 1.
    """
    coords = []
    for f, (lo, hi) in enumerate(rs.factor_spans):
        coords.extend([Fraction(1, rs.coxeter_numbers[f])] * (hi - lo))
    alcove = Alcove(rs, tuple(coords))
    assert all(r == 1 for r in alcove.rvec)
    return alcove


def shi_valid(rs: RootSystem, rvec) -> bool:
    """Two-sided wall-crossing criterion over every sum-table triple."""
    rvec = tuple(rvec)
    if len(rvec) != rs.n_positive_roots:
        raise ValueError("rvec has wrong length")
    for t, pairs in enumerate(rs.sum_table):
        for i, j in pairs:
            if not rvec[i] + rvec[j] - 1 <= rvec[t] <= rvec[i] + rvec[j]:
                return False
    return True


def reflect(alcove: Alcove, root: Root, level: int) -> Alcove:
    """Image of the alcove under the affine reflection in <x, root> = level.

    Any integer level is allowed (level 0 reflects through a chamber
    wall).  The result's rvec is recomputed from the reflected anchor.
    """
    rs = alcove.rs
    t = rs.pairing(alcove.anchor, root) - level
    row = rs.coroot_row(root)
    anchor = tuple(c - t * w for c, w in zip(alcove.anchor, row))
    return Alcove(rs, anchor)


def alcove_from_rvec(rs: RootSystem, rvec) -> Alcove:
    """The unique alcove with the given integer coordinates.

    Walks a gallery from the fundamental alcove: at each step it crosses
    the facet, smallest in (root index, level), whose hyperplane separates
    the current alcove from the target.  Each step reduces the number of
    separating hyperplanes by exactly one.
    """
    target = tuple(rvec)
    if not shi_valid(rs, target):
        raise ValueError("rvec does not satisfy the wall-crossing criterion")
    alcove = fundamental_alcove(rs)
    separation = sum(abs(a - b) for a, b in zip(alcove.rvec, target))
    while alcove.rvec != target:
        step = None
        for i in range(rs.n_positive_roots):
            cur, tgt = alcove.rvec[i], target[i]
            if cur == tgt:
                continue
            delta = 1 if tgt > cur else -1
            level = cur if delta == 1 else cur - 1
            flipped = list(alcove.rvec)
            flipped[i] += delta
            if shi_valid(rs, flipped):
                cand = (i, level, delta)
                if step is None or (cand[0], cand[1]) < (step[0], step[1]):
                    step = cand
        assert step is not None, "no separating facet found"
        i, level, delta = step
        nxt = reflect(alcove, rs.positive_roots[i], level)
        expected = list(alcove.rvec)
        expected[i] += delta
        assert nxt.rvec == tuple(expected), "crossed more than one hyperplane"
        alcove = nxt
        separation -= 1
    assert separation == 0
    return alcove


def minimal_alcove(chain: FilterChain) -> Alcove:
    """The alcove of the region of a geometric filter chain closest to the
    origin: rvec[a] = (max level sum of a) + 1."""
    rvec = tuple(v + 1 for v in max_level_sums(chain))
    assert shi_valid(chain.rs, rvec), "minimal alcove coordinates invalid"
    return alcove_from_rvec(chain.rs, rvec)


def maximal_alcove(chain: IdealChain) -> Alcove:
    """The alcove of the bounded region of a positive geometric ideal
    chain furthest from the origin: rvec[a] = min level sum of a."""
    sums = min_level_sums(chain)
    if any(v == INFINITY for v in sums):
        raise ValueError("chain is not positive: some root has no decomposition")
    rvec = tuple(int(v) for v in sums)
    assert shi_valid(chain.rs, rvec), "maximal alcove coordinates invalid"
    return alcove_from_rvec(chain.rs, rvec)


def pseudomaximal_alcove(chain: IdealChain) -> Alcove:
    """Maximal alcove of the positive extension of the chain; equals the
    maximal alcove whenever the chain itself is positive."""
    return maximal_alcove(positive_extension(chain))


def alcove_walls(alcove: Alcove) -> tuple[tuple[Root, int, str], ...]:
    """The facets of the alcove as (root, level, side) triples.

    side is "upper" for the facet on <x, root> = rvec[root] and "lower"
    for the one on level rvec[root] - 1; a lower level of 0 is a chamber
    wall.  A candidate hyperplane supports a facet iff flipping that rvec
    entry stays valid.  The facet count is rank + (number of factors).
    """
    rs = alcove.rs
    walls = []
    rvec = list(alcove.rvec)
    for i, root in enumerate(rs.positive_roots):
        for delta, side in ((-1, "lower"), (1, "upper")):
            rvec[i] += delta
            if shi_valid(rs, rvec):
                level = alcove.rvec[i] - 1 if delta == -1 else alcove.rvec[i]
                walls.append((root, level, side))
            rvec[i] -= delta
    assert len(walls) == rs.rank + rs.n_factors, "wrong facet count"
    return tuple(walls)


def alcove_floors(alcove: Alcove) -> frozenset[Hyperplane]:
    """Walls separating a dominant alcove from the origin (level >= 1)."""
    if not alcove.is_dominant:
        raise ValueError("floors are defined for dominant alcoves only")
    return frozenset(
        Hyperplane(root, level)
        for root, level, side in alcove_walls(alcove)
        if side == "lower" and level >= 1
    )


def alcove_ceilings(alcove: Alcove) -> frozenset[Hyperplane]:
    """Walls of a dominant alcove with the origin on the alcove's side."""
    if not alcove.is_dominant:
        raise ValueError("ceilings are defined for dominant alcoves only")
    return frozenset(
        Hyperplane(root, level)
        for root, level, side in alcove_walls(alcove)
        if side == "upper"
    )
