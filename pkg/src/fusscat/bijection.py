"""The floor/ceiling bijection on dominant regions.

Given a set M of arrangement hyperplanes, the regions with all of M among
their floors map bijectively onto the regions with all of M among their
ceilings.  The map folds the minimal alcove of the source region into the
chamber on the other side of M, using only reflections in the hyperplanes
of M; the composite is the longest element of the finite reflection group
W' generated by those reflections, realized action-only.  The inverse
folds the pseudomaximal alcove back.

Termination is certified: each reflection reduces by exactly one the
number of W'-arrangement hyperplanes (the reflection orbit of M)
separating the alcove from the target chamber.
"""

from __future__ import annotations

from itertools import combinations

from .alcoves import Alcove, Hyperplane, minimal_alcove, pseudomaximal_alcove, reflect
from .regions import (
    Region,
    enumerate_regions,
    region_from_alcove,
    with_ceilings,
    with_exact_ceilings,
    with_exact_floors,
    with_floors,
)
from .root_system import RootSystem


def hyperplane_set(rs: RootSystem, k: int, items) -> frozenset[Hyperplane]:
    """Validate a collection of hyperplanes: positive roots, levels in 1..k."""
    out = set()
    for h in items:
        if not isinstance(h, Hyperplane):
            h = Hyperplane(tuple(h[0]), int(h[1]))
        rs.root_index(h.root)
        if not 1 <= h.level <= k:
            raise ValueError(f"hyperplane level {h.level} outside 1..{k}")
        out.add(h)
    return frozenset(out)


def parse_hyperplane_set(rs: RootSystem, k: int, text: str) -> frozenset[Hyperplane]:
    """Parse "c1,...,cn:level;..." into a hyperplane set ("" is empty)."""
    text = text.strip()
    if not text:
        return frozenset()
    items = []
    for part in text.split(";"):
        try:
            coeffs, level = part.split(":")
            root = tuple(int(c) for c in coeffs.split(","))
            items.append(Hyperplane(root, int(level)))
        except (ValueError, TypeError) as exc:
            raise ValueError(f"cannot parse hyperplane {part!r}: {exc}") from None
    return hyperplane_set(rs, k, items)


def sort_hyperplanes(rs: RootSystem, hyperplanes) -> tuple[Hyperplane, ...]:
    return tuple(sorted(hyperplanes, key=lambda h: (rs.root_index(h.root), h.level)))


def _reflect_hyperplane(rs: RootSystem, mirror, target):
    """Image of hyperplane `target` under the reflection in `mirror`,
    normalized to a positive root (both as (root index, level) pairs)."""
    mi, ml = mirror
    ti, tl = target
    alpha = rs.positive_roots[mi]
    beta = rs.positive_roots[ti]
    c = rs.coroot_pairing(alpha, beta)
    image = tuple(b - c * a for a, b in zip(alpha, beta))
    level = tl - ml * c
    if any(x < 0 for x in image):
        image = tuple(-x for x in image)
        level = -level
    return rs.root_index(image), level


def _reflection_orbit(rs: RootSystem, hyperplanes) -> frozenset[tuple[int, int]]:
    """Closure of M under reflections in its own members: the reflecting
    hyperplanes of the group W' generated by M.

    Rejects sets that do not generate a finite group with the origin in an
    open chamber: two parallel hyperplanes in the orbit generate a
    translation, and a level <= 0 would put a reflecting hyperplane on or
    below the origin.
    """
    orbit = {(rs.root_index(h.root), h.level) for h in hyperplanes}

    def check(members):
        levels_by_root: dict[int, int] = {}
        for i, level in members:
            if level <= 0:
                raise ValueError("hyperplanes do not bound a chamber away from the origin")
            if levels_by_root.setdefault(i, level) != level:
                raise ValueError("hyperplanes generate an infinite reflection group")

    check(orbit)
    while True:
        new = set()
        for mirror in orbit:
            for target in orbit:
                img = _reflect_hyperplane(rs, mirror, target)
                if img not in orbit:
                    new.add(img)
        if not new:
            return frozenset(orbit)
        orbit |= new
        check(orbit)


def fold(alcove: Alcove, hyperplanes, orientation: str) -> Alcove:
    """Fold an alcove through the hyperplanes of M to the other side.

    orientation "below": the alcove starts strictly above every hyperplane
    of M and ends strictly below all of them; "above" is the reverse.  At
    each step the violated hyperplane smallest in (root index, level) is
    used as the mirror.  Folding a dominant alcove keeps every
    intermediate alcove dominant (asserted).
    """
    if orientation not in ("below", "above"):
        raise ValueError("orientation must be 'below' or 'above'")
    rs = alcove.rs
    mirrors = sort_hyperplanes(rs, hyperplanes)
    if not mirrors:
        return alcove

    def above(a: Alcove, h: Hyperplane) -> bool:
        return rs.pairing(a.anchor, h.root) > h.level

    wrong_side = above if orientation == "below" else (lambda a, h: not above(a, h))
    for h in mirrors:
        if not wrong_side(alcove, h):
            raise ValueError(
                f"alcove is not strictly {'above' if orientation == 'below' else 'below'} {h!r}"
            )

    orbit = _reflection_orbit(rs, mirrors)

    def separation(a: Alcove) -> int:
        count = 0
        for i, level in orbit:
            p = rs.pairing(a.anchor, rs.positive_roots[i])
            on_target_side = p < level if orientation == "below" else p > level
            count += 0 if on_target_side else 1
        return count

    # Folding below from a dominant alcove stays dominant at every step;
    # folding above only promises a dominant endpoint when M consists of
    # facets of the start alcove, so no per-step claim is made there.
    keep_dominant = alcove.is_dominant and orientation == "below"
    sep = separation(alcove)
    while True:
        mirror = next((h for h in mirrors if wrong_side(alcove, h)), None)
        if mirror is None:
            break
        alcove = reflect(alcove, mirror.root, mirror.level)
        if keep_dominant:
            assert alcove.is_dominant, "fold left the dominant chamber"
        new_sep = separation(alcove)
        assert new_sep == sep - 1, "reflection crossed more than one orbit hyperplane"
        sep = new_sep
    assert sep == 0
    return alcove


def map_floors_to_ceilings(region: Region, hyperplanes) -> Region:
    """Send a region with all of M among its floors to the region of the
    folded minimal alcove; the image has all of M among its ceilings."""
    rs, k = region.rs, region.k
    m = hyperplane_set(rs, k, hyperplanes)
    if not m <= region.floors:
        raise ValueError("hyperplanes are not all floors of the region")
    image = region_from_alcove(fold(minimal_alcove(region.key), m, "below"), k)
    assert m <= image.ceilings, "folded image is missing a ceiling"
    return image


def map_ceilings_to_floors(region: Region, hyperplanes) -> Region:
    """Inverse map: fold the pseudomaximal alcove of a region with all of
    M among its ceilings back above M."""
    rs, k = region.rs, region.k
    m = hyperplane_set(rs, k, hyperplanes)
    if not m <= region.ceilings:
        raise ValueError("hyperplanes are not all ceilings of the region")
    image = region_from_alcove(fold(pseudomaximal_alcove(region.ideal_key), m, "above"), k)
    assert m <= image.floors, "folded image is missing a floor"
    return image


def all_hyperplane_sets(rs: RootSystem, k: int, m_max: int):
    """All hyperplane sets of size <= m_max, smallest first, each sorted."""
    pool = [Hyperplane(a, r) for a in rs.positive_roots for r in range(1, k + 1)]
    for size in range(m_max + 1):
        for combo in combinations(pool, size):
            yield frozenset(combo)


def verify_floor_ceiling_bijection(rs: RootSystem, k: int, m_max: int | None = None) -> dict:
    """Sweep every hyperplane set M with |M| <= m_max (default: the rank)
    and check that the two maps are mutually inverse bijections between
    the regions with floors containing M and those with ceilings
    containing M, and that the exact-match counts agree as well.
    """
    if m_max is None:
        m_max = rs.rank
    regions = enumerate_regions(rs, k)
    entries = []
    for m in all_hyperplane_sets(rs, k, m_max):
        up = with_floors(regions, m)
        lo = with_ceilings(regions, m)
        ok = len(up) == len(lo)
        ok = ok and len(with_exact_floors(regions, m)) == len(with_exact_ceilings(regions, m))
        if ok:
            try:
                images = [map_floors_to_ceilings(r, m) for r in up]
                ok = all(img in lo for img in images)
                ok = ok and len(set(images)) == len(images)
                ok = ok and all(
                    map_ceilings_to_floors(img, m) == r for r, img in zip(up, images)
                )
                ok = ok and all(
                    map_floors_to_ceilings(map_ceilings_to_floors(r, m), m) == r for r in lo
                )
            except (ValueError, AssertionError):
                ok = False
        entries.append(
            {
                "M": [[list(h.root), h.level] for h in sort_hyperplanes(rs, m)],
                "U": len(up),
                "L": len(lo),
                "U_exact": len(with_exact_floors(regions, m)),
                "L_exact": len(with_exact_ceilings(regions, m)),
                "bijective": ok,
            }
        )
    return {
        "system": rs.label,
        "k": k,
        "m_max": m_max,
        "sets": len(entries),
        "ok": all(e["bijective"] for e in entries),
        "entries": entries,
    }
