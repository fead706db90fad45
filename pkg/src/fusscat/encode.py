"""Stable encodings of roots, chains, alcoves and regions.

JSON values use plain lists and objects; compact string forms (used by
the TSV output and the command line) follow the hyperplane syntax
"coeffs:level" with ';' between items, '|' between chain levels and '-'
for an empty level.
"""

from __future__ import annotations

from .alcoves import Alcove, Hyperplane, minimal_alcove, pseudomaximal_alcove
from .chains import FilterChain, IdealChain
from .regions import Region, is_bounded
from .root_system import Root, RootSystem


def root_str(a: Root) -> str:
    return ",".join(str(c) for c in a)


def roots_str(roots) -> str:
    return ";".join(root_str(a) for a in roots) or "-"


def sorted_hyperplanes(rs: RootSystem, hyperplanes):
    return sorted(hyperplanes, key=lambda h: (rs.root_index(h.root), h.level))


def hyperplanes_str(rs: RootSystem, hyperplanes) -> str:
    return ";".join(
        f"{root_str(h.root)}:{h.level}" for h in sorted_hyperplanes(rs, hyperplanes)
    ) or "-"


def chain_str(chain) -> str:
    levels = chain.filters if isinstance(chain, FilterChain) else chain.ideals
    return "|".join(roots_str(level) for level in levels)


def chain_json(chain):
    levels = chain.filters if isinstance(chain, FilterChain) else chain.ideals
    return [[list(a) for a in level] for level in levels]


def hyperplanes_json(rs: RootSystem, hyperplanes):
    return [[list(h.root), h.level] for h in sorted_hyperplanes(rs, hyperplanes)]


def anchor_str(alcove: Alcove) -> str:
    return ",".join(str(c) for c in alcove.anchor)


def rvec_str(alcove: Alcove) -> str:
    return ",".join(str(r) for r in alcove.rvec)


def alcove_json(alcove: Alcove):
    return {
        "anchor": [str(c) for c in alcove.anchor],
        "rvec": [[list(a), r] for a, r in zip(alcove.rs.positive_roots, alcove.rvec)],
    }


def region_json(region: Region, with_alcoves: bool = True):
    rs = region.rs
    record = {
        "key": chain_json(region.key),
        "bounded": is_bounded(region),
        "floors": hyperplanes_json(rs, region.floors),
        "ceilings": hyperplanes_json(rs, region.ceilings),
    }
    if with_alcoves:
        record["minimal_alcove"] = alcove_json(minimal_alcove(region.key))
        record["pseudomaximal_alcove"] = alcove_json(pseudomaximal_alcove(region.ideal_key))
    return record


def upper_covers(rs: RootSystem, a: Root) -> tuple[Root, ...]:
    """Roots covering `a` in the root poset (no third root strictly between)."""
    i = rs.root_index(a)
    above = rs.up_closure_masks[i] & ~(1 << i)
    covers = []
    for j in range(rs.n_positive_roots):
        if above >> j & 1:
            between = rs.down_closure_masks[j] & above & ~(1 << j)
            if not between:
                covers.append(rs.positive_roots[j])
    return tuple(covers)
