"""Verification suite behind the `verify` command.

Each check returns a record {"check", "ok", "detail"}; the comparators
take region lists so the self-test can feed deliberately corrupted data.
"""

from __future__ import annotations

from .alcoves import alcove_ceilings, alcove_floors, minimal_alcove, pseudomaximal_alcove
from .bijection import verify_floor_ceiling_bijection
from .chains import all_order_ideals
from .encode import chain_str, hyperplanes_str
from .panyushev import panyushev_complement, panyushev_via_regions
from .regions import distribution, enumerate_regions, joint_profile
from .root_system import RootSystem


def check_bijection_sweep(rs: RootSystem, k: int) -> dict:
    """Theorem coverage: floor/ceiling bijection and the inclusion and
    exact-match count identities, over every M with |M| <= rank."""
    report = verify_floor_ceiling_bijection(rs, k)
    bad = [e for e in report["entries"] if not e["bijective"]]
    return {
        "check": "floor_ceiling_bijection",
        "ok": not bad,
        "detail": {"sets": report["sets"], "failures": bad},
    }


def check_joint_profiles(regions) -> dict:
    """Joint per-height floor profile equals the ceiling profile."""
    fl = joint_profile(regions, "floors")
    cl = joint_profile(regions, "ceilings")
    return {
        "check": "joint_profiles_equal",
        "ok": fl == cl,
        "detail": {"floors": {str(key): v for key, v in fl.items()},
                   "ceilings": {str(key): v for key, v in cl.items()}},
    }


def check_height_distributions(regions) -> dict:
    """For every height r, the floor and ceiling histograms agree."""
    if not regions:
        return {"check": "height_distributions_equal", "ok": True, "detail": {}}
    k = regions[0].k
    mismatches = {}
    for r in range(1, k + 1):
        fl = distribution(regions, "floors", r)
        cl = distribution(regions, "ceilings", r)
        if fl != cl:
            mismatches[r] = {"floors": fl, "ceilings": cl}
    return {
        "check": "height_distributions_equal",
        "ok": not mismatches,
        "detail": mismatches,
    }


def check_two_route(regions) -> dict:
    """Floors from filter-side indecomposables equal the floors of the
    minimal alcove; ceilings from ideal-side indecomposables equal the
    ceilings of the pseudomaximal alcove at heights up to k."""
    failures = []
    for region in regions:
        rs, k = region.rs, region.k
        floors = alcove_floors(minimal_alcove(region.key))
        ceilings = frozenset(
            h for h in alcove_ceilings(pseudomaximal_alcove(region.ideal_key))
            if h.level <= k
        )
        if floors != region.floors or ceilings != region.ceilings:
            failures.append(
                {
                    "key": chain_str(region.key),
                    "floors": hyperplanes_str(rs, region.floors),
                    "alcove_floors": hyperplanes_str(rs, floors),
                    "ceilings": hyperplanes_str(rs, region.ceilings),
                    "alcove_ceilings": hyperplanes_str(rs, ceilings),
                }
            )
    return {"check": "indecomposables_match_alcoves", "ok": not failures,
            "detail": {"failures": failures}}


def check_panyushev(rs: RootSystem) -> dict:
    """Complement-through-regions agreement and bijectivity on ideals."""
    ideals = all_order_ideals(rs)
    failures = []
    images = set()
    for chain in ideals:
        try:
            image = panyushev_via_regions(chain)
        except AssertionError:
            failures.append(chain_str(chain))
            continue
        images.add(image.masks[0])
    permutation = len(images) == len(ideals)
    ok = not failures and permutation
    return {
        "check": "panyushev_complement",
        "ok": ok,
        "detail": {"ideals": len(ideals), "failures": failures,
                   "is_permutation": permutation},
    }


def run_all(rs: RootSystem, k: int) -> dict:
    regions = enumerate_regions(rs, k)
    checks = [
        check_bijection_sweep(rs, k),
        check_joint_profiles(regions),
        check_height_distributions(regions),
        check_two_route(regions),
    ]
    if k == 1:
        checks.append(check_panyushev(rs))
    return {
        "system": rs.label,
        "k": k,
        "regions": len(regions),
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }
