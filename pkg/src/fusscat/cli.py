"""Command-line front end.

Subcommands: roots, enumerate, distribution, verify, theta, panyushev.
Exit codes: 0 success, 1 verification failure, 2 usage error.  All output
is deterministic: repeated runs produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import encode
from .bijection import (
    map_floors_to_ceilings,
    parse_hyperplane_set,
    verify_floor_ceiling_bijection,
)
from .chains import all_order_ideals
from .panyushev import antichain_of_ideal, panyushev_complement, panyushev_orbits
from .regions import distribution, enumerate_regions, is_bounded, with_ceilings, with_floors
from .root_system import build_root_system
from .verify import run_all

MAX_POSITIVE_ROOTS = 24
MAX_K = 3


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _system(args):
    try:
        return build_root_system(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _guard(rs, k, force: bool):
    if force:
        return
    if rs.n_positive_roots > MAX_POSITIVE_ROOTS or k > MAX_K:
        raise UsageError(
            f"{rs.label} with k={k} exceeds the desk-scale budget "
            f"(|roots| <= {MAX_POSITIVE_ROOTS}, k <= {MAX_K}); pass --force to override"
        )


def cmd_roots(args) -> int:
    rs = _system(args)
    rows = [
        {
            "coeffs": list(a),
            "height": rs.height(a),
            "covers": [list(b) for b in encode.upper_covers(rs, a)],
        }
        for a in rs.positive_roots
    ]
    if args.format == "json":
        print(_dump_json({"system": rs.label, "roots": rows}))
    elif args.format == "tsv":
        print("root\theight\tcovers")
        for a in rs.positive_roots:
            covers = encode.roots_str(encode.upper_covers(rs, a))
            print(f"{encode.root_str(a)}\t{rs.height(a)}\t{covers}")
    else:
        print(f"positive roots of {rs.label} ({rs.n_positive_roots})")
        for a in rs.positive_roots:
            covers = encode.roots_str(encode.upper_covers(rs, a))
            print(f"  {encode.root_str(a):<12} height {rs.height(a):<3} covered by {covers}")
    return 0


def _region_row(index: int, region) -> dict:
    record = encode.region_json(region)
    record["index"] = index
    return record


def cmd_enumerate(args) -> int:
    rs = _system(args)
    _guard(rs, args.k, args.force)
    regions = enumerate_regions(rs, args.k)
    bounded = sum(1 for r in regions if is_bounded(r))
    if args.format == "json":
        payload = {
            "system": rs.label,
            "k": args.k,
            "regions": [_region_row(i, r) for i, r in enumerate(regions)],
            "total": len(regions),
            "bounded": bounded,
        }
        print(_dump_json(payload))
    elif args.format == "tsv":
        from .alcoves import minimal_alcove, pseudomaximal_alcove

        print("index\tkey\tbounded\tfloors\tceilings\tmin_rvec\tmin_anchor\tpmax_rvec\tpmax_anchor")
        for i, r in enumerate(regions):
            a = minimal_alcove(r.key)
            b = pseudomaximal_alcove(r.ideal_key)
            print(
                f"{i}\t{encode.chain_str(r.key)}\t{int(is_bounded(r))}"
                f"\t{encode.hyperplanes_str(rs, r.floors)}"
                f"\t{encode.hyperplanes_str(rs, r.ceilings)}"
                f"\t{encode.rvec_str(a)}\t{encode.anchor_str(a)}"
                f"\t{encode.rvec_str(b)}\t{encode.anchor_str(b)}"
            )
        print(f"#summary\ttotal={len(regions)}\tbounded={bounded}")
    else:
        print(f"dominant regions of the {args.k}-Catalan arrangement of {rs.label}")
        for i, r in enumerate(regions):
            flag = "bounded" if is_bounded(r) else "unbounded"
            print(f"  [{i}] key {encode.chain_str(r.key)} ({flag})")
            print(f"      floors   {encode.hyperplanes_str(rs, r.floors)}")
            print(f"      ceilings {encode.hyperplanes_str(rs, r.ceilings)}")
        print(f"total {len(regions)}, bounded {bounded}")
    return 0


def cmd_distribution(args) -> int:
    rs = _system(args)
    _guard(rs, args.k, args.force)
    if not 1 <= args.height <= args.k:
        raise UsageError(f"height {args.height} outside 1..{args.k}")
    regions = enumerate_regions(rs, args.k)
    if args.both:
        fl = distribution(regions, "floors", args.height)
        cl = distribution(regions, "ceilings", args.height)
        equal = fl == cl
        if args.format == "json":
            print(_dump_json({
                "system": rs.label, "k": args.k, "height": args.height,
                "floors": {str(l): v for l, v in fl.items()},
                "ceilings": {str(l): v for l, v in cl.items()},
                "equal": equal,
            }))
        elif args.format == "tsv":
            print("count\tfloors\tceilings")
            for l in sorted(fl):
                print(f"{l}\t{fl[l]}\t{cl[l]}")
            print(f"#verdict\t{'EQUAL' if equal else 'UNEQUAL'}")
        else:
            print(f"{rs.label} k={args.k}: regions by number of height-{args.height} floors/ceilings")
            for l in sorted(fl):
                print(f"  {l}: floors {fl[l]:<6} ceilings {cl[l]}")
            print("EQUAL" if equal else "UNEQUAL")
        return 0 if equal else 1
    hist = distribution(regions, args.stat, args.height)
    if args.format == "json":
        print(_dump_json({
            "system": rs.label, "k": args.k, "stat": args.stat,
            "height": args.height,
            "histogram": {str(l): v for l, v in hist.items()},
        }))
    elif args.format == "tsv":
        print(f"count\t{args.stat}")
        for l in sorted(hist):
            print(f"{l}\t{hist[l]}")
    else:
        print(f"{rs.label} k={args.k}: regions by number of height-{args.height} {args.stat}")
        for l in sorted(hist):
            print(f"  {l}: {hist[l]}")
    return 0


def cmd_verify(args) -> int:
    rs = _system(args)
    _guard(rs, args.k, args.force)
    report = run_all(rs, args.k)
    if args.format == "json":
        print(_dump_json(report))
    elif args.format == "tsv":
        print("check\tok")
        for c in report["checks"]:
            print(f"{c['check']}\t{'pass' if c['ok'] else 'FAIL'}")
        print(f"#overall\t{'pass' if report['ok'] else 'FAIL'}")
    else:
        print(f"verifying {rs.label}, k={args.k} ({report['regions']} regions)")
        for c in report["checks"]:
            print(f"  {'PASS' if c['ok'] else 'FAIL'} {c['check']}")
        print("all checks passed" if report["ok"] else "FAILURES detected")
        if not report["ok"]:
            print(_dump_json([c for c in report["checks"] if not c["ok"]]))
    return 0 if report["ok"] else 1


def cmd_theta(args) -> int:
    rs = _system(args)
    _guard(rs, args.k, args.force)
    try:
        m = parse_hyperplane_set(rs, args.k, args.M)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    regions = enumerate_regions(rs, args.k)
    index_of = {r: i for i, r in enumerate(regions)}
    up = with_floors(regions, m)
    lo = with_ceilings(regions, m)
    rows = []
    for r in up:
        image = map_floors_to_ceilings(r, m)
        rows.append((index_of[r], r, index_of[image], image))
    if args.format == "json":
        print(_dump_json({
            "system": rs.label, "k": args.k,
            "M": encode.hyperplanes_json(rs, m),
            "U": len(up), "L": len(lo),
            "rows": [
                {"from": i, "from_key": encode.chain_json(r.key),
                 "to": j, "to_key": encode.chain_json(img.key)}
                for i, r, j, img in rows
            ],
        }))
    elif args.format == "tsv":
        print("from\tfrom_key\tto\tto_key")
        for i, r, j, img in rows:
            print(f"{i}\t{encode.chain_str(r.key)}\t{j}\t{encode.chain_str(img.key)}")
        print(f"#summary\tU={len(up)}\tL={len(lo)}")
    else:
        print(f"{rs.label} k={args.k}, M = {encode.hyperplanes_str(rs, m)}")
        for i, r, j, img in rows:
            print(f"  [{i}] {encode.chain_str(r.key)}  ->  [{j}] {encode.chain_str(img.key)}")
        print(f"|U(M)| = {len(up)}, |L(M)| = {len(lo)}")
    return 0


def cmd_panyushev(args) -> int:
    rs = _system(args)
    _guard(rs, 1, args.force)
    if args.orbits:
        orbits = panyushev_orbits(rs)
        if args.format == "json":
            payload = [
                [[list(a) for a in sorted(antichain_of_ideal(c))] for c in orbit]
                for orbit in orbits
            ]
            print(_dump_json({"system": rs.label, "orbits": payload}))
        elif args.format == "tsv":
            print("orbit\tposition\tantichain")
            for oi, orbit in enumerate(orbits):
                for pi, c in enumerate(orbit):
                    print(f"{oi}\t{pi}\t{encode.roots_str(sorted(antichain_of_ideal(c)))}")
        else:
            print(f"Panyushev complement orbits on ideals of {rs.label}")
            for oi, orbit in enumerate(orbits):
                cells = " -> ".join(
                    encode.roots_str(sorted(antichain_of_ideal(c))) for c in orbit
                )
                print(f"  orbit {oi} (size {len(orbit)}): {cells}")
        return 0
    rows = []
    for chain in all_order_ideals(rs):
        image = panyushev_complement(chain)
        rows.append((chain, image))
    if args.format == "json":
        print(_dump_json({
            "system": rs.label,
            "map": [
                {"ideal": [list(a) for a in c.ideals[0]],
                 "image": [list(a) for a in img.ideals[0]]}
                for c, img in rows
            ],
        }))
    elif args.format == "tsv":
        print("ideal\timage")
        for c, img in rows:
            print(f"{encode.roots_str(c.ideals[0])}\t{encode.roots_str(img.ideals[0])}")
    else:
        print(f"Panyushev complement on ideals of {rs.label}")
        for c, img in rows:
            print(f"  {encode.roots_str(c.ideals[0])}  ->  {encode.roots_str(img.ideals[0])}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusscat",
        description="Dominant regions of k-Catalan arrangements: enumeration, "
                    "floors/ceilings, the floor-ceiling bijection, Panyushev orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k=True):
        p.add_argument("--type", "-t", required=True, help="type label, e.g. B2 or A2xA1")
        if with_k:
            p.add_argument("--k", type=int, default=1, help="arrangement parameter (default 1)")
        p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
        p.add_argument("--force", action="store_true", help="override the desk-scale guard")

    p = sub.add_parser("roots", help="list the positive roots with heights and covers")
    common(p, with_k=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("enumerate", help="enumerate the dominant regions")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distribution", help="histogram of floors/ceilings at one height")
    common(p)
    p.add_argument("--stat", choices=("floors", "ceilings"), default="floors")
    p.add_argument("--height", type=int, default=1, help="hyperplane height r (default 1)")
    p.add_argument("--both", action="store_true",
                   help="print floors and ceilings side by side with a verdict")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("verify", help="run the verification suite (exit 1 on failure)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("theta", help="apply the floor-to-ceiling map over U(M)")
    common(p)
    p.add_argument("--M", default="", help='hyperplanes "coeffs:level;..." e.g. "0,1:1;2,1:2"')
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("panyushev", help="Panyushev complement map or orbits (k = 1)")
    common(p, with_k=False)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--orbits", action="store_true", help="print complement orbits")
    group.add_argument("--map", action="store_true", help="print the full complement map")
    p.set_defaults(func=cmd_panyushev)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 1) < 1:
        print("fusscat: k must be a positive integer", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fusscat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
