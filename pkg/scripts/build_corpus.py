#!/usr/bin/env python3
"""Regenerate the curated corpus of group files under corpus/.

Deterministic: builders produce fixed generator lists, so re-running leaves
committed files byte-identical.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from gds.builders import builtin_group, direct_product
from gds.corpus import group_file_from_group, write_group_file

# (spec, tags); product entries may nest via tuples
ENTRIES = [
    ("cyclic:1", ["abelian", "trivial"]),
    ("cyclic:2", ["abelian"]),
    ("cyclic:3", ["abelian"]),
    ("cyclic:4", ["abelian"]),
    ("cyclic:5", ["abelian"]),
    ("cyclic:6", ["abelian"]),
    ("cyclic:7", ["abelian"]),
    ("cyclic:8", ["abelian"]),
    ("cyclic:9", ["abelian"]),
    ("cyclic:10", ["abelian"]),
    ("cyclic:12", ["abelian"]),
    ("cyclic:15", ["abelian"]),
    ("cyclic:16", ["abelian"]),
    ("cyclic:30", ["abelian"]),
    ("product:cyclic:2,cyclic:2", ["abelian"]),
    ("product:cyclic:2,cyclic:4", ["abelian"]),
    ("product:cyclic:3,cyclic:3", ["abelian"]),
    ("product:cyclic:2,cyclic:6", ["abelian"]),
    ("product:cyclic:4,cyclic:4", ["abelian"]),
    ("dihedral:4", ["extremal"]),  # order 8
    ("dihedral:5", []),  # order 10
    ("dihedral:6", []),
    ("dihedral:7", []),
    ("dihedral:8", []),
    ("dihedral:9", []),
    ("dihedral:10", []),
    ("dihedral:12", []),  # order 24, sits exactly at d = 3/8
    ("symmetric:3", ["extremal"]),
    ("symmetric:4", []),
    ("symmetric:5", []),
    ("symmetric:6", []),
    ("alternating:4", ["extremal"]),
    ("alternating:5", ["simple", "extremal"]),
    ("alternating:6", ["simple"]),
    ("quaternion:8", ["extremal"]),
    ("extraspecial:27:3", []),
    ("extraspecial:27:9", []),
    ("sl2:3", ["extremal"]),
    ("sl2:5", ["extremal"]),
    ("sl2:7", []),
    ("sl2:9", []),
    ("sl2:11", []),
    ("sl2:13", []),
    ("psl2:4", ["simple"]),
    ("psl2:5", ["simple"]),
    ("psl2:7", ["simple"]),
    ("psl2:8", ["simple"]),
    ("psl2:9", ["simple"]),
    ("psl2:11", ["simple"]),
    ("psl2:13", ["simple"]),
    ("psl3:3", ["simple"]),
    ("pgl2:5", []),
    ("pgl2:7", []),
    ("pgl2:9", []),
    ("pgl2:11", []),
    ("product:alternating:5,cyclic:2", ["extremal"]),
    ("product:symmetric:3,cyclic:2", []),
    ("product:symmetric:3,cyclic:3", []),
    ("product:symmetric:3,symmetric:3", []),
    ("product:quaternion:8,cyclic:2", []),
    ("product:quaternion:8,cyclic:3", []),
    ("product:dihedral:4,cyclic:2", []),
    ("product:alternating:4,cyclic:2", []),
    ("product:alternating:4,cyclic:3", []),
    ("product:dihedral:5,cyclic:2", []),
    ("product:cyclic:2,symmetric:4", []),
    ("product:quaternion:8,quaternion:8", []),
]

# deeper products than the two-factor builtin syntax supports
def _c2_cubed():
    g = direct_product(
        builtin_group("product:cyclic:2,cyclic:2"), builtin_group("cyclic:2")
    )
    g.name = "C2xC2xC2"
    return g


EXTRA_BUILDERS = [(_c2_cubed, ["abelian"])]


def filename_for(name: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_").lower()
    return f"{slug}.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out", default=Path(__file__).resolve().parent.parent / "corpus"
    )
    args = parser.parse_args()
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    groups = [(builtin_group(spec), tags) for spec, tags in ENTRIES]
    groups += [(build(), tags) for build, tags in EXTRA_BUILDERS]
    names = set()
    for G, tags in groups:
        if G.name in names:
            raise SystemExit(f"duplicate corpus name {G.name}")
        names.add(G.name)
        gf = group_file_from_group(G, tags=tags)
        write_group_file(gf, out_dir / filename_for(G.name))
    print(f"wrote {len(groups)} group files to {out_dir}")
    orders = sorted(G.order for G, _ in groups)
    print(f"orders: min {orders[0]}, max {orders[-1]}, count {len(orders)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
