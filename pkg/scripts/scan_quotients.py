#!/usr/bin/env python3
"""Scan a catalog structure's conormal-style layer module for line-bundle
quotients over a window of twists, printing one verdict per twist.

Usage:
    python3 scripts/scan_quotients.py thm-3.6/4 --lo -4 --hi 0 --samples 100
"""

import argparse
import sys

from multischeme.catalog import load_catalog
from multischeme.quotients import line_bundle_quotients


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("entry", help="catalog entry id, e.g. thm-3.6/4")
    parser.add_argument("--layer", type=int, default=0, help="filtration layer index")
    parser.add_argument("--lo", type=int, default=-4)
    parser.add_argument("--hi", type=int, default=0)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    entry = next((e for e in load_catalog() if e.id == args.entry), None)
    if entry is None:
        print("unknown catalog entry %r" % args.entry, file=sys.stderr)
        return 3
    st = entry.structure()
    filt = st.filtration()
    if not (0 <= args.layer < len(filt.layers)):
        print("layer index out of range (0..%d)" % (len(filt.layers) - 1), file=sys.stderr)
        return 3
    layer = filt.layers[args.layer]
    print(
        "entry %s layer %d: rank %d, generator twists %s"
        % (entry.id, args.layer, layer.rank, layer.twists())
    )
    for v in line_bundle_quotients(
        layer, (args.lo, args.hi), samples=args.samples, seed=args.seed
    ):
        line = "twist %3d  dim %2d  %s" % (v.twist, v.dim, v.verdict)
        if v.certificate:
            line += "  [%s]" % v.certificate["kind"]
        if v.samples_tested:
            line += "  (%d samples)" % v.samples_tested
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
