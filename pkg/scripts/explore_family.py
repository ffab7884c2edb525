#!/usr/bin/env python3
"""Build a parametric family of multiple structures and print its invariants.

Usage:
    python3 scripts/explore_family.py primitive --param nu=3 --param n=2
    python3 scripts/explore_family.py nontypeI --param a=1 --param b=2 --char 5
"""

import argparse
import sys

from multischeme.families import build_family
from multischeme.parse import format_ideal


def _parse_param(text):
    key, _, value = text.partition("=")
    if value in ("True", "true"):
        return key, True
    if value in ("False", "false"):
        return key, False
    return key, int(value)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("family")
    parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    parser.add_argument("--char", type=int, default=0)
    args = parser.parse_args(argv)

    params = dict(_parse_param(p) for p in args.param)
    fam = build_family(args.family, char=args.char, **params)
    print("family %s %r: %d structure(s)" % (fam.name, fam.params, len(fam.structures)))
    for k, (st, expect) in enumerate(zip(fam.structures, fam.manifest)):
        print("-- structure %d" % k)
        print("   ideal        %s" % format_ideal(st.ideal.minimal_gens()))
        print("   multiplicity %d (expected %s)" % (st.multiplicity(), expect.get("multiplicity")))
        cm, locus = st.locally_cm()
        print("   locally CM   %s (expected %s)" % (cm, expect.get("locally_cm")))
        if not cm:
            print("   non-CM locus %s" % format_ideal(locus.minimal_gens()))
        print("   hilbert      %s" % st.hilbert_polynomial())
    return 0


if __name__ == "__main__":
    sys.exit(main())
