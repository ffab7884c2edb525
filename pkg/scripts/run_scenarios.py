#!/usr/bin/env python3
"""Run verification scenarios and write a JSON report.

Usage:
    python3 scripts/run_scenarios.py [--only ID ...] [--char p] [--seed n]
                                     [--out report.json]
"""

import argparse
import sys

from multischeme.scenarios import (
    ScenarioOptions,
    emit_report,
    run_scenario,
    scenario_ids,
)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--only", nargs="*", default=None, help="scenario ids")
    parser.add_argument("--char", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="write JSON report here")
    args = parser.parse_args(argv)

    targets = args.only or scenario_ids()
    opts = ScenarioOptions(char=args.char, seed=args.seed)
    results = []
    for sid in targets:
        result = run_scenario(sid, opts)
        print("%-12s %s (%.2fs)" % (result.status, sid, result.elapsed), flush=True)
        results.append(result)

    text, code = emit_report(results, fmt="json" if args.out else "text")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print("wrote %s" % args.out)
    else:
        print(text.splitlines()[-1])
    return code


if __name__ == "__main__":
    sys.exit(main())
