"""Command-line front end.

Input files contain a ring declaration, an optional support declaration and
an ideal, e.g.::

    ring z0,z1,z2,x,y / char 0 / grevlex
    support x, y
    (x^2 + z0*y, y^2)

Blank lines and ``#`` comments are ignored; the ideal may span lines.
Exit codes: 0 success / all scenarios pass, 1 failure, 2 inconclusive
(resource guard), 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import CatalogError, load_catalog, table_ids
from .groebner import Guard, ResourceGuardExceeded
from .ideals import Ideal
from .parse import ParseError, format_ideal, parse_ring
from .scenarios import ScenarioOptions, emit_report, run_scenario, scenario_ids
from .structures import Embedding, MultiStructure, StructureError, hilb_to_json

USAGE_ERROR = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        sys.exit(USAGE_ERROR)


def _read_input(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError("cannot read %s: %s" % (path, exc))
    ring_decl = None
    support = None
    rest = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("ring "):
            ring_decl = line
        elif line.startswith("support "):
            support = tuple(
                s for s in line[len("support") :].replace(",", " ").split()
            )
        else:
            rest.append(line)
    if ring_decl is None:
        raise _UsageError("%s: missing ring declaration" % path)
    if not rest:
        raise _UsageError("%s: missing ideal" % path)
    try:
        ring = parse_ring(ring_decl)
        ideal = Ideal.parse(ring, " ".join(rest))
    except ParseError as exc:
        raise _UsageError("%s: %s" % (path, exc))
    if support is None:
        if not {"x", "y"} <= set(ring.names):
            raise _UsageError(
                "%s: no support declaration and no default x, y variables" % path
            )
        support = ("x", "y")
    for v in support:
        if v not in ring.names:
            raise _UsageError("%s: support variable %s not in ring" % (path, v))
    return ring, support, ideal


class _UsageError(Exception):
    pass


def _structure(ring, support, ideal, guard):
    return MultiStructure(Embedding(ring, support), ideal, guard=guard)


def _cmd_gb(args, guard):
    ring, _support, ideal = _read_input(args.file)
    print(format_ideal(ideal.groebner(guard=guard)))
    return 0


def _cmd_filt(args, guard):
    ring, support, ideal = _read_input(args.file)
    st = _structure(ring, support, ideal, guard)
    print(json.dumps(st.report(), indent=2))
    return 0


def _cmd_cm(args, guard):
    ring, support, ideal = _read_input(args.file)
    st = _structure(ring, support, ideal, guard)
    cm, locus = st.locally_cm()
    if cm:
        print("locally-cm: true")
    else:
        print("locally-cm: false")
        print("non-cm-locus: %s" % format_ideal(locus.groebner(guard=guard)))
    return 0


def _cmd_hilb(args, guard):
    ring, _support, ideal = _read_input(args.file)
    hp = ideal.hilbert_polynomial(guard=guard)
    if args.pbasis:
        print(json.dumps(hilb_to_json(hp)))
    else:
        print(hp)
    return 0


def _cmd_verify(args, guard):
    known = scenario_ids()
    if args.scenario == "all":
        targets = known
    elif args.scenario in known:
        targets = [args.scenario]
    else:
        print(
            "unknown scenario %r; choose from %s or 'all'"
            % (args.scenario, ", ".join(known)),
            file=sys.stderr,
        )
        return USAGE_ERROR
    opts = ScenarioOptions(char=args.char, seed=args.seed, guard=guard)
    results = [run_scenario(sid, opts) for sid in targets]
    text, code = emit_report(results, fmt=args.format)
    print(text)
    return code


def _cmd_catalog(args, guard):
    if args.action != "list":
        print("unknown catalog action %r; expected 'list'" % args.action, file=sys.stderr)
        return USAGE_ERROR
    for tid in table_ids():
        for entry in load_catalog(tid):
            chars = ",".join("p%d" % c for c in entry.chars)
            print(
                "%-12s mult=%d cm=%s type_i=%s chars=%s %s"
                % (
                    entry.id,
                    entry.multiplicity,
                    entry.locally_cm,
                    entry.type_i,
                    chars,
                    entry.gens_text,
                )
            )
    return 0


def build_parser():
    parser = _Parser(prog="ms", description="multiple-structure workbench")
    parser.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="degree budget for Groebner computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis of the input ideal")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_gb)

    p = sub.add_parser("filt", help="structure report with the S1-filtration")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_filt)

    p = sub.add_parser("cm", help="local Cohen-Macaulay verdict")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_cm)

    p = sub.add_parser("hilb", help="Hilbert polynomial of the input ideal")
    p.add_argument("file")
    p.add_argument("--pbasis", action="store_true", help="emit P-basis JSON")
    p.set_defaults(fn=_cmd_hilb)

    p = sub.add_parser("verify", help="run verification scenarios")
    p.add_argument("scenario", help="scenario id or 'all'")
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("catalog", help="inspect the classification catalog")
    p.add_argument("action", help="'list'")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    guard = Guard(max_degree=args.max_degree) if args.max_degree else None
    try:
        return args.fn(args, guard)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except ResourceGuardExceeded as exc:
        print("inconclusive: %s" % exc, file=sys.stderr)
        return 2
    except (ParseError, CatalogError, StructureError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
