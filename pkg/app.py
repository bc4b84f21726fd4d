"""
aslkit - command line entry point

Decides combinatorial and algebraic properties of finite posets and their
algebras with straightening law, prints Betti tables and ring invariants, and
runs the exhaustive verification suites. Reports are deterministic JSON; the exit
status is 0 when everything held, 1 on a counterexample or error and 2 when a
search ran out of budget.
"""
import argparse
import logging
import os
import sys

# Fix path to load modules correctly
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from core.aslkit_core import PROPERTIES  # noqa: E402
from core.aslkit_utils import format_betti_table, format_invariants, format_verdict, get_aslkit_engine  # noqa: E402
from core.config import Caps, Field  # noqa: E402
from core.errors import AslkitError, Inconclusive, SizeCapExceeded  # noqa: E402
from core.poset import enumerate_posets  # noqa: E402
from data.data_generator import instance_frame, load_facets_file  # noqa: E402
from data.formats import to_json  # noqa: E402
from suites.asl import suite_asl  # noqa: E402
from suites.chordal import suite_chordal  # noqa: E402
from suites.conjecture import explore_conjecture  # noqa: E402
from suites.divposet import suite_divposet  # noqa: E402
from suites.gorenstein_level import suite_gorenstein_level  # noqa: E402
from suites.la_classification import suite_la_classification  # noqa: E402
from suites.oracles import suite_oracles  # noqa: E402
from suites.report import EXIT_COUNTEREXAMPLE, EXIT_INCONCLUSIVE, EXIT_OK  # noqa: E402
from suites.scans import scan_cm_shellable, scan_linear  # noqa: E402

logger = logging.getLogger("aslkit")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

SUITES = {
    "la-classification": (suite_la_classification, ("max_p",)),
    "divposet": (suite_divposet, ("max_rank",)),
    "chordal": (suite_chordal, ("max_p", "seed")),
    "gorenstein-level": (suite_gorenstein_level, ("max_n", "max_p")),
    "asl": (suite_asl, ("max_p",)),
    "oracles": (suite_oracles, ("max_p", "seed")),
}

SCANS = {
    "linear": scan_linear,
    "cm-shellable": scan_cm_shellable,
}


def _engine(args):
    caps = Caps.from_env(seed=getattr(args, "seed", None))
    engine = get_aslkit_engine(caps, Field.parse(getattr(args, "field", "q")))
    if getattr(args, "poset", None):
        engine.load_poset(args.poset)
    return engine


def cmd_check(args):
    engine = _engine(args)
    verdict = engine.check(args.property)
    print(f"{args.property}: {format_verdict(verdict)}")
    if args.property == "chordal" and not verdict:
        cycle = engine.chordless_cycle()
        print("chordless cycle: " + " ".join(str(x) for x in cycle))
    return EXIT_OK


def cmd_betti(args):
    engine = _engine(args)
    table = engine.betti(args.method)
    print(format_betti_table(table))
    print(f"pd = {table.pd}, reg = {table.reg}")
    if args.json:
        to_json(table.to_json(), args.json)
    return EXIT_OK


def cmd_invariants(args):
    engine = _engine(args)
    invariants = engine.ring_invariants()
    print(format_invariants(invariants))
    if args.json:
        to_json(invariants.to_json(), args.json)
    return EXIT_OK


def cmd_verify(args):
    func, accepted = SUITES[args.suite]
    params = {name: getattr(args, name) for name in accepted if getattr(args, name) is not None}
    caps = Caps.from_env(seed=args.seed)
    report = func(caps=caps, field=Field.parse(args.field), workers=args.workers, progress=not args.quiet, **params)
    print(report.summary_line())
    for failure in report.failures:
        print(f"  counterexample: {failure['instance']}")
    if args.json:
        report.write(args.json)
    return report.exit_code


def cmd_explore(args):
    complex_ = load_facets_file(args.facets)
    caps = Caps.from_env()
    report = explore_conjecture(complex_, caps, Field.parse(args.field), args.workers, not args.quiet, source=args.facets)
    for note in report.notes:
        print(note)
    print(report.summary_line())
    if args.json:
        report.write(args.json)
    return report.exit_code


def cmd_enumerate(args):
    caps = Caps.from_env()
    posets = list(enumerate_posets(args.size, cap=caps.enumerate_size))
    if args.summary:
        print(instance_frame(posets).to_string(index=False))
    else:
        print("\n\n".join(poset.to_text().strip() for poset in posets))
    logger.info("%d posets with %d elements", len(posets), args.size)
    return EXIT_OK


def cmd_scan(args):
    frame = SCANS[args.kind](max_p=args.max_p, caps=Caps.from_env(), progress=not args.quiet)
    print(frame.to_string(index=False) if len(frame) else "(no rows)")
    if args.json:
        to_json(frame.to_dict(orient="records"), args.json)
    return EXIT_OK


def cmd_plot(args):
    from ui.viz_utils import create_betti_heatmap, create_hasse_figure, save_figure

    engine = _engine(args)
    save_figure(create_hasse_figure(engine.poset, title=os.path.basename(args.poset)), args.out)
    print(f"wrote {args.out}")
    if args.betti:
        root, ext = os.path.splitext(args.out)
        path = f"{root}_betti{ext or '.png'}"
        save_figure(create_betti_heatmap(engine.betti("koszul")), path)
        print(f"wrote {path}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="aslkit", description="Posets, straightening laws and Betti tables")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one property of a poset")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("--poset", required=True)
    p.add_argument("--field", default="q")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", help="graded Betti table")
    p.add_argument("--poset", required=True)
    p.add_argument("--method", choices=("hochster", "koszul"), default="koszul")
    p.add_argument("--field", default="q")
    p.add_argument("--json")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("invariants", help="dimension, depth, regularity, type and h-vector")
    p.add_argument("--poset", required=True)
    p.add_argument("--field", default="q")
    p.add_argument("--json")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-p", type=int)
    p.add_argument("--max-rank", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--field", default="q")
    p.add_argument("--json")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress bar")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="level-ness below rank cut-offs of a sphere's face poset")
    p.add_argument("--facets", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--field", default="q")
    p.add_argument("--json")
    p.add_argument("-q", "--quiet", action="store_true")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("enumerate", help="all posets of a size up to isomorphism")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--summary", action="store_true", help="one table row per poset instead of the text format")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("scan", help="search tables for open questions")
    p.add_argument("kind", choices=sorted(SCANS))
    p.add_argument("--max-p", type=int, default=None)
    p.add_argument("--json")
    p.add_argument("-q", "--quiet", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("plot", help="Hasse diagram (and Betti heatmap) as PNG")
    p.add_argument("--poset", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--betti", action="store_true")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format=LOG_FORMAT)
    if args.command == "scan" and args.max_p is None:
        args.max_p = 6 if args.kind == "linear" else 3
    try:
        return args.func(args)
    except (Inconclusive, SizeCapExceeded) as exc:
        logger.warning("%s", exc)
        return EXIT_INCONCLUSIVE
    except AslkitError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_COUNTEREXAMPLE


if __name__ == "__main__":
    sys.exit(main())
