# app/__init__.py

import argparse
import logging

from config import Config
from families import FAMILY_NAMES
from service import InternalInvariantViolation, MwisBudgetExceeded, NoAugmentingPath

from .commands import cmd_dot, cmd_fuzz, cmd_gen, cmd_mwis, cmd_oracle, cmd_verify, cmd_weigh, cmd_well
from .constants import EXIT_INTERNAL, EXIT_INVALID_INPUT, RANDOM_GENERATORS

logger = logging.getLogger(__name__)


def _instance_options(parser):
    parser.add_argument("--graph", required=True, help="edge-list file")
    parser.add_argument("--base", help="'zero' or a weighting JSON file")
    parser.add_argument("--span", help="common span a > 0, e.g. 1 or 5/2")
    parser.add_argument("--lists", help="uniform:a,b or file:PATH")
    parser.add_argument("--time-budget", type=float, default=None,
                        help="seconds for each independent-set search, 0 = unlimited")


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="span-weigh",
                                     description="Proper total weightings from two-element lists of one span")
    parser.add_argument("--log-level", default=Config.LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    weigh = sub.add_parser("weigh", help="solve an instance and verify the result")
    _instance_options(weigh)
    weigh.add_argument("-o", "--output")
    weigh.add_argument("--emit-levels", metavar="FILE")
    weigh.add_argument("--emit-trace", metavar="FILE")
    weigh.set_defaults(handler=cmd_weigh)

    verify = sub.add_parser("verify", help="check that a weighting is proper")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--weighting", required=True)
    verify.add_argument("--lists", help="also check list membership")
    verify.set_defaults(handler=cmd_verify)

    oracle = sub.add_parser("oracle", help="exhaustive search over all offset assignments")
    _instance_options(oracle)
    oracle.add_argument("--max-elements", type=int, default=Config.ORACLE_MAX_ELEMENTS)
    oracle.add_argument("--check", action="store_true", help="also check the solver output against the oracle")
    oracle.set_defaults(handler=cmd_oracle)

    fuzz = sub.add_parser("fuzz", help="seeded campaign against the verifiers and the oracle")
    fuzz.add_argument("--count", type=int, default=Config.FUZZ_COUNT)
    fuzz.add_argument("--seed", type=int, default=Config.FUZZ_SEED)
    fuzz.add_argument("--nmax", type=int, default=Config.FUZZ_NMAX)
    fuzz.add_argument("--spans", help="comma-separated spans")
    fuzz.add_argument("--pset", help="comma-separated edge probabilities")
    fuzz.add_argument("--base-pool", help="comma-separated base weights")
    fuzz.add_argument("--max-elements", type=int, default=Config.ORACLE_MAX_ELEMENTS)
    fuzz.add_argument("-o", "--output", help="report JSON")
    fuzz.add_argument("--out-dir", help="where to write the minimal failing instance")
    fuzz.set_defaults(handler=cmd_fuzz)

    gen = sub.add_parser("gen", help="write a generated graph as an edge list")
    gen.add_argument("family", choices=FAMILY_NAMES + RANDOM_GENERATORS)
    gen.add_argument("params", nargs="*")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")
    gen.set_defaults(handler=cmd_gen)

    dot = sub.add_parser("dot", help="solve an instance and export it as DOT")
    _instance_options(dot)
    dot.add_argument("-o", "--output")
    dot.set_defaults(handler=cmd_dot)

    mwis = sub.add_parser("mwis", help="maximum phi-weight independent set")
    mwis.add_argument("--graph", required=True)
    mwis.add_argument("--phi", help='JSON object {"vertex": weight}; all ones by default')
    mwis.add_argument("--time-budget", type=float, default=None)
    mwis.add_argument("-o", "--output")
    mwis.set_defaults(handler=cmd_mwis)

    well = sub.add_parser("well", help="well subgraph of a bipartite instance")
    well.add_argument("--instance", required=True)
    well.add_argument("-o", "--output")
    well.set_defaults(handler=cmd_well)
    return parser


def main(argv=None) -> int:
    args = create_parser().parse_args(argv)
    logging.basicConfig(format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                        level=args.log_level.upper())
    try:
        return args.handler(args)
    except (InternalInvariantViolation, MwisBudgetExceeded, NoAugmentingPath) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INTERNAL
    except (ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INVALID_INPUT
