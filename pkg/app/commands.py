# app/commands.py

import json
import logging
import sys
import time
from pathlib import Path

from config import Config
from graph_mod import TotalWeighting, format_graph, parse_graph, parse_rational, span_from_json
from service import (
    FuzzConfig,
    InternalInvariantViolation,
    NoAugmentingPath,
    Report,
    WellInstance,
    check_preconditions,
    exhaustive_offsets,
    find_well_subgraph,
    fuzz_campaign,
    gen_named,
    gen_random,
    gen_regular,
    mwis_exact,
    phi_maximum_set,
    set_weight,
    solve_offsets,
    split_lists,
    to_dot,
    verify_list_membership,
    verify_offsets,
    verify_proper,
)

from .bundle import InstanceBundle, load_graph, load_json
from .constants import EXIT_INTERNAL, EXIT_OK, EXIT_VERIFY_FAILED

logger = logging.getLogger(__name__)


def emit(text: str, path=None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"wrote {path}")
    else:
        sys.stdout.write(text)


def dump_json(data, path=None) -> None:
    emit(json.dumps(data, indent=2) + "\n", path)


def _deadline(budget: float | None):
    budget = Config.MWIS_TIME_BUDGET if budget is None else budget
    return time.monotonic() + budget if budget > 0 else None


def _bundle(args) -> InstanceBundle:
    return InstanceBundle.from_args(args.graph, base=args.base, span=args.span, lists=args.lists)


def _base_and_span(bundle: InstanceBundle):
    if bundle.lists is not None:
        return split_lists(bundle.graph, bundle.lists)
    return bundle.base, bundle.span


def cmd_weigh(args) -> int:
    bundle = _bundle(args)
    graph = bundle.graph
    base, span = _base_and_span(bundle)
    try:
        offsets, dec, trace = solve_offsets(graph, base, span, _deadline(args.time_budget))
    except InternalInvariantViolation as e:
        logger.error(f"weigh: {e}")
        if args.emit_trace:
            dump_json(e.dump, args.emit_trace)
        else:
            sys.stderr.write(json.dumps(e.dump, indent=2) + "\n")
        return EXIT_INTERNAL

    final = base + offsets
    report = Report()
    report.extend(verify_proper(graph, final))
    report.extend(verify_offsets(graph, base, span, offsets, dec), "offsets:")
    if bundle.lists is not None:
        report.extend(verify_list_membership(bundle.lists, final))
    dump_json(final.to_json(span), args.output)
    if args.emit_levels:
        dump_json(dec.to_json(), args.emit_levels)
    if args.emit_trace:
        dump_json(trace.to_json(), args.emit_trace)
    sys.stderr.write(report.render() + "\n")
    if not report.overall:
        logger.error("weigh: verification of the solver output failed")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = load_graph(args.graph)
    weighting = TotalWeighting.from_json(load_json(args.weighting), graph)
    report = verify_proper(graph, weighting)
    if args.lists:
        bundle = InstanceBundle.from_args(args.graph, lists=args.lists)
        report.extend(verify_list_membership(bundle.lists, weighting))
    print(report.render())
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_oracle(args) -> int:
    bundle = _bundle(args)
    base, span = _base_and_span(bundle)
    result = exhaustive_offsets(bundle.graph, base, span, args.max_elements)
    print(result.summary())
    if not result.feasible:
        return EXIT_VERIFY_FAILED
    if args.check:
        offsets, _, _ = solve_offsets(bundle.graph, base, span, _deadline(args.time_budget))
        agrees = result.contains(offsets)
        print(f"solver output {'is' if agrees else 'is NOT'} among the feasible assignments")
        if not agrees:
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def _rationals(raw: str | None, default):
    if not raw:
        return default
    return tuple(parse_rational(x) for x in raw.split(",") if x.strip())


def cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        count=args.count,
        seed=args.seed,
        nmax=args.nmax,
        pset=_rationals(args.pset, Config.FUZZ_PSET),
        spans=_rationals(args.spans, Config.FUZZ_SPANS),
        base_pool=_rationals(args.base_pool, Config.FUZZ_BASE_POOL),
        max_elements=args.max_elements,
    )
    report = fuzz_campaign(cfg)
    if args.output:
        dump_json(report.to_json(), args.output)
    if report.minimal is not None and args.out_dir:
        data = report.minimal["weighting"]
        graph = parse_graph(report.minimal["graph"])
        bundle = InstanceBundle(graph, base=TotalWeighting.from_json(data, graph), span=span_from_json(data))
        paths = bundle.write(args.out_dir, "minimal")
        logger.info(f"minimal failing instance written to {paths[0]} and {paths[1]}")
    print(report.render())
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_gen(args) -> int:
    params = list(args.params)
    if args.family == "random":
        if len(params) != 2:
            raise ValueError("random takes N P")
        graph = gen_random(int(params[0]), params[1], args.seed)
    elif args.family == "regular":
        if len(params) != 2:
            raise ValueError("regular takes N D")
        graph = gen_regular(int(params[0]), int(params[1]), args.seed)
    else:
        graph = gen_named(args.family, params)
    comment = " ".join([args.family, *params])
    if args.family in ("random", "regular"):
        comment += f" seed={args.seed}"
    emit(format_graph(graph, comment), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    bundle = _bundle(args)
    base, span = _base_and_span(bundle)
    offsets, _, _ = solve_offsets(bundle.graph, base, span, _deadline(args.time_budget))
    emit(to_dot(bundle.graph, base + offsets, offsets.heavy_elements()), args.output)
    return EXIT_OK


def cmd_mwis(args) -> int:
    graph = load_graph(args.graph)
    if args.phi:
        data = load_json(args.phi)
        phi = {int(v): int(x) for v, x in data.items()}
    else:
        phi = {v: 1 for v in graph.vertices()}
    deadline = _deadline(args.time_budget)
    best = mwis_exact(graph, phi, deadline)
    extended = phi_maximum_set(graph, phi, deadline)
    dump_json({
        "weight": set_weight(phi, best),
        "witness": sorted(best),
        "phi_maximum": sorted(extended),
    }, args.output)
    return EXIT_OK


def cmd_well(args) -> int:
    inst = WellInstance.from_json(load_json(args.instance))
    pre = check_preconditions(inst)
    if not pre.overall:
        sys.stderr.write(pre.render() + "\n")
    try:
        forest = find_well_subgraph(inst)
    except NoAugmentingPath as e:
        logger.error(f"well: {e}")
        dump_json({"well": False, "certificate": e.to_json()}, args.output)
        return EXIT_VERIFY_FAILED
    dump_json({"well": True, "forest": forest.to_json()}, args.output)
    return EXIT_OK
