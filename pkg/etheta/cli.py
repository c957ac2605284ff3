"""Command-line interface for etheta."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_BUDGET = 3


def _emit(record: Dict[str, Any]) -> None:
    print(json.dumps(record, ensure_ascii=False))


def _output_format(args: argparse.Namespace, config: Dict[str, Any]) -> str:
    """Explicit flag, then config, then table on a terminal and json-lines when piped."""
    if args.format:
        return args.format
    configured = config.get("output", {}).get("format")
    if configured:
        return configured
    return "table" if sys.stdout.isatty() else "json-lines"


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _print_alert(alert: Any) -> None:
    print(f"[{alert.severity.value}] {alert.message}", file=sys.stderr)


def _set_text(labels: Iterable[str]) -> str:
    from etheta.utils.documents import format_set
    return format_set(list(labels))


def _load_space(path: str, config: Dict[str, Any]) -> Any:
    from etheta.space.finite_space import check_point_limit
    from etheta.utils.documents import load_space

    space = load_space(path)
    check_point_limit(space, config.get("limits", {}).get("point_limit"))
    return space


def _cmd_analyze(args: argparse.Namespace, fmt: str, config: Dict[str, Any]) -> int:
    from etheta.operators import FamilyKind, OperatorKind, operator_table
    from etheta.space.pointset import canonical_key
    from etheta.utils.documents import parse_set_literal

    space = _load_space(args.space, config)
    table = operator_table(space)
    operators = [OperatorKind.parse(args.op)] if args.op else list(OperatorKind)

    if args.families is not None:
        kinds = [FamilyKind.parse(k) for k in args.families] or list(FamilyKind)
        for kind in kinds:
            members = table.family(kind).to_labels(space.point_names)
            if fmt == "json-lines":
                _emit({"family": kind.value, "members": members})
            else:
                print(f"{kind.value} ({len(members)}): " + ", ".join(_set_text(m) for m in members))
        return EXIT_OK

    if args.set is not None:
        subsets = [parse_set_literal(space, args.set).bits]
    elif space.size <= 5:
        subsets = sorted(range(space.full + 1), key=canonical_key)
    else:
        print("Spaces above 5 points need --set", file=sys.stderr)
        return EXIT_USAGE

    if fmt == "table" and args.set is None and args.op is None:
        edges = space.specialization_preorder().hasse_edges()
        order = [
            f"{_set_text(space.point_names[i] for i in low)} < "
            f"{_set_text(space.point_names[i] for i in high)}"
            for low, high in edges
        ]
        print("specialization order: " + ("; ".join(order) or "(antichain)"))

    for mask in subsets:
        labels = space.labels_of(mask)
        values = {op.value: space.labels_of(table.value(op, mask)) for op in operators}
        member_of = [k.value for k in FamilyKind if mask in table.family(k)]
        if fmt == "json-lines":
            record: Dict[str, Any] = {"set": labels, "operators": values}
            if args.op is None:
                record["families"] = member_of
            _emit(record)
        elif args.op is not None:
            print(f"{args.op}({_set_text(labels)}) = {_set_text(values[operators[0].value])}")
        else:
            print(_set_text(labels))
            for name, value in values.items():
                print(f"  {name}: {_set_text(value)}")
            print("  member of: " + ", ".join(member_of))
    return EXIT_OK


def _cmd_axioms(args: argparse.Namespace, fmt: str, config: Dict[str, Any]) -> int:
    from etheta.axioms import evaluate_all

    report = evaluate_all(_load_space(args.space, config))
    for kind, result in report.results.items():
        if fmt == "json-lines":
            _emit({"axiom": kind.value, "holds": result.holds, "witness": result.witness})
        else:
            line = f"{kind.value}: {str(result.holds).lower()}"
            if result.witness:
                line += f"  witness: {json.dumps(result.witness, ensure_ascii=False)}"
            print(line)
    if fmt == "json-lines":
        _emit({"cc_points": report.cc_points})
    else:
        print(f"cc-points: {_set_text(report.cc_points)}")
    return EXIT_OK


def _cmd_map(args: argparse.Namespace, fmt: str, config: Dict[str, Any]) -> int:
    from etheta.maps import map_from_labels, property_table
    from etheta.utils.documents import load_map, parse_map_literal

    if args.map is not None:
        if len(args.spaces) > 2:
            print("map takes a domain and an optional codomain", file=sys.stderr)
            return EXIT_USAGE
        domain = _load_space(args.spaces[0], config)
        codomain = _load_space(args.spaces[-1], config)
        f = map_from_labels(domain, codomain, parse_map_literal(args.map))
    elif len(args.spaces) == 1:
        f = load_map(args.spaces[0])
    else:
        print("Give --map with two space documents, or one map document", file=sys.stderr)
        return EXIT_USAGE

    for kind, result in property_table(f).items():
        if fmt == "json-lines":
            _emit({"property": kind.value, "holds": result.holds, "witness": result.witness})
        else:
            line = f"{kind.value}: {str(result.holds).lower()}"
            if result.witness:
                line += f"  witness: {json.dumps(result.witness, ensure_ascii=False)}"
            print(line)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace, fmt: str, config: Dict[str, Any]) -> int:
    from etheta.errors import CarrierTooLarge
    from etheta.space import enumerate_spaces_up_to
    from etheta.utils.documents import serialize_space

    if args.points is not None:
        low = high = args.points
    else:
        low, high = 1, args.max_points or config.get("verify", {}).get("max_points", 4)
    limit = config.get("limits", {}).get("max_enumeration_points", 5)
    if high > limit:
        raise CarrierTooLarge(high, limit)
    count = 0
    for space in enumerate_spaces_up_to(high, min_points=low, t0_only=args.t0_only):
        count += 1
        if fmt == "json-lines":
            print(serialize_space(space))
        else:
            opens = space.opens.to_labels(space.point_names)
            print(f"{count:>6}  " + " ".join(_set_text(m) for m in opens))
    logger.info("enumerated %d spaces", count)
    return EXIT_OK


def _resolve_claim(catalog: Any, text: str) -> str:
    """Exact id, or the unique id that starts with ``text`` followed by a dash."""
    from etheta.errors import UnknownClaim

    if text in catalog:
        return text
    matches = [claim_id for claim_id in catalog.ids() if claim_id.startswith(text + "-")]
    if len(matches) != 1:
        raise UnknownClaim(text)
    return matches[0]


def _read_cursor(path: str) -> Dict[str, Any]:
    from etheta.utils.documents import parse_json

    document = parse_json(Path(path).read_text(encoding="utf-8"))
    return document.get("cursor", document)


def _print_report(report: Any, fmt: str, timings: bool) -> None:
    if fmt == "json-lines":
        _emit(report.to_dict(timings=timings))
        return
    line = (
        f"{report.claim_id:<42} {report.status.value:<21} "
        f"{report.instances} instances ({report.vacuous} vacuous)"
    )
    if timings and report.wall_time is not None:
        line += f"  {report.wall_time:.3f}s"
    print(line)
    if report.witness is not None:
        print(f"    witness: {json.dumps(report.witness, ensure_ascii=False)}")
    if report.message:
        print(f"    {report.message}")


def _cmd_verify(args: argparse.Namespace, fmt: str, config: Dict[str, Any]) -> int:
    from etheta.monitoring import AlertManager, VerificationMonitor
    from etheta.verify import Bounds, Status, Tier, default_catalog, run_claim, run_suite

    catalog = default_catalog()
    alerts = AlertManager()
    alerts.add_handler(_print_alert)
    monitor = VerificationMonitor()
    bounds = Bounds.from_config(
        config,
        max_map_points=args.max_map_points,
        max_chain_points=args.max_chain_points,
        workers=args.workers,
        time_budget=args.time_budget,
        instance_budget=args.instance_budget,
        strata=args.strata,
    )

    if args.claim is None:
        if args.resume:
            print("--resume needs --claim", file=sys.stderr)
            return EXIT_USAGE
        suite = run_suite(
            bounds.with_overrides(max_points=args.max_points),
            catalog,
            monitor=monitor,
            alerts=alerts,
        )
        for report in suite.reports:
            _print_report(report, fmt, args.timings)
        if fmt == "table":
            verdict = "PASSED" if suite.passed else "FAILED"
            print(f"\n{verdict}: {len(suite.reports)} claims, {monitor.instances} instances")
        return suite.exit_code

    claim_id = _resolve_claim(catalog, args.claim)
    spec = catalog.get(claim_id)
    bounds = bounds.with_overrides(**{f"max_{spec.bound.value}": args.max_points})
    cursor = _read_cursor(args.resume) if args.resume else None
    report = run_claim(claim_id, bounds, catalog, cursor=cursor, monitor=monitor, alerts=alerts)
    _print_report(report, fmt, args.timings)
    if report.status is Status.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    if report.status is Status.REFUTED and spec.tier is Tier.CORE:
        return EXIT_REFUTED
    return EXIT_OK


def _cmd_claims(fmt: str) -> int:
    from etheta.verify import default_catalog

    for spec in default_catalog():
        if fmt == "json-lines":
            _emit({"claim": spec.id, "tier": spec.tier.value, "citation": spec.citation})
        else:
            print(f"{spec.id:<42} {spec.tier.value:<9} {spec.citation}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etheta",
        description="e*-theta-open sets on finite topological spaces",
    )
    parser.add_argument("--config", help="Path to a YAML config file")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    def with_format(sub: argparse.ArgumentParser) -> argparse.ArgumentParser:
        sub.add_argument("--format", choices=["table", "json-lines"], help="Output format")
        return sub

    # version
    subparsers.add_parser("version", help="Show version")

    # analyze
    analyze_parser = with_format(subparsers.add_parser("analyze", help="Operators and families of a space"))
    analyze_parser.add_argument("space", help="Path to space document")
    analyze_parser.add_argument("--set", help="Comma-joined labels, e.g. a,b")
    analyze_parser.add_argument("--op", help="Single operator, e.g. e*-cl_theta")
    analyze_parser.add_argument(
        "--families", nargs="*", metavar="KIND", help="Print families (all when no kind is given)"
    )

    # axioms
    axioms_parser = with_format(subparsers.add_parser("axioms", help="Separation axioms of a space"))
    axioms_parser.add_argument("space", help="Path to space document")

    # map
    map_parser = with_format(subparsers.add_parser("map", help="Continuity properties of a map"))
    map_parser.add_argument("spaces", nargs="+", help="Domain and codomain documents, or one map document")
    map_parser.add_argument("--map", help="Association table, e.g. a:c,b:c")

    # verify
    verify_parser = with_format(subparsers.add_parser("verify", help="Check the claim catalog"))
    verify_parser.add_argument("--claim", help="Claim id or unique prefix (e.g. Q5.1)")
    verify_parser.add_argument("--max-points", type=int, help="Carrier bound of the checked claims")
    verify_parser.add_argument("--max-map-points", type=int, help="Carrier bound for map claims")
    verify_parser.add_argument("--max-chain-points", type=int, help="Carrier bound for map chains")
    verify_parser.add_argument("--workers", type=int, help="Worker processes (default: ETHETA_WORKERS or CPUs)")
    verify_parser.add_argument("--time-budget", type=float, help="Seconds before a claim stops with a cursor")
    verify_parser.add_argument("--instance-budget", type=int, help="Instances before a claim stops with a cursor")
    verify_parser.add_argument("--resume", metavar="CURSOR_FILE", help="Resume from a saved cursor or report line")
    verify_parser.add_argument("--timings", action="store_true", help="Include wall time")
    verify_parser.add_argument(
        "--strata", choices=["top", "all"], help="Question search over the top carrier size or all sizes"
    )

    # enumerate
    enum_parser = with_format(subparsers.add_parser("enumerate", help="List all topologies"))
    enum_parser.add_argument("--points", type=int, help="Exact number of points")
    enum_parser.add_argument("--max-points", type=int, help="All sizes up to this bound (default 4)")
    enum_parser.add_argument("--t0-only", action="store_true", help="Only T0 (partial order) topologies")

    # claims
    with_format(subparsers.add_parser("claims", help="List the claim catalog"))

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    if args.command == "version":
        from etheta import __version__
        print(__version__)
        return EXIT_OK

    if args.command is None:
        parser.print_help()
        return EXIT_OK

    from etheta.errors import EthetaError, InternalCharacterizationMismatch
    from etheta.utils.config import load_config

    config = load_config(args.config)
    fmt = _output_format(args, config)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, fmt, config)
        if args.command == "axioms":
            return _cmd_axioms(args, fmt, config)
        if args.command == "map":
            return _cmd_map(args, fmt, config)
        if args.command == "enumerate":
            return _cmd_enumerate(args, fmt, config)
        if args.command == "verify":
            return _cmd_verify(args, fmt, config)
        if args.command == "claims":
            return _cmd_claims(fmt)
    except InternalCharacterizationMismatch as e:
        logger.error("internal consistency failure: %s", e)
        return EXIT_REFUTED
    except (EthetaError, FileNotFoundError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    parser.print_help()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
