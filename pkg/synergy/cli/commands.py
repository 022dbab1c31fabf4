"""Command-line entry point.

Exit codes: 0 on success, 1 when a certificate is INVALID, 2 for
unreadable or malformed input.
"""
import argparse
import logging
import os
import sys
from collections import Counter

from synergy.bench import SUITES, Family, InstanceSpec, generate, run_suite, write_instance
from synergy.config import Settings, configure_logging
from synergy.geom_core import GeometryError
from synergy.hull import (
    convex_hull,
    levcopoulos_hull,
    partition_simple_chains,
    quick_union_hull,
    simple_chain_hull,
    synergistic_upper_hull,
    verify_hull_certificate,
)
from synergy.maxima import (
    decompose_smooth,
    dedup_points,
    quick_union_maxima,
    synergistic_maxima,
    verify_maxima_certificate,
)
from synergy.oracles import brute_maxima, brute_upper_hull
from synergy.cli.text_format import (
    format_hull_certificate,
    format_maxima_certificate,
    format_points,
    parse_hull_certificate,
    parse_maxima_certificate,
    parse_points,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_INPUT = 0, 1, 2


def _read(path):
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _read_points(path):
    """All points of a file in order, ignoring sequence breaks."""
    points = [p for seq in parse_points(_read(path)) for p in seq]
    repeated = sum(count - 1 for count in Counter(points).values())
    if repeated:
        logger.warning("%s repeats %d points; each shows up once in the result", path, repeated)
    return points


def _write_certificate(path, seqs, text):
    """Certificates refer to the merged sequences, which are saved beside them as <path>.seqs."""
    _write(path, text)
    _write(path + ".seqs", format_points(seqs))
    logger.info("wrote certificate %s and its sequences %s.seqs", path, path)


def cmd_maxima(args):
    points = _read_points(args.file)
    if args.algo == "brute":
        staircase = brute_maxima(points)
    else:
        staircase, report = synergistic_maxima(points)
        logger.info("sigma=%d predicates=%s", report.sigma, report.phase_counts)
    print(format_points([staircase]), end="")
    if args.cert:
        runs = decompose_smooth(dedup_points(points)).staircases
        if runs:
            _, cert = quick_union_maxima(runs)
            _write_certificate(args.cert, runs, format_maxima_certificate(cert))
    return EXIT_OK


def cmd_hull(args):
    points = _read_points(args.file)
    if args.convex:
        print(format_points([convex_hull(points)]), end="")
    elif args.algo == "brute":
        print(format_points([brute_upper_hull(points)]), end="")
    elif args.algo == "levcopoulos":
        upper, _, report = levcopoulos_hull(points)
        logger.info("kappa=%d levels=%s", report.kappa, report.level_counts)
        print(format_points([upper]), end="")
    else:
        upper, report = synergistic_upper_hull(points)
        logger.info("kappa=%d entropy=%.3f predicates=%s", report.kappa, report.entropy, report.phase_counts)
        print(format_points([upper]), end="")
    if args.cert:
        pieces = partition_simple_chains(points).pieces(points)
        uppers = [simple_chain_hull(piece, check=False)[0] for piece in pieces]
        if uppers:
            _, cert = quick_union_hull(uppers)
            _write_certificate(args.cert, uppers, format_hull_certificate(cert))
    return EXIT_OK


def cmd_partition(args):
    points = _read_points(args.file)
    if args.mode == "smooth":
        parts = [(run.lo, run.hi) for run in decompose_smooth(dedup_points(points)).runs]
        print(f"# sigma={len(parts)}")
    else:
        partition = partition_simple_chains(points)
        parts = list(partition.chains)
        print(f"# kappa={partition.kappa} entropy={partition.entropy:.6f}")
    for lo, hi in parts:
        print(lo, hi)
    return EXIT_OK


def cmd_merge_maxima(args):
    seqs = parse_points(_read(args.file))
    staircase, cert = quick_union_maxima(seqs)
    print(format_points([staircase]), end="")
    _write(args.cert, format_maxima_certificate(cert))
    return EXIT_OK


def cmd_merge_hulls(args):
    seqs = parse_points(_read(args.file))
    hull, cert = quick_union_hull(seqs)
    print(format_points([hull]), end="")
    _write(args.cert, format_hull_certificate(cert))
    return EXIT_OK


def _report(verdict):
    print(verdict)
    if not verdict:
        print(f"certificate rejected: {verdict.reason}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_verify_maxima(args):
    seqs = parse_points(_read(args.instance))
    cert = parse_maxima_certificate(_read(args.certificate))
    return _report(verify_maxima_certificate(seqs, cert))


def cmd_verify_hull(args):
    seqs = parse_points(_read(args.instance))
    cert = parse_hull_certificate(_read(args.certificate))
    return _report(verify_hull_certificate(seqs, cert))


def cmd_gen(args):
    spec = InstanceSpec(Family(args.family), args.n, args.param, args.seed, args.profile)
    instance = generate(spec)
    out = args.out or os.path.join(args.data_dir, f"{spec.family.value}_{spec.n}_{spec.param}_{spec.seed}.txt")
    # the data directory may not exist yet
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    write_instance(instance, out)
    print(out)
    return EXIT_OK


def cmd_bench(args):
    result = run_suite(args.suite, args.n, seed=args.seed, workers=args.workers)
    out = args.out or os.path.join(args.data_dir, f"bench_{args.suite}.csv")
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    result.frame.to_csv(out, index=False)
    slope = "absent" if result.slope is None else f"{result.slope:.4f}"
    print(f"{args.suite}: {len(result.cells)} cells, fitted slope {slope}, written to {out}")
    return EXIT_OK


def build_parser(settings):
    parser = argparse.ArgumentParser(prog="synergy", description="Synergistic planar maxima and convex hulls.")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=settings.log_level,
        help="root log level (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maxima", help="maxima of a point file")
    p.add_argument("file")
    p.add_argument("--algo", choices=["brute", "synergistic"], default="synergistic")
    p.add_argument("--cert", help="also write a merge certificate (and its sequences to CERT.seqs)")
    p.set_defaults(handler=cmd_maxima)

    p = sub.add_parser("hull", help="upper hull of a point file")
    p.add_argument("file")
    p.add_argument("--algo", choices=["brute", "levcopoulos", "synergistic"], default="synergistic")
    p.add_argument("--convex", action="store_true", help="print the whole hull, counterclockwise")
    p.add_argument("--cert", help="also write a merge certificate (and its sequences to CERT.seqs)")
    p.set_defaults(handler=cmd_hull)

    p = sub.add_parser("partition", help="split a point file into smooth runs or simple chains")
    p.add_argument("file")
    p.add_argument("--mode", choices=["smooth", "simple"], required=True)
    p.set_defaults(handler=cmd_partition)

    for name, handler, what in (
        ("merge-maxima", cmd_merge_maxima, "staircases"),
        ("merge-hulls", cmd_merge_hulls, "upper hulls"),
    ):
        p = sub.add_parser(name, help=f"merge the {what} of a sequence file")
        p.add_argument("file")
        p.add_argument("--cert", required=True)
        p.set_defaults(handler=handler)

    for name, handler in (("verify-maxima", cmd_verify_maxima), ("verify-hull", cmd_verify_hull)):
        p = sub.add_parser(name, help="check a certificate against its sequences")
        p.add_argument("instance")
        p.add_argument("certificate")
        p.set_defaults(handler=handler)

    p = sub.add_parser("gen", help="generate a benchmark instance")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, required=True, help="points in total")
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--seed", type=int, default=settings.seed)
    p.add_argument("--profile", choices=["even", "skewed"], default="even")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_gen, data_dir=settings.data_dir)

    p = sub.add_parser("bench", help="run a scaling suite and write its CSV")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n", type=int, default=2 ** 16, help="largest instance size of the grid")
    p.add_argument("--seed", type=int, default=settings.seed)
    p.add_argument("--workers", type=int, default=settings.bench_workers)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_bench, data_dir=settings.data_dir)
    return parser


def run_command(argv=None, settings=None):
    """Parse argv, run the chosen subcommand and return its exit code."""
    settings = Settings.from_env() if settings is None else settings
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except (GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
