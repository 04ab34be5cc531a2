"""Command line interface: ``essgb compute | gen | bench``.

Exit codes: 0 success, 1 input error, 2 verification failure,
3 checksum mismatch during a benchmark.
"""

import argparse
import json
import logging
import sys

from . import bench
from .bm import bm_gb
from .core import PointSet, ess_gb
from .exceptions import ChecksumMismatchError, EssGBError, GenerationError
from .linalg import rank
from .monomials import TermOrder, format_polynomial
from .pointsfile import format_points, read_points
from .varieties import RNG_ALGORITHM, GenSpec, gen_points, nr
from .verify import verify_result

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_CHECKSUM = 0, 1, 2, 3


def _fail(message, code=EXIT_INPUT):
    print(f"error: {message}", file=sys.stderr)
    return code


def result_to_json(result, prime, order):
    return {
        "prime": prime,
        "order": order.kind,
        "groebner_basis": [format_polynomial(g) for g in result.basis],
        "standard_monomials": [str(s) for s in result.sm],
        "separators": [format_polynomial(s) for s in result.separators],
    }


def result_to_text(result):
    lines = ["groebner basis:"]
    lines.extend(f"  {format_polynomial(g)}" for g in result.basis)
    lines.append("standard monomials: " + ", ".join(str(s) for s in result.sm))
    lines.append("separators:")
    lines.extend(f"  p{t + 1}: {format_polynomial(s)}" for t, s in enumerate(result.separators))
    return "\n".join(lines)


def cmd_compute(args):
    try:
        order = TermOrder(args.order)
        rows = read_points(args.points)
        V = PointSet(rows, args.prime)
    except OSError as exc:
        return _fail(f"cannot read {args.points}: {exc.strerror}")
    except (EssGBError, ValueError) as exc:
        return _fail(str(exc))
    algorithm = ess_gb if args.algorithm == "essgb" else bm_gb
    result = algorithm(V, order)
    if args.format == "json":
        print(json.dumps(result_to_json(result, V.p, order), indent=2))
    else:
        print(result_to_text(result))
    if args.verify:
        report = verify_result(result, V, order)
        print("\n".join(report.lines()), file=sys.stderr if args.format == "json" else sys.stdout)
        if not report.ok:
            return _fail("verification failed", EXIT_VERIFY)
    return EXIT_OK


def cmd_gen(args):
    try:
        spec = GenSpec(p=args.prime, n=args.n, m=args.m, i=args.index, r=args.reps, seed=args.seed)
        points = gen_points(spec)
    except GenerationError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))
    comment = (
        f"p={spec.p} n={spec.n} m={spec.m} i={spec.i} r={spec.r} seed={spec.seed} rng={RNG_ALGORITHM}"
    )
    text = format_points(points, comment)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    achieved = rank(points.tolist(), spec.p)
    info = sys.stderr if not args.out or args.out == "-" else sys.stdout
    print(f"nr(i)={nr(spec)} rank={achieved}", file=info)
    return EXIT_OK


def cmd_bench(args):
    try:
        config = bench.BenchConfig(
            primes=tuple(args.primes),
            ns=tuple(args.ns),
            ms=tuple(args.ms),
            orders=tuple(args.orders),
            r=args.reps,
            algorithms=tuple(args.algorithms),
            seed=args.seed,
            out=args.out,
            parallel=args.parallel,
        )
    except ValueError as exc:
        return _fail(str(exc))

    def progress(cell, recs):
        p, n, m, order = cell
        print(f"done p={p} n={n} m={m} order={order} ({len(recs)} records)", file=sys.stderr)

    print(f"rng={RNG_ALGORITHM} seed={config.seed} checksum=fnv1a64", file=sys.stderr)
    try:
        records = bench.run_bench(config, progress)
    except ChecksumMismatchError as exc:
        return _fail(str(exc), EXIT_CHECKSUM)
    except GenerationError as exc:
        return _fail(str(exc))
    print(bench.format_summary(bench.summarize(records)))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="essgb", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Groebner basis, standard monomials and separators of a points file")
    p.add_argument("points", help="points file (one point per line)")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--order", choices=TermOrder.KINDS, default="lex")
    p.add_argument("--algorithm", choices=("essgb", "bm"), default="essgb")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verify", action="store_true", help="check the output; exit 2 on failure")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", help="generate a random test variety")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--index", "-i", type=int, default=1)
    p.add_argument("--reps", "-r", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time essgb against bm over a parameter grid")
    p.add_argument("--primes", type=int, nargs="+", default=[5, 101])
    p.add_argument("--ns", type=int, nargs="+", default=[100, 200, 300])
    p.add_argument("--ms", type=int, nargs="+", default=[5, 10, 15])
    p.add_argument("--orders", nargs="+", choices=TermOrder.KINDS, default=["lex", "grevlex"])
    p.add_argument("--reps", "-r", type=int, default=10)
    p.add_argument("--algorithms", nargs="+", choices=sorted(bench.ALGORITHMS), default=["essgb", "bm"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o", default="bench.csv")
    p.add_argument("--parallel", action="store_true", help="run grid cells in worker processes")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
