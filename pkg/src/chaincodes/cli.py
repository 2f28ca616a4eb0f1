"""Command-line front end.

Exit codes: 0 on success or a negative mathematical finding, 1 on I/O or
parse errors, 2 on validation errors.
"""

from __future__ import annotations

import argparse
import sys

from .chain_ring import enumerate_ring, format_token
from .codes import predicted_two_weight_distribution, span
from .constructions import (
    extend_generator,
    one_weight_generator,
    optimal_two_weight_code,
    y_matrix,
)
from .errors import ChainCodeError, ParseError, ValidationError
from .graphs import OmegaSet, coset_graph, omega_from_columns, syndrome_graph
from .gray import gray_image
from .io import format_adjacency, format_image, format_matrix, parse_ring_descriptor, read_matrix
from .report import analyze_code, dumps, graph_record, gray_record, tss_report


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(record: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(dumps(record) + "\n")
        return
    for key in sorted(record):
        out.write(f"{key}: {record[key]}\n")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_ring_info(args) -> int:
    ring = parse_ring_descriptor(args.ring)
    record = {
        "ring": args.ring,
        "p": ring.p, "e": ring.e, "m": ring.m, "q": ring.q,
        "size": ring.size,
        "units": ring.num_units,
        "gamma": ring.gamma,
        "elements": [format_token(ring, int(a)) for a in enumerate_ring(ring)] if ring.size <= 256 else None,
    }
    _emit(record, args.format)
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    predicted = None
    if kind == "extend":
        if args.gen is None or args.m0 is None:
            raise ValidationError("extend needs --gen and --m0")
        gen = extend_generator(read_matrix(args.gen), args.m0)
    else:
        if args.ring is None:
            raise ValidationError(f"{kind} needs --ring")
        ring = parse_ring_descriptor(args.ring)
        if kind == "yk":
            if args.k is None:
                raise ValidationError("yk needs --k")
            gen = y_matrix(ring, args.k)
            predicted = predicted_two_weight_distribution(ring.q, ring.m * args.k, args.k)
        elif kind == "oneweight":
            if args.profile is None:
                raise ValidationError("oneweight needs --profile")
            gen = one_weight_generator(ring, args.profile)
        else:
            if args.profile is None or args.t is None:
                raise ValidationError("optimal2w needs --profile and --t")
            gen = optimal_two_weight_code(ring, args.profile, args.t)
            k = sum((ring.m - i) * x for i, x in enumerate(args.profile))
            predicted = predicted_two_weight_distribution(ring.q, k, args.t)
    _write(format_matrix(gen), args.out)
    summary = {"rows": gen.rows, "cols": gen.cols}
    if predicted is not None:
        summary["predicted_distribution"] = [[w, c] for w, c in sorted(predicted.items())]
    # the matrix owns stdout unless it went to a file
    _emit(summary, "json", sys.stdout if args.out else sys.stderr)
    return 0


def cmd_analyze(args) -> int:
    gen = read_matrix(args.matrix)
    _emit(analyze_code(gen, gray=args.gray, minimal=args.minimal), args.format)
    return 0


def cmd_gray(args) -> int:
    gen = read_matrix(args.matrix)
    image = gray_image(span(gen))
    if args.out:
        _write(format_image(image.vectors), args.out)
    record = analyze_code(gen)
    record.update(gray_record(image))
    _emit(record, args.format)
    return 0


def cmd_graph(args) -> int:
    if args.mode == "coset":
        if args.gen is None or args.weight is None:
            raise ValidationError("coset graph needs --gen and --weight")
        g = coset_graph(span(read_matrix(args.gen)), args.weight)
    else:
        if args.pcheck is None:
            raise ValidationError("syndrome graph needs --pcheck")
        g = syndrome_graph(read_matrix(args.pcheck))
    if args.adjacency:
        _write(format_adjacency(g), args.adjacency)
    _emit(graph_record(g, swrg=args.swrg), args.format)
    return 0


def cmd_tss(args) -> int:
    if (args.omega is None) == (args.from_pcheck is None):
        raise ValidationError("give exactly one of an Omega file or --from-pcheck")
    if args.omega is not None:
        mat = read_matrix(args.omega)
        omega = OmegaSet(mat.ring, mat.columns)
    else:
        omega = omega_from_columns(read_matrix(args.from_pcheck))
    _emit(tss_report(omega, args.extend), args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chaincodes", description="Few-weight codes over finite chain rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("table", "json"), default="json")

    p = sub.add_parser("ring-info", help="describe a chain ring")
    p.add_argument("--ring", required=True)
    fmt(p)
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("construct", help="emit a generator matrix")
    p.add_argument("kind", choices=("yk", "oneweight", "extend", "optimal2w"))
    p.add_argument("--ring")
    p.add_argument("--k", type=int)
    p.add_argument("--profile", type=_int_list)
    p.add_argument("--t", type=int)
    p.add_argument("--gen")
    p.add_argument("--m0", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="weights, type and optimality of a code")
    p.add_argument("matrix")
    p.add_argument("--gray", action="store_true")
    p.add_argument("--minimal", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gray", help="Gray image of a code")
    p.add_argument("matrix")
    p.add_argument("--out", help="write the image vectors here")
    fmt(p)
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("graph", help="coset or syndrome graph")
    p.add_argument("mode", choices=("coset", "syndrome"))
    p.add_argument("--gen")
    p.add_argument("--weight", type=int)
    p.add_argument("--pcheck")
    p.add_argument("--swrg", action="store_true")
    p.add_argument("--adjacency", help="write the adjacency list here")
    fmt(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("tss", help="triple-sum-set test")
    p.add_argument("omega", nargs="?", help="matrix file whose columns are the Omega vectors")
    p.add_argument("--from-pcheck")
    p.add_argument("--extend", type=int)
    fmt(p)
    p.set_defaults(func=cmd_tss)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ChainCodeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
